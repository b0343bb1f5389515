use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{big, int, Rational};
use super::ExactMathError;

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial_int(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: usize, k: i64) -> Rational {
    big(binomial_int(n, k))
}

/// `n! / ∏ parts_i!`; the parts must sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<Rational, ExactMathError> {
    if parts.iter().sum::<usize>() != n {
        return Err(ExactMathError::MalformedComposition {
            n,
            parts: parts.to_vec(),
        });
    }
    // Product of binomials keeps every intermediate an integer.
    let mut remaining = n;
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial_int(remaining, p as i64);
        remaining -= p;
    }
    Ok(big(acc))
}

/// Rising factorial `z(z+1)…(z+k-1)`, equal to one for `k = 0`.
pub fn pochhammer(z: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = z.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// `Γ(z + m) / Γ(z)` for any integer `m`: the Pochhammer symbol for `m ≥ 0`
/// and `1 / (z+m)_{-m}` below zero.
///
/// Panics when a negative `m` crosses a pole of the gamma function.
pub fn gamma_ratio(z: &Rational, m: i64) -> Rational {
    if m >= 0 {
        pochhammer(z, m as usize)
    } else {
        let denom = pochhammer(&(z + int(m)), (-m) as usize);
        assert!(!denom.is_zero(), "gamma ratio crosses a pole at z = {z}");
        denom.recip()
    }
}

/// `H_n = Σ_{j=1..n} 1/j`.
pub fn harmonic(n: usize) -> Rational {
    (1..=n).map(|j| int(j as i64).recip()).sum()
}

/// `H_{a,n} = Σ_{j=0..n-1} 1/(j+a)` for `a > 0`.
pub fn harmonic_shifted(a: &Rational, n: usize) -> Result<Rational, ExactMathError> {
    if !a.is_positive() {
        return Err(ExactMathError::NonPositiveShift(a.to_string()));
    }
    Ok((0..n).map(|j| (int(j as i64) + a).recip()).sum())
}

/// `H^{(2)}_n = Σ_{j=1..n} 1/j²`.
pub fn harmonic_second(n: usize) -> Rational {
    (1..=n).map(|j| int((j * j) as i64).recip()).sum()
}

/// A weak composition: `k` ordered non-negative parts summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }
}

/// Lexicographic stream of the weak compositions of `n` into `k` parts,
/// starting from `(0, …, 0, n)`.
#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

pub fn compositions(n: usize, k: usize) -> Compositions {
    assert!(k >= 1, "compositions need at least one part");
    let mut first = vec![0; k];
    first[k - 1] = n;
    Compositions { next: Some(first) }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        let k = current.len();
        // Rightmost position (excluding the last) with mass somewhere after it.
        let mut tail = current[k - 1];
        let mut succ = None;
        for i in (0..k.saturating_sub(1)).rev() {
            if tail > 0 {
                let mut p = current.clone();
                p[i] += 1;
                for slot in &mut p[i + 1..] {
                    *slot = 0;
                }
                p[k - 1] = tail - 1;
                succ = Some(p);
                break;
            }
            tail += current[i];
        }
        self.next = succ;
        Some(Composition { parts: current })
    }
}

/// Bitmasks over `{0..k}` with exactly `size` bits set, ascending.
pub fn subsets_of_size(k: usize, size: usize) -> impl Iterator<Item = u32> {
    assert!(k < 32);
    (0u32..(1u32 << k)).filter(move |m| m.count_ones() as usize == size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use proptest::prelude::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(6, 2), int(15));
        assert_eq!(binomial(9, 0), int(1));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(3, 4), int(0));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(4, &[2, 1, 1]).unwrap(), int(12));
        assert_eq!(multinomial(3, &[1, 1, 1]).unwrap(), int(6));
        assert_eq!(multinomial(7, &[7]).unwrap(), int(1));
        assert!(matches!(
            multinomial(4, &[2, 1]),
            Err(ExactMathError::MalformedComposition { .. })
        ));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&int(1), 5), big(factorial(5)));
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(pochhammer(&rat(-7, 3), 0), int(1));
        assert_eq!(gamma_ratio(&int(5), -1), rat(1, 4));
        assert_eq!(gamma_ratio(&rat(1, 2), 2), rat(3, 4));
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(4), rat(25, 12));
        assert_eq!(harmonic_shifted(&int(2), 3).unwrap(), rat(13, 12));
        assert_eq!(harmonic_second(2), rat(5, 4));
        assert!(harmonic_shifted(&int(0), 3).is_err());
        assert!(harmonic_shifted(&rat(-1, 2), 3).is_err());
        for n in 0..12 {
            assert_eq!(harmonic_shifted(&int(1), n).unwrap(), harmonic(n));
        }
    }

    #[test]
    fn composition_order() {
        let got: Vec<_> = compositions(2, 2).map(Composition::into_parts).collect();
        assert_eq!(got, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let got: Vec<_> = compositions(0, 3).map(Composition::into_parts).collect();
        assert_eq!(got, vec![vec![0, 0, 0]]);
        assert_eq!(compositions(5, 3).count(), 21);
        assert_eq!(compositions(4, 1).count(), 1);
    }

    #[test]
    fn subsets() {
        let got: Vec<_> = subsets_of_size(3, 2).collect();
        assert_eq!(got, vec![0b011, 0b101, 0b110]);
        assert_eq!(subsets_of_size(4, 0).count(), 1);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn pochhammer_recurrence(z in small_rational(), k in 0usize..12) {
            let next = pochhammer(&z, k + 1);
            prop_assert_eq!(next, pochhammer(&z, k) * (z + int(k as i64)));
        }

        #[test]
        fn harmonic_recurrence(num in 1i64..50, den in 1i64..9, n in 0usize..20) {
            let a = rat(num, den);
            let step = harmonic_shifted(&a, n + 1).unwrap() - harmonic_shifted(&a, n).unwrap();
            prop_assert_eq!(step, (int(n as i64) + a).recip());
        }

        #[test]
        fn multinomial_two_parts_is_binomial(n in 0usize..40, k in 0usize..40) {
            prop_assume!(k <= n);
            prop_assert_eq!(multinomial(n, &[k, n - k]).unwrap(), binomial(n, k as i64));
        }

        #[test]
        fn compositions_complete(n in 0usize..9, k in 1usize..5) {
            let all: Vec<_> = compositions(n, k).collect();
            prop_assert_eq!(all.len(), binomial_int(n + k - 1, k as i64 - 1).try_into().unwrap_or(0usize));
            prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(all.iter().all(|c| c.n() == n && c.k() == k));
            let total: Rational = all.iter().map(|c| multinomial(n, c.parts()).unwrap()).sum();
            prop_assert_eq!(total, big(BigInt::from(k).pow(n as u32)));
        }
    }
}
