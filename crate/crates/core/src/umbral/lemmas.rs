use num_traits::One;

use crate::exactmath::{factorial, big, int, subsets_of_size, Poly, Rational};

use super::expr::{umbral_compose, umbral_pow, Atom, SymbolId};
use super::UmbralError;

fn check_unit_sum(u: &[Rational]) -> Result<(), UmbralError> {
    if u.is_empty() {
        return Err(UmbralError::EmptyShifts);
    }
    let total: Rational = u.iter().sum();
    if !total.is_one() {
        return Err(UmbralError::ShiftsDoNotSumToOne(total.to_string()));
    }
    Ok(())
}

fn in_mask(mask: u32, i: usize) -> bool {
    mask & (1 << i) != 0
}

/// `x + lead + Σ_{i∉J} u_i S_i` with the `S_i` indexed from one; `lead` may be absent.
fn affine(
    u: &[Rational],
    excluded: u32,
    lead: Option<SymbolId>,
    symbol: fn(u32) -> SymbolId,
) -> Vec<(Rational, Atom)> {
    let mut out = vec![(Rational::one(), Atom::X)];
    if let Some(s) = lead {
        out.push((Rational::one(), s.into()));
    }
    for (i, ui) in u.iter().enumerate() {
        if !in_mask(excluded, i) {
            out.push((ui.clone(), symbol(i as u32 + 1).into()));
        }
    }
    out
}

fn u_product(u: &[Rational], mask: u32) -> Rational {
    u.iter()
        .enumerate()
        .filter(|(i, _)| in_mask(mask, *i))
        .map(|(_, v)| v.clone())
        .product()
}

/// Bernoulli-symbol expansion for `u_1+⋯+u_k = 1`:
/// `(x + Σ u_i ℬ_i)^n / n! = Σ_{∅≠J} u_J/(n+1-|J|)! · (x + ℬ_0 + (uℬ)_{J̄})^{n+1-|J|}`,
/// both sides evaluated to polynomials and compared.
pub fn verify_lemma2(u: &[Rational], n: usize) -> Result<bool, UmbralError> {
    check_unit_sum(u)?;
    let k = u.len();
    let lhs = umbral_pow(&affine(u, 0, None, SymbolId::bernoulli), n)
        .eval()
        .scale(&big(factorial(n)).recip());
    let mut rhs = Poly::zero();
    for j in 1..=k.min(n + 1) {
        let m = n + 1 - j;
        let weight = big(factorial(m)).recip();
        for mask in subsets_of_size(k, j) {
            let term = umbral_pow(&affine(u, mask, Some(SymbolId::bernoulli(0)), SymbolId::bernoulli), m);
            rhs.add_scaled(&(&weight * u_product(u, mask)), &term.eval());
        }
    }
    Ok(lhs == rhs)
}

/// Euler-symbol expansion for `u_1+⋯+u_k = 1`. Even `k`:
/// `(n+1)(x + Σ u_i ℰ_i)^n = Σ_{∅≠J} (-2)^{|J|} (x + ℬ + (uℰ)_{J̄})^{n+1}`;
/// odd `k`: `(x + Σ u_i ℰ_i)^n = Σ_{∅≠J} (-2)^{|J|-1} (x + ℰ_0 + (uℰ)_{J̄})^n`.
pub fn verify_lemma4(u: &[Rational], n: usize) -> Result<bool, UmbralError> {
    check_unit_sum(u)?;
    let k = u.len();
    let base = umbral_pow(&affine(u, 0, None, SymbolId::euler), n).eval();
    let even = k % 2 == 0;
    let (lhs, lead, power) = if even {
        (base.scale(&int(n as i64 + 1)), SymbolId::bernoulli(0), n + 1)
    } else {
        (base, SymbolId::euler(0), n)
    };
    let mut rhs = Poly::zero();
    for j in 1..=k {
        let sign = int(-2).pow(if even { j as i32 } else { j as i32 - 1 });
        for mask in subsets_of_size(k, j) {
            let term = umbral_pow(&affine(u, mask, Some(lead), SymbolId::euler), power);
            rhs.add_scaled(&sign, &term.eval());
        }
    }
    Ok(lhs == rhs)
}

/// `f(x + Σ u_i ℬ_i) = Σ_{∅≠J} u_J f^{(|J|-1)}(x + ℬ_0 + (uℬ)_{J̄})` for polynomial `f`.
pub fn verify_general_f(u: &[Rational], f: &Poly) -> Result<bool, UmbralError> {
    check_unit_sum(u)?;
    let k = u.len();
    let lhs = umbral_compose(f, &affine(u, 0, None, SymbolId::bernoulli)).eval();
    let mut rhs = Poly::zero();
    let mut derivative = f.clone();
    for j in 1..=k {
        if derivative.is_zero() {
            break;
        }
        for mask in subsets_of_size(k, j) {
            let term = umbral_compose(
                &derivative,
                &affine(u, mask, Some(SymbolId::bernoulli(0)), SymbolId::bernoulli),
            );
            rhs.add_scaled(&u_product(u, mask), &term.eval());
        }
        derivative = derivative.derivative();
    }
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnihilatingPair {
    /// `(ℬ, 𝒰)`
    BernoulliUniform,
    /// `(ℰ, 𝒱)`
    EulerDiscrete,
}

/// Evaluates `(S + T)^n` for the pair.
pub fn annihilation_value(pair: AnnihilatingPair, n: usize) -> Poly {
    let (s, t) = match pair {
        AnnihilatingPair::BernoulliUniform => (SymbolId::bernoulli(0), SymbolId::uniform(0)),
        AnnihilatingPair::EulerDiscrete => (SymbolId::euler(0), SymbolId::discrete(0)),
    };
    umbral_pow(&[(Rational::one(), s.into()), (Rational::one(), t.into())], n).eval()
}

/// `true` iff `(S + T)^n` evaluates to zero.
pub fn verify_annihilation(pair: AnnihilatingPair, n: usize) -> bool {
    annihilation_value(pair, n).is_zero()
}

/// `u · p'(x + u𝒰)` evaluated; equals `p(x+u) - p(x)`.
pub fn uniform_difference(p: &Poly, u: &Rational) -> Poly {
    let arg = [(Rational::one(), Atom::X), (u.clone(), SymbolId::uniform(0).into())];
    umbral_compose(&p.derivative(), &arg).eval().scale(u)
}

/// `p(x + u𝒱)` evaluated; equals `(p(x) + p(x+u))/2`.
pub fn discrete_uniform_shift(p: &Poly, u: &Rational) -> Poly {
    let arg = [(Rational::one(), Atom::X), (u.clone(), SymbolId::discrete(0).into())];
    umbral_compose(p, &arg).eval()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::umbral::{discrete_mean, forward_difference};

    #[test]
    fn lemma2_examples() {
        for n in 0..8 {
            assert!(verify_lemma2(&[rat(1, 2), rat(1, 2)], n).unwrap());
            assert!(verify_lemma2(&[int(1)], n).unwrap());
        }
        assert!(verify_lemma2(&[rat(1, 2), rat(1, 3), rat(1, 6)], 5).unwrap());
        assert!(verify_lemma2(&[rat(5, 2), rat(-3, 2)], 4).unwrap());
    }

    #[test]
    fn lemma2_two_term_example_spelled_out() {
        // (x+u1ℬ1+u2ℬ2)^n = u1(x+ℬ0+u2ℬ2)^n + u2(x+ℬ0+u1ℬ1)^n + u1u2 n (x+ℬ0)^{n-1}
        let (u1, u2) = (rat(2, 7), rat(5, 7));
        let n = 6;
        let (b0, b1, b2) = (SymbolId::bernoulli(0), SymbolId::bernoulli(1), SymbolId::bernoulli(2));
        let one = || Rational::one();
        let lhs = umbral_pow(&[(one(), Atom::X), (u1.clone(), b1.into()), (u2.clone(), b2.into())], n).eval();
        let t1 = umbral_pow(&[(one(), Atom::X), (one(), b0.into()), (u2.clone(), b2.into())], n).eval();
        let t2 = umbral_pow(&[(one(), Atom::X), (one(), b0.into()), (u1.clone(), b1.into())], n).eval();
        let t3 = umbral_pow(&[(one(), Atom::X), (one(), b0.into())], n - 1).eval();
        let rhs = &(&t1.scale(&u1) + &t2.scale(&u2)) + &t3.scale(&(&u1 * &u2 * int(n as i64)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lemma_rejects_bad_shifts() {
        assert!(matches!(
            verify_lemma2(&[rat(1, 2), rat(1, 3)], 3),
            Err(UmbralError::ShiftsDoNotSumToOne(_))
        ));
        assert!(matches!(verify_lemma4(&[], 3), Err(UmbralError::EmptyShifts)));
        assert!(verify_general_f(&[int(2)], &Poly::x()).is_err());
    }

    #[test]
    fn lemma4_examples() {
        for n in 0..6 {
            assert!(verify_lemma4(&[int(1)], n).unwrap());
        }
        assert!(verify_lemma4(&[rat(1, 2), rat(1, 2)], 3).unwrap());
        assert!(verify_lemma4(&[rat(1, 4), rat(1, 4), rat(1, 2)], 4).unwrap());
        assert!(verify_lemma4(&[rat(1, 4), rat(1, 4), rat(-1, 3), rat(5, 6)], 3).unwrap());
    }

    #[test]
    fn general_f_examples() {
        let f = Poly::from_coeffs(vec![int(0), int(1), int(0), int(1)]);
        assert!(verify_general_f(&[rat(1, 3), rat(2, 3)], &f).unwrap());
        assert!(verify_general_f(&[rat(1, 3), rat(2, 3)], &Poly::constant(rat(-7, 2))).unwrap());
        // x^n/n! reproduces the Bernoulli expansion.
        for n in 0..6 {
            let f = Poly::monomial(big(factorial(n)).recip(), n);
            let u = [rat(1, 5), rat(3, 10), rat(1, 2)];
            assert_eq!(verify_general_f(&u, &f).unwrap(), verify_lemma2(&u, n).unwrap());
        }
    }

    #[test]
    fn annihilation_examples() {
        assert!(verify_annihilation(AnnihilatingPair::BernoulliUniform, 5));
        assert!(verify_annihilation(AnnihilatingPair::BernoulliUniform, 1));
        assert!(verify_annihilation(AnnihilatingPair::EulerDiscrete, 1));
        assert_eq!(annihilation_value(AnnihilatingPair::EulerDiscrete, 0), Poly::one());
        for n in 1..=30 {
            assert!(verify_annihilation(AnnihilatingPair::BernoulliUniform, n));
            assert!(verify_annihilation(AnnihilatingPair::EulerDiscrete, n));
        }
    }

    #[test]
    fn difference_equations() {
        let p = Poly::from_coeffs(vec![rat(1, 3), int(-2), int(0), rat(5, 4), int(1), rat(-1, 9)]);
        for u in [rat(1, 2), int(3), rat(-7, 5)] {
            assert_eq!(uniform_difference(&p, &u), forward_difference(&p, &u));
            assert_eq!(discrete_uniform_shift(&p, &u), discrete_mean(&p, &u));
        }
    }
}
