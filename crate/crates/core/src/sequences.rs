//! Memoized Bernoulli, Euler and Genocchi numbers and the Bernoulli and Euler
//! polynomials.
//!
//! Bernoulli numbers come from the recurrence `Σ_{j=0}^{n} C(n+1, j) B_j = 0`.
//! Euler data is bootstrapped from them: `E_n(0) = G_{n+1}/(n+1)` with
//! `G_n = 2(1 - 2^n) B_n`, then `E_n = 2^n E_n(1/2)`, and finally
//! `E_n(x) = Σ_j C(n, j) (E_j / 2^j) (x - 1/2)^{n-j}`.

use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactmath::{big, binomial, int, rat, Poly, Rational};

#[derive(Debug, Default)]
struct Tables {
    bernoulli_numbers: Vec<Rational>,
    genocchi_numbers: Vec<Rational>,
    euler_at_zero: Vec<Rational>,
    euler_numbers: Vec<Rational>,
    bernoulli_polys: Vec<Arc<Poly>>,
    euler_polys: Vec<Arc<Poly>>,
}

/// Growable, append-only tables shared between threads: readers take a
/// shared lock, filling takes the exclusive lock and extends every table that
/// is too short. Entries never change once written.
#[derive(Debug, Default)]
pub struct SequenceCache {
    tables: RwLock<Tables>,
}

static GLOBAL: LazyLock<SequenceCache> = LazyLock::new(SequenceCache::new);

/// The process-wide cache used by the free functions in this module.
pub fn global() -> &'static SequenceCache {
    &GLOBAL
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn read<T>(&self, n: usize, get: impl Fn(&Tables) -> Option<T>) -> T {
        if let Some(v) = get(&self.tables.read().expect("sequence cache poisoned")) {
            return v;
        }
        let mut t = self.tables.write().expect("sequence cache poisoned");
        t.fill(n);
        get(&t).expect("filled table must contain the entry")
    }

    pub fn bernoulli(&self, n: usize) -> Rational {
        self.read(n, |t| t.bernoulli_numbers.get(n).cloned())
    }

    pub fn genocchi(&self, n: usize) -> Rational {
        self.read(n, |t| t.genocchi_numbers.get(n).cloned())
    }

    pub fn euler(&self, n: usize) -> Rational {
        self.read(n, |t| t.euler_numbers.get(n).cloned())
    }

    pub fn euler_at_zero(&self, n: usize) -> Rational {
        self.read(n, |t| t.euler_at_zero.get(n).cloned())
    }

    pub fn bernoulli_poly(&self, n: usize) -> Arc<Poly> {
        self.read(n, |t| t.bernoulli_polys.get(n).cloned())
    }

    pub fn euler_poly(&self, n: usize) -> Arc<Poly> {
        self.read(n, |t| t.euler_polys.get(n).cloned())
    }

    /// Fills every table through index `n`.
    pub fn warm(&self, n: usize) {
        self.tables.write().expect("sequence cache poisoned").fill(n);
    }
}

impl Tables {
    fn fill(&mut self, n: usize) {
        // E_n(0) needs G_{n+1}, hence B_{n+1}.
        while self.bernoulli_numbers.len() <= n + 1 {
            let m = self.bernoulli_numbers.len();
            let b = if m == 0 {
                Rational::one()
            } else {
                let s: Rational = self
                    .bernoulli_numbers
                    .iter()
                    .enumerate()
                    .map(|(j, bj)| binomial(m + 1, j as i64) * bj)
                    .sum();
                -s / int(m as i64 + 1)
            };
            self.bernoulli_numbers.push(b);
        }
        while self.genocchi_numbers.len() <= n + 1 {
            let m = self.genocchi_numbers.len();
            let two_m = big(BigInt::one() << m);
            let g = (int(1) - two_m) * int(2) * &self.bernoulli_numbers[m];
            self.genocchi_numbers.push(g);
        }
        while self.euler_at_zero.len() <= n {
            let m = self.euler_at_zero.len();
            let e0 = &self.genocchi_numbers[m + 1] / int(m as i64 + 1);
            self.euler_at_zero.push(e0);
        }
        while self.euler_numbers.len() <= n {
            // E_m = 2^m E_m(1/2) = Σ_i C(m, i) E_i(0) 2^i.
            let m = self.euler_numbers.len();
            let e: Rational = (0..=m)
                .map(|i| binomial(m, i as i64) * &self.euler_at_zero[i] * big(BigInt::one() << i))
                .sum();
            self.euler_numbers.push(e);
        }
        while self.bernoulli_polys.len() <= n {
            let m = self.bernoulli_polys.len();
            let coeffs = (0..=m)
                .map(|i| binomial(m, (m - i) as i64) * &self.bernoulli_numbers[m - i])
                .collect();
            self.bernoulli_polys.push(Arc::new(Poly::from_coeffs(coeffs)));
        }
        while self.euler_polys.len() <= n {
            // Build Σ_j C(m, j) E_j/2^j y^{m-j} in y = x - 1/2, then substitute back.
            let m = self.euler_polys.len();
            let coeffs = (0..=m)
                .map(|i| {
                    let j = m - i;
                    binomial(m, j as i64) * &self.euler_numbers[j] / big(BigInt::one() << j)
                })
                .collect();
            let in_y = Poly::from_coeffs(coeffs);
            self.euler_polys.push(Arc::new(in_y.shift(&rat(-1, 2))));
        }
    }
}

pub fn bernoulli_number(n: usize) -> Rational {
    global().bernoulli(n)
}

/// `G_n = 2(1 - 2^n) B_n`, always an integer.
pub fn genocchi_number(n: usize) -> Rational {
    global().genocchi(n)
}

pub fn euler_number(n: usize) -> Rational {
    global().euler(n)
}

pub fn bernoulli_poly(n: usize) -> Arc<Poly> {
    global().bernoulli_poly(n)
}

pub fn euler_poly(n: usize) -> Arc<Poly> {
    global().euler_poly(n)
}

/// `E_n(0) = G_{n+1} / (n+1)`.
pub fn euler_poly_at_zero(n: usize) -> Rational {
    global().euler_at_zero(n)
}

/// `true` if the rational is an integer; used for the Genocchi/Euler checks.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one() || r.is_zero()
}
