use std::sync::Arc;

use crate::exactmath::{harmonic, harmonic_second, int, Poly, Rational};
use crate::sequences::global;

pub(crate) fn bn(n: usize) -> Rational {
    global().bernoulli(n)
}

pub(crate) fn e0(n: usize) -> Rational {
    global().euler_at_zero(n)
}

pub(crate) fn bx(n: usize) -> Arc<Poly> {
    global().bernoulli_poly(n)
}

pub(crate) fn ex(n: usize) -> Arc<Poly> {
    global().euler_poly(n)
}

pub(crate) fn constant(c: Rational) -> Poly {
    Poly::constant(c)
}

pub(crate) fn frac(n: usize) -> Rational {
    int(n as i64)
}

pub(crate) fn inv(n: usize) -> Rational {
    int(n as i64).recip()
}

/// `p · q` scaled by `c`, accumulated into `acc`.
pub(crate) fn add_product(acc: &mut Poly, c: &Rational, p: &Poly, q: &Poly) {
    if !c.eq(&int(0)) {
        acc.add_scaled(c, &(p * q));
    }
}

/// `H_0..=H_n` and `H^{(2)}_0..=H^{(2)}_n`.
pub(crate) struct Harmonics {
    first: Vec<Rational>,
    second: Vec<Rational>,
}

impl Harmonics {
    pub(crate) fn new(n: usize) -> Self {
        let mut first = vec![harmonic(0)];
        let mut second = vec![harmonic_second(0)];
        for j in 1..=n {
            first.push(&first[j - 1] + inv(j));
            second.push(&second[j - 1] + inv(j * j));
        }
        Harmonics { first, second }
    }

    pub(crate) fn h(&self, n: usize) -> &Rational {
        &self.first[n]
    }

    pub(crate) fn h2(&self, n: usize) -> &Rational {
        &self.second[n]
    }
}
