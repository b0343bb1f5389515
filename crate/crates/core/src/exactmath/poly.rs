use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::combinatorics::binomial;
use super::rational::{format_rational, int, Rational};

/// Dense univariate polynomial over the rationals; `coeffs[i]` multiplies `x^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `self += c · p` without materialising `c · p`.
    pub fn add_scaled(&mut self, c: &Rational, p: &Poly) {
        if c.is_zero() || p.is_zero() {
            return;
        }
        if self.coeffs.len() < p.coeffs.len() {
            self.coeffs.resize(p.coeffs.len(), Rational::zero());
        }
        for (slot, a) in self.coeffs.iter_mut().zip(&p.coeffs) {
            *slot += a * c;
        }
        self.trim();
    }

    /// `p(c·x)`.
    pub fn compose_linear(&self, c: &Rational) -> Poly {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return self.clone();
        }
        let len = self.coeffs.len();
        let mut out = vec![Rational::zero(); len];
        let powers: Vec<Rational> = std::iter::successors(Some(Rational::one()), |p| Some(p * c))
            .take(len)
            .collect();
        for (m, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate().take(m + 1) {
                *slot += a * binomial(m, i as i64) * &powers[m - i];
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * int(i as i64))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

pub fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    p * q
}

pub fn poly_eval(p: &Poly, x0: &Rational) -> Rational {
    p.eval(x0)
}

pub fn poly_compose_linear(p: &Poly, c: &Rational) -> Poly {
    p.compose_linear(c)
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        self.add_scaled(&Rational::one(), rhs);
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        self.add_scaled(&-Rational::one(), rhs);
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Mul<&Rational> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Rational) -> Poly {
        self.scale(rhs)
    }
}

impl Mul<Rational> for Poly {
    type Output = Poly;
    fn mul(self, rhs: Rational) -> Poly {
        self.scale(&rhs)
    }
}

impl fmt::Display for Poly {
    /// Highest power first, e.g. `x^2 - x + 1/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let coeff = format_rational(&mag);
            match (i, mag.is_one()) {
                (0, _) => f.write_str(&coeff)?,
                (_, true) => {}
                (_, false) if coeff.contains('/') => write!(f, "({coeff})")?,
                (_, false) => f.write_str(&coeff)?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use proptest::prelude::*;

    fn p(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn mul_square() {
        let q = p(&[(-1, 2), (1, 1)]);
        assert_eq!(poly_mul(&q, &q), p(&[(1, 4), (-1, 1), (1, 1)]));
    }

    #[test]
    fn compose_and_eval() {
        let b2 = p(&[(1, 6), (-1, 1), (1, 1)]);
        assert_eq!(poly_compose_linear(&b2, &int(2)), p(&[(1, 6), (-2, 1), (4, 1)]));
        assert_eq!(poly_eval(&b2, &rat(1, 2)), rat(-1, 12));
    }

    #[test]
    fn trimming_and_degree() {
        let z = p(&[(0, 1), (0, 1)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        let q = p(&[(1, 1), (2, 1)]);
        assert_eq!((&q - &q), Poly::zero());
        assert_eq!(q.degree(), Some(1));
    }

    #[test]
    fn shift_cube() {
        let cube = Poly::monomial(int(1), 3);
        assert_eq!(&cube.shift(&int(1)) - &cube, p(&[(1, 1), (3, 1), (3, 1)]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(1, 6), (-1, 1), (1, 1)]).to_string(), "x^2 - x + 1/6");
        assert_eq!(p(&[(0, 1), (-1, 6), (0, 1), (5, 3)]).to_string(), "(5/3)x^3 - (1/6)x");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[(-2, 1)]).to_string(), "-2");
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..20, 1i64..7), 0..7)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn eval_is_multiplicative(a in small_poly(), b in small_poly(), n in -9i64..9, d in 1i64..5) {
            let t = rat(n, d);
            prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
            prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
        }

        #[test]
        fn shift_and_compose_agree_with_eval(a in small_poly(), n in -9i64..9, d in 1i64..5) {
            let c = rat(n, d);
            let t = rat(3, 7);
            prop_assert_eq!(a.shift(&c).eval(&t), a.eval(&(&t + &c)));
            prop_assert_eq!(a.compose_linear(&c).eval(&t), a.eval(&(&t * &c)));
        }
    }
}
