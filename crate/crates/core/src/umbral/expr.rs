use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::exactmath::{compositions, int, multinomial, rat, Poly, Rational};
use crate::sequences::{self, SequenceCache};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolKind {
    /// `ℬ^n → B_n`
    Bernoulli,
    /// `ℰ^n → E_n(0)`
    Euler,
    /// `𝒰^n → 1/(n+1)`
    UniformContinuous,
    /// `𝒱^0 → 1`, `𝒱^n → 1/2` for `n ≥ 1`
    UniformDiscrete,
}

/// One umbral symbol; distinct `(kind, index)` pairs are independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolId {
    pub kind: SymbolKind,
    pub index: u32,
}

impl SymbolId {
    pub const fn new(kind: SymbolKind, index: u32) -> Self {
        SymbolId { kind, index }
    }

    pub const fn bernoulli(index: u32) -> Self {
        Self::new(SymbolKind::Bernoulli, index)
    }

    pub const fn euler(index: u32) -> Self {
        Self::new(SymbolKind::Euler, index)
    }

    pub const fn uniform(index: u32) -> Self {
        Self::new(SymbolKind::UniformContinuous, index)
    }

    pub const fn discrete(index: u32) -> Self {
        Self::new(SymbolKind::UniformDiscrete, index)
    }
}

/// An indeterminate of an umbral expression: the formal variable `x` or a symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    X,
    Symbol(SymbolId),
}

impl From<SymbolId> for Atom {
    fn from(s: SymbolId) -> Self {
        Atom::Symbol(s)
    }
}

/// Exponent vector: power of `x` plus the powers of each symbol present,
/// sorted by symbol with no zero exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    x: u32,
    symbols: Vec<(SymbolId, u32)>,
}

impl Monomial {
    pub fn x_power(&self) -> u32 {
        self.x
    }

    pub fn symbols(&self) -> &[(SymbolId, u32)] {
        &self.symbols
    }

    fn atom_power(atom: Atom, e: u32) -> Self {
        match atom {
            _ if e == 0 => Monomial::default(),
            Atom::X => Monomial { x: e, symbols: Vec::new() },
            Atom::Symbol(s) => Monomial { x: 0, symbols: vec![(s, e)] },
        }
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut symbols = Vec::with_capacity(self.symbols.len() + other.symbols.len());
        let (mut i, mut j) = (0, 0);
        while i < self.symbols.len() || j < other.symbols.len() {
            match (self.symbols.get(i), other.symbols.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    symbols.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    symbols.push((a, ea));
                    i += 1;
                }
                (Some(_), Some(&(b, eb))) | (None, Some(&(b, eb))) => {
                    symbols.push((b, eb));
                    j += 1;
                }
                (Some(&(a, ea)), None) => {
                    symbols.push((a, ea));
                    i += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial { x: self.x + other.x, symbols }
    }
}

/// Formal polynomial in `x` and umbral symbols with rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UmbralExpr {
    terms: BTreeMap<Monomial, Rational>,
}

impl UmbralExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(Monomial::default(), c);
        e
    }

    pub fn atom(atom: Atom) -> Self {
        let mut e = Self::zero();
        e.add_term(Monomial::atom_power(atom, 1), Rational::one());
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> UmbralExpr {
        let mut out = UmbralExpr::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// Replaces symbol powers by moments, symbols evaluating independently;
    /// `x` stays formal.
    pub fn eval_with(&self, cache: &SequenceCache) -> Poly {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(s, e) in &m.symbols {
                value *= moment(cache, s.kind, e as usize);
                if value.is_zero() {
                    break;
                }
            }
            let d = m.x as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] += value;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn eval(&self) -> Poly {
        self.eval_with(sequences::global())
    }
}

/// `n`-th moment of a symbol kind.
pub fn moment(cache: &SequenceCache, kind: SymbolKind, n: usize) -> Rational {
    match kind {
        SymbolKind::Bernoulli => cache.bernoulli(n),
        SymbolKind::Euler => cache.euler_at_zero(n),
        SymbolKind::UniformContinuous => int(n as i64 + 1).recip(),
        SymbolKind::UniformDiscrete if n == 0 => Rational::one(),
        SymbolKind::UniformDiscrete => rat(1, 2),
    }
}

impl Add for &UmbralExpr {
    type Output = UmbralExpr;
    fn add(self, rhs: &UmbralExpr) -> UmbralExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Mul for &UmbralExpr {
    type Output = UmbralExpr;
    fn mul(self, rhs: &UmbralExpr) -> UmbralExpr {
        let mut out = UmbralExpr::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

/// Merges repeated atoms and drops zero coefficients.
fn normalize_affine(affine: &[(Rational, Atom)]) -> Vec<(Rational, Atom)> {
    let mut merged: BTreeMap<Atom, Rational> = BTreeMap::new();
    for (c, a) in affine {
        *merged.entry(*a).or_insert_with(Rational::zero) += c;
    }
    merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(a, c)| (c, a))
        .collect()
}

/// `(Σ c_i a_i)^n`, fully expanded by the multinomial theorem.
pub fn umbral_pow(affine: &[(Rational, Atom)], n: usize) -> UmbralExpr {
    let affine = normalize_affine(affine);
    if affine.is_empty() {
        return if n == 0 {
            UmbralExpr::constant(Rational::one())
        } else {
            UmbralExpr::zero()
        };
    }
    let powers: Vec<Vec<Rational>> = affine
        .iter()
        .map(|(c, _)| {
            std::iter::successors(Some(Rational::one()), |p| Some(p * c))
                .take(n + 1)
                .collect()
        })
        .collect();
    let mut out = UmbralExpr::zero();
    for comp in compositions(n, affine.len()) {
        let parts = comp.parts();
        let mut coeff = multinomial(n, parts).expect("composition sums to n");
        let mut mono = Monomial::default();
        for (i, &l) in parts.iter().enumerate() {
            coeff *= &powers[i][l];
            mono = mono.times(&Monomial::atom_power(affine[i].1, l as u32));
        }
        out.add_term(mono, coeff);
    }
    out
}

/// `f(Σ c_i a_i)` for a polynomial `f`.
pub fn umbral_compose(f: &Poly, affine: &[(Rational, Atom)]) -> UmbralExpr {
    let mut out = UmbralExpr::zero();
    for (m, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = &out + &umbral_pow(affine, m).scale(c);
        }
    }
    out
}

pub fn umbral_eval(e: &UmbralExpr) -> Poly {
    e.eval()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{bernoulli_poly, euler_poly};

    fn x() -> (Rational, Atom) {
        (int(1), Atom::X)
    }

    fn sym(c: Rational, s: SymbolId) -> (Rational, Atom) {
        (c, Atom::Symbol(s))
    }

    #[test]
    fn pow_examples() {
        let u = SymbolId::uniform(0);
        let e = umbral_pow(&[x(), sym(int(1), u)], 1);
        assert_eq!(e, &UmbralExpr::atom(Atom::X) + &UmbralExpr::atom(u.into()));

        let b = SymbolId::bernoulli(0);
        let sq = umbral_pow(&[sym(int(1), b)], 2);
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.eval(), Poly::constant(rat(1, 6)));

        let (b1, b2) = (SymbolId::bernoulli(1), SymbolId::bernoulli(2));
        let e = umbral_pow(&[x(), sym(rat(1, 2), b1), sym(rat(1, 2), b2)], 2);
        let xe = UmbralExpr::atom(Atom::X);
        let e1 = UmbralExpr::atom(b1.into());
        let e2 = UmbralExpr::atom(b2.into());
        let expected = [
            &xe * &xe,
            &xe * &e1,
            &xe * &e2,
            (&e1 * &e1).scale(&rat(1, 4)),
            (&e1 * &e2).scale(&rat(1, 2)),
            (&e2 * &e2).scale(&rat(1, 4)),
        ]
        .iter()
        .fold(UmbralExpr::zero(), |acc, t| &acc + t);
        assert_eq!(e, expected);
        // Same result by repeated multiplication.
        let lin = umbral_pow(&[x(), sym(rat(1, 2), b1), sym(rat(1, 2), b2)], 1);
        assert_eq!(e, &lin * &lin);
    }

    #[test]
    fn eval_examples() {
        let b = SymbolId::bernoulli(0);
        assert_eq!(umbral_pow(&[sym(int(1), b)], 2).eval(), Poly::constant(rat(1, 6)));
        let u = SymbolId::uniform(0);
        assert_eq!(umbral_pow(&[sym(int(1), u)], 3).eval(), Poly::constant(rat(1, 4)));
        let (b1, b2) = (SymbolId::bernoulli(1), SymbolId::bernoulli(2));
        let e = &umbral_pow(&[sym(int(1), b1)], 2) * &umbral_pow(&[sym(int(1), b2)], 4);
        assert_eq!(e.eval(), Poly::constant(rat(-1, 180)));
    }

    #[test]
    fn shift_correspondence() {
        for n in 0..=20 {
            let b = umbral_pow(&[x(), sym(int(1), SymbolId::bernoulli(0))], n);
            assert_eq!(b.eval(), *bernoulli_poly(n));
            let e = umbral_pow(&[x(), sym(int(1), SymbolId::euler(0))], n);
            assert_eq!(e.eval(), *euler_poly(n));
        }
    }

    #[test]
    fn repeated_atoms_merge() {
        let b = SymbolId::bernoulli(3);
        let e = umbral_pow(&[sym(rat(1, 3), b), sym(rat(2, 3), b)], 4);
        assert_eq!(e, umbral_pow(&[sym(int(1), b)], 4));
        assert_eq!(umbral_pow(&[sym(int(1), b), sym(int(-1), b)], 0).eval(), Poly::one());
        assert!(umbral_pow(&[sym(int(1), b), sym(int(-1), b)], 3).is_empty());
    }

    #[test]
    fn evaluation_is_multiplicative_across_independent_symbols() {
        let (b1, e2, v3) = (SymbolId::bernoulli(1), SymbolId::euler(2), SymbolId::discrete(3));
        let p = umbral_pow(&[x(), sym(rat(2, 3), b1)], 5);
        let q = umbral_pow(&[sym(rat(-1, 2), e2), sym(int(3), v3)], 4);
        // q has no x, so its evaluation is a constant that factors out.
        assert_eq!((&p * &q).eval(), &p.eval() * &q.eval());
        let sum = &p + &q;
        assert_eq!(sum.eval(), &p.eval() + &q.eval());
    }
}
