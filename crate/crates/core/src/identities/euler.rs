use crate::exactmath::{binomial, int, Poly, Rational};

use super::helpers::{add_product, bx, constant, e0, ex, frac, inv, Harmonics};
use super::{IdentityError, Inputs, Sides};

/// `E_l(x)/l · E_{n-l}(x)/(n-l) − E_l(0)/l · E_{n-l}(0)/(n-l)`.
fn centered_pair(n: usize, l: usize) -> Poly {
    let w = inv(l * (n - l));
    let mut out = Poly::zero();
    add_product(&mut out, &w, &ex(l), &ex(n - l));
    out.add_scaled(&(-w * e0(l) * e0(n - l)), &Poly::one());
    out
}

pub(super) fn corollary10(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let h = Harmonics::new(n);
    let mut lhs = Poly::zero();
    for l in 1..n.saturating_sub(1) {
        add_product(&mut lhs, &inv(l * (n - l - 1)), &ex(l), &ex(n - l - 1));
    }
    let mut sum = Poly::zero();
    for l in 1..n {
        let c = int(4) * binomial(n - 2, l as i64 - 1) * h.h(l - 1) * e0(l) * inv(l * (n - l));
        sum.add_scaled(&c, &bx(n - l));
    }
    Ok(Sides::new(
        lhs,
        vec![
            sum,
            ex(n - 1).scale(&(int(2) * h.h(n - 2) * inv(n - 1))),
            constant(int(4) * h.h(n - 1) * inv(n - 1) * e0(n) * inv(n)),
        ],
    ))
}

pub(super) fn corollary10b(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let h = Harmonics::new(n);
    let mix = |m: usize| -> Rational { h.h(m) * h.h(m) + int(3) * h.h2(m) };
    let mut lhs = Poly::zero();
    for l in 1..n {
        let c = (h.h(n - 1) - h.h(l - 1)) * inv(l * (n - l));
        add_product(&mut lhs, &c, &ex(l), &ex(n - l));
    }
    let mut sum = Poly::zero();
    for l in 1..=n {
        let c = binomial(n - 1, l as i64 - 1) * mix(l - 1) * e0(l) * inv(l * (n + 1 - l));
        sum.add_scaled(&c, &bx(n + 1 - l));
    }
    Ok(Sides::new(
        lhs,
        vec![
            ex(n).scale(&(mix(n - 1) * inv(2 * n))),
            sum,
            constant(mix(n) * inv(n) * e0(n + 1) * inv(n + 1)),
        ],
    ))
}

/// `Σ_{i+j+l=n; i,j,l≥1} C(n-1,i) w(i,j,l) E_i(x) E_j(0)/j · E_l(0)/l`.
fn euler_triple(n: usize, w: impl Fn(usize, usize, usize) -> Rational) -> Poly {
    let mut out = Poly::zero();
    for p in 1..n {
        for q in 1..n - p {
            let r = n - p - q;
            let c = binomial(n - 1, p as i64) * w(p, q, r) * e0(q) * inv(q) * e0(r) * inv(r);
            out.add_scaled(&c, &ex(p));
        }
    }
    out
}

pub(super) fn corollary11(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let h = Harmonics::new(n);
    let mut lhs = Poly::zero();
    for l in 1..n {
        lhs += &centered_pair(n, l);
    }
    Ok(Sides::new(
        lhs,
        vec![
            euler_triple(n, |_, _, _| int(1)),
            ex(n).scale(&(int(2) * h.h(n - 1) * inv(n))),
        ],
    ))
}

pub(super) fn corollary11b(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let h = Harmonics::new(n);
    let mut lhs = Poly::zero();
    for p in 1..n {
        for q in 1..n - p {
            let r = n - p - q;
            let prod = &(ex(p).as_ref() * ex(q).as_ref()) * ex(r).as_ref();
            lhs.add_scaled(&inv(p * q * r), &prod);
        }
    }
    let hn = h.h(n - 1);
    let lead = ex(n).scale(&(int(-2) * (hn * hn + int(2) * h.h2(n - 1)) * inv(n)));
    let triple = euler_triple(n, |_, q, r| h.h(q - 1) + h.h(r - 1) - int(3) * h.h(q + r - 1));
    let mut pairs = Poly::zero();
    for l in 1..n {
        let w = int(3) * hn - h.h(l - 1) - h.h(n - l - 1);
        pairs.add_scaled(&w, &centered_pair(n, l));
    }
    Ok(Sides::new(lhs.scale(&(frac(1) / int(3))), vec![lead, triple, pairs]))
}
