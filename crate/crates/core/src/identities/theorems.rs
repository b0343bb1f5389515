use num_traits::Zero;

use crate::exactmath::{
    binomial, compositions, factorial, big, int, multinomial, pochhammer, subsets_of_size, Poly,
    Rational,
};

use super::helpers::{add_product, bn, bx, constant, e0, ex, frac, inv};
use super::{IdentityError, Inputs, Sides};

fn product<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut out = Poly::one();
    for p in polys {
        out = &out * p;
    }
    out
}

fn complement(k: usize, mask: u32) -> Vec<usize> {
    (0..k).filter(|i| mask & (1 << i) == 0).collect()
}

pub(super) fn theorem1(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, a, b) = (i.n, i.a_val(), i.b_val());
    let s = a + b;
    let mut lhs = Poly::zero();
    let mut sum = Poly::zero();
    for l in 0..=n {
        let c = binomial(n, l as i64) * pochhammer(a, l) * pochhammer(b, n - l) / pochhammer(&s, n);
        add_product(&mut lhs, &c, &bx(l), &bx(n - l));
        let w = binomial(n, l as i64) * (a * pochhammer(b, l) + b * pochhammer(a, l))
            / pochhammer(&s, l + 1)
            * bn(l);
        sum.add_scaled(&w, &bx(n - l));
    }
    let tail = bx(n - 1).scale(&(a * b / ((&s + int(1)) * &s) * frac(n)));
    Ok(Sides::new(lhs, vec![sum, tail]))
}

/// `Σ_{l_1+⋯+l_k=n} multinomial · ∏(a_i)_{l_i}/(Σa)_n · ∏ P_{l_i}(x)`.
fn weighted_lhs(n: usize, a: &[Rational], poly: fn(usize) -> std::sync::Arc<Poly>) -> Result<Poly, IdentityError> {
    let s: Rational = a.iter().sum();
    let denom = pochhammer(&s, n);
    let mut lhs = Poly::zero();
    for comp in compositions(n, a.len()) {
        let mut c = multinomial(n, comp.parts())?;
        for (ai, &l) in a.iter().zip(comp.parts()) {
            c *= pochhammer(ai, l);
        }
        let polys: Vec<_> = comp.parts().iter().map(|&l| poly(l)).collect();
        lhs.add_scaled(&(c / &denom), &product(polys.iter().map(|p| p.as_ref())));
    }
    Ok(lhs)
}

/// Sum over compositions `l_0+l_1+⋯+l_r = m` of
/// `multinomial · ∏_{i≥1} (a_{c_i})_{l_i} moment(l_i) / (Σa)_{top-l_0} · P_{l_0}(x)`.
fn tail_sum(
    m: usize,
    top: usize,
    a: &[Rational],
    comp_idx: &[usize],
    moment: fn(usize) -> Rational,
    poly: fn(usize) -> std::sync::Arc<Poly>,
) -> Result<Poly, IdentityError> {
    let s: Rational = a.iter().sum();
    let mut out = Poly::zero();
    for comp in compositions(m, comp_idx.len() + 1) {
        let parts = comp.parts();
        let mut c = multinomial(m, parts)?;
        for (&idx, &l) in comp_idx.iter().zip(&parts[1..]) {
            c *= pochhammer(&a[idx], l) * moment(l);
        }
        if c.is_zero() {
            continue;
        }
        c /= pochhammer(&s, top - parts[0]);
        out.add_scaled(&c, &poly(parts[0]));
    }
    Ok(out)
}

fn ex_poly(n: usize) -> std::sync::Arc<Poly> {
    ex(n)
}

fn bx_poly(n: usize) -> std::sync::Arc<Poly> {
    bx(n)
}

/// Right-hand terms are grouped by `|J|`.
pub(super) fn theorem2(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, a) = (i.n, i.a_vec_or_empty());
    let k = a.len();
    let lhs = weighted_lhs(n, a, bx_poly)?;
    let mut rhs = Vec::new();
    for j in 1..=k.min(n + 1) {
        let m = n + 1 - j;
        let ratio = big(factorial(n)) / big(factorial(m));
        let mut group = Poly::zero();
        for mask in subsets_of_size(k, j) {
            let a_j: Rational = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| a[i].clone()).product();
            let t = tail_sum(m, n + 1, a, &complement(k, mask), bn, bx_poly)?;
            group.add_scaled(&(a_j * &ratio), &t);
        }
        rhs.push(group);
    }
    Ok(Sides::new(lhs, rhs))
}

pub(super) fn theorem3(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, a, b) = (i.n, i.a_val(), i.b_val());
    let s = a + b;
    let mut lhs = Poly::zero();
    for l in 0..=n {
        let c = binomial(n, l as i64) * pochhammer(a, l) * pochhammer(b, n - l) / pochhammer(&s, n);
        add_product(&mut lhs, &c, &ex(l), &ex(n - l));
    }
    let lead = bx(n + 1).scale(&(int(4) * inv(n + 1)));
    let mut sum = Poly::zero();
    for l in 0..=n + 1 {
        let c = -int(2) * inv(n + 1) * binomial(n + 1, l as i64) * (pochhammer(a, l) + pochhammer(b, l))
            / pochhammer(&s, l)
            * e0(l);
        sum.add_scaled(&c, &bx(n + 1 - l));
    }
    Ok(Sides::new(lhs, vec![lead, sum]))
}

pub(super) fn theorem4(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, a) = (i.n, i.a_vec_or_empty());
    let k = a.len();
    let lhs = weighted_lhs(n, a, ex_poly)?;
    let even = k % 2 == 0;
    let mut rhs = Vec::new();
    for j in 1..=k {
        let (m, weight, poly): (usize, Rational, fn(usize) -> std::sync::Arc<Poly>) = if even {
            (n + 1, int(-2).pow(j as i32) * inv(n + 1), bx_poly)
        } else {
            (n, int(-2).pow(j as i32 - 1), ex_poly)
        };
        let mut group = Poly::zero();
        for mask in subsets_of_size(k, j) {
            group += &tail_sum(m, m, a, &complement(k, mask), e0, poly)?;
        }
        rhs.push(group.scale(&weight));
    }
    Ok(Sides::new(lhs, rhs))
}

/// Third-order convolution with unit weights, `n ≥ 3`.
pub(super) fn eq_4_0a(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = Poly::zero();
    let mut first = Poly::zero();
    for p in 0..=n {
        for q in 0..=n - p {
            let r = n - p - q;
            lhs += &(&(bx(p).as_ref() * bx(q).as_ref()) * bx(r).as_ref());
            first.add_scaled(&(int(3) * binomial(n + 3, p as i64) * bn(q) * bn(r)), &bx(p));
        }
    }
    let mut second = Poly::zero();
    for p in 0..n {
        second.add_scaled(&(int(3) * binomial(n + 3, p as i64) * bn(n - 1 - p)), &bx(p));
    }
    let third = bx(n - 2).scale(&binomial(n + 3, 5));
    Ok(Sides::new(lhs.scale(&frac(n + 3)), vec![first, second, third]))
}

/// Number-level `k`-th order convolution of Bernoulli numbers.
pub(super) fn kth_matiyasevich(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, k) = (i.n, i.k_val());
    let prod = |parts: &[usize]| -> Rational { parts.iter().map(|&l| bn(l)).product() };
    let lhs: Rational = compositions(n, k).map(|c| prod(c.parts())).sum();
    let mut rhs = Vec::new();
    for j in 1..=k.min(n + 1) {
        let m = n + 1 - j;
        let inner: Rational = compositions(m, k - j + 1)
            .map(|c| binomial(n + k, c.parts()[0] as i64) * prod(c.parts()))
            .sum();
        rhs.push(constant(inner * binomial(k, j as i64) * inv(n + k)));
    }
    Ok(Sides::new(constant(lhs), rhs))
}

/// Theorem 3 at `a = b = 1`, rescaled.
pub(super) fn euler_matiyasevich(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = Poly::zero();
    for l in 0..=n {
        lhs += &(ex(l).as_ref() * ex(n - l).as_ref());
    }
    let lead = bx(n + 1).scale(&(int(4) * frac(n + 2)));
    let mut sum = Poly::zero();
    for l in 0..=n + 1 {
        sum.add_scaled(&(int(-4) * binomial(n + 2, l as i64) * e0(n + 1 - l)), &bx(l));
    }
    Ok(Sides::new(lhs.scale(&frac(n + 2)), vec![lead, sum]))
}

