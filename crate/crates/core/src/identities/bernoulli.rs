use crate::exactmath::{
    binomial, factorial, big, harmonic_shifted, int, pochhammer, Poly, Rational,
};

use super::helpers::{add_product, bn, bx, constant, frac, inv, Harmonics};
use super::{IdentityError, Inputs, Sides};

fn pow2(n: usize) -> Rational {
    int(2).pow(n as i32)
}

pub(super) fn euler_1_2(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let lhs: Rational = (0..=n).map(|j| binomial(n, j as i64) * bn(j) * bn(n - j)).sum();
    Ok(Sides::new(
        constant(lhs),
        vec![
            constant(-frac(n) * bn(n - 1)),
            constant(-frac(n - 1) * bn(n)),
        ],
    ))
}

pub(super) fn miki(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut plain = int(0);
    let mut weighted = int(0);
    for j in 2..=n - 2 {
        let t = bn(j) * bn(n - j) * inv(j * (n - j));
        weighted += binomial(n, j as i64) * &t;
        plain += t;
    }
    let h = Harmonics::new(n);
    Ok(Sides::new(
        constant(plain - weighted),
        vec![constant(int(2) * h.h(n) * bn(n) * inv(n))],
    ))
}

pub(super) fn matiyasevich(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = int(0);
    for j in 2..=n - 2 {
        let t = bn(j) * bn(n - j);
        lhs += (frac(n + 2) - int(2) * binomial(n + 2, j as i64)) * t;
    }
    Ok(Sides::new(
        constant(lhs),
        vec![constant(frac(n) * frac(n + 1) * bn(n))],
    ))
}

pub(super) fn corollary1(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = Poly::zero();
    let mut sum = Poly::zero();
    for l in 0..=n {
        lhs += &(bx(l).as_ref() * bx(n - l).as_ref());
        sum.add_scaled(&(int(2) * binomial(n + 2, l as i64 + 2) * bn(l)), &bx(n - l));
    }
    Ok(Sides::new(
        lhs.scale(&frac(n + 2)),
        vec![sum, bx(n - 1).scale(&binomial(n + 2, 3))],
    ))
}

pub(super) fn corollary2(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = int(0);
    let mut rhs = int(0);
    for l in 0..=n {
        let t = bn(l) * bn(n - l);
        rhs += int(2) * binomial(n + 2, l as i64 + 2) * &t;
        lhs += t;
    }
    Ok(Sides::new(constant(lhs * frac(n + 2)), vec![constant(rhs)]))
}

/// Limit `b → 0` of the two-parameter identity, one free parameter `a`.
pub(super) fn corollary3(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, a) = (i.n, i.a_val());
    let mut lhs = Poly::zero();
    for l in 0..n {
        let c = binomial(n, l as i64) * pochhammer(a, l) * big(factorial(n - l - 1)) / pochhammer(a, n);
        add_product(&mut lhs, &c, &bx(l), &bx(n - l));
    }
    let mut sum = Poly::zero();
    for l in 1..=n {
        let c = binomial(n, l as i64) * (a * big(factorial(l - 1)) + pochhammer(a, l))
            / pochhammer(a, l + 1)
            * bn(l);
        sum.add_scaled(&c, &bx(n - l));
    }
    Ok(Sides::new(
        lhs,
        vec![
            sum,
            bx(n - 1).scale(&(frac(n) / (a + int(1)))),
            bx(n).scale(&harmonic_shifted(a, n)?),
        ],
    ))
}

/// `Σ_{l=1}^n C(n,l) w_l B_l/l · B_{n-l}(x)` for a caller-chosen weight.
fn bernoulli_over_l(n: usize, weight: impl Fn(usize) -> Rational) -> Poly {
    let mut sum = Poly::zero();
    for l in 1..=n {
        sum.add_scaled(&(weight(l) * bn(l) * inv(l)), &bx(n - l));
    }
    sum
}

pub(super) fn corollary4(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = Poly::zero();
    for l in 1..n {
        add_product(&mut lhs, &inv(l * (n - l)), &bx(l), &bx(n - l));
    }
    let half_n = frac(n) / int(2);
    let h = Harmonics::new(n);
    Ok(Sides::new(
        lhs.scale(&half_n),
        vec![
            bernoulli_over_l(n, |l| binomial(n, l as i64)),
            bx(n - 1).scale(&half_n),
            bx(n).scale(h.h(n - 1)),
        ],
    ))
}

/// The `a = 2` case of the shifted-harmonic family.
pub(super) fn eq_2_11(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = Poly::zero();
    for l in 0..n {
        add_product(&mut lhs, &(frac(l + 1) * inv(n - l)), &bx(l), &bx(n - l));
    }
    let outer = frac(n + 1) * frac(n + 2);
    Ok(Sides::new(
        lhs.scale(&frac(n + 2)),
        vec![
            bernoulli_over_l(n, |l| binomial(n + 2, l as i64 + 2) * frac(l * l + l + 2)),
            bx(n - 1).scale(&(&outer * frac(n) / int(3))),
            bx(n).scale(&(&outer * harmonic_shifted(&int(2), n)?)),
        ],
    ))
}

pub(super) fn eq_2_12(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = Poly::zero();
    for l in 0..n {
        add_product(&mut lhs, &inv(n - l), &bx(l), &bx(n - l));
    }
    let h = Harmonics::new(n);
    Ok(Sides::new(
        lhs,
        vec![
            bernoulli_over_l(n, |l| binomial(n, l as i64)),
            bx(n - 1).scale(&(frac(n) / int(2))),
            bx(n).scale(h.h(n)),
        ],
    ))
}

pub(super) fn corollary5(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = Poly::zero();
    for l in 0..=n {
        lhs.add_scaled(&(binomial(n, l as i64) * bn(l)), &bx(n - l));
    }
    let x_minus_one = Poly::from_coeffs(vec![int(-1), int(1)]);
    Ok(Sides::new(
        lhs,
        vec![
            (&x_minus_one * bx(n - 1).as_ref()).scale(&frac(n)),
            bx(n).scale(&-frac(n - 1)),
        ],
    ))
}

fn halved_bernoulli_sum(n: usize) -> Poly {
    let mut sum = Poly::zero();
    for l in 0..=n {
        sum.add_scaled(&(binomial(n, l as i64) * bn(l) / pow2(l)), &bx(n - l));
    }
    sum
}

pub(super) fn corollary6(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let two_x_minus_one = Poly::from_coeffs(vec![int(-1), int(2)]);
    let doubled = |m: usize| bx(m).compose_linear(&int(2));
    Ok(Sides::new(
        halved_bernoulli_sum(n),
        vec![
            (&two_x_minus_one * &doubled(n - 1)).scale(&(frac(n) / pow2(n))),
            doubled(n).scale(&(-frac(n - 1) / pow2(n))),
            bx(n - 1).scale(&(-frac(n) / int(4))),
        ],
    ))
}

pub(super) fn eq_2_15(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let mut lhs = Poly::zero();
    for l in 0..=n {
        add_product(&mut lhs, &binomial(n, l as i64), &bx(l), &bx(n - l));
    }
    Ok(Sides::new(
        lhs.scale(&pow2(n).recip()),
        vec![halved_bernoulli_sum(n), bx(n - 1).scale(&(frac(n) / int(4)))],
    ))
}

pub(super) fn corollary7(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let h = Harmonics::new(n);
    let mut lhs = Poly::zero();
    for l in 1..n {
        let c = frac(n) * (h.h(n - 1) - h.h(l - 1)) * inv(l * (n - l));
        add_product(&mut lhs, &c, &bx(l), &bx(n - l));
    }
    let tail = (h.h(n - 1) * h.h(n - 1) + int(3) * h.h2(n - 1)) / int(2);
    Ok(Sides::new(
        lhs,
        vec![
            bernoulli_over_l(n, |l| binomial(n, l as i64) * (h.h(l) + inv(l))),
            bx(n - 1).scale(&frac(n)),
            bx(n).scale(&tail),
        ],
    ))
}

/// Three-fold convolution with equal weights `ε`, all `ε`-dependence kept.
pub(super) fn eq_6_9(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, e) = (i.n, i.eps_val());
    let e3 = int(3) * e;
    let fact = |m: usize| big(factorial(m));
    let mut lhs = Poly::zero();
    let mut first = Poly::zero();
    for p in 0..=n {
        for q in 0..=n - p {
            let r = n - p - q;
            let denom = fact(p) * fact(q) * fact(r);
            let c = pochhammer(e, p) * pochhammer(e, q) * pochhammer(e, r) / pochhammer(&e3, n) / &denom;
            lhs.add_scaled(&c, &(&(bx(p).as_ref() * bx(q).as_ref()) * bx(r).as_ref()));
            let c = &e3 * pochhammer(e, q) * pochhammer(e, r) / pochhammer(&e3, n - p + 1) * bn(q) * bn(r)
                / denom;
            first.add_scaled(&c, &bx(p));
        }
    }
    let mut second = Poly::zero();
    for p in 0..n {
        let m = n - 1 - p;
        let c = &e3 * e * pochhammer(e, m) / pochhammer(&e3, m + 2) * bn(m) / (fact(p) * fact(m));
        second.add_scaled(&c, &bx(p));
    }
    let third = bx(n - 2).scale(&(e * e * e / pochhammer(&e3, 3) / fact(n - 2)));
    Ok(Sides::new(lhs, vec![first, second, third]))
}

/// The `ε → ∞` limit of the three-fold identity.
pub(super) fn corollary8(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let fact = |m: usize| big(factorial(m));
    let pow3 = |m: usize| int(3).pow(m as i32);
    let mut lhs = Poly::zero();
    let mut first = Poly::zero();
    for p in 0..=n {
        for q in 0..=n - p {
            let r = n - p - q;
            let multi = fact(n) / (fact(p) * fact(q) * fact(r));
            lhs.add_scaled(&multi, &(&(bx(p).as_ref() * bx(q).as_ref()) * bx(r).as_ref()));
            first.add_scaled(&(multi * pow3(p) * bn(q) * bn(r)), &bx(p));
        }
    }
    let mut second = Poly::zero();
    for p in 0..n {
        second.add_scaled(&(frac(n) * binomial(n - 1, p as i64) * pow3(p) * bn(n - 1 - p)), &bx(p));
    }
    let third = bx(n - 2).scale(&(frac(n) * frac(n - 1) * int(3).pow(n as i32 - 3)));
    Ok(Sides::new(lhs, vec![first, second, third]))
}

/// Number-level third-order analogue of Miki's identity.
pub(super) fn corollary9(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let h = Harmonics::new(n);
    let bl = |l: usize| bn(l) * inv(l);
    let mut lhs = int(0);
    let mut triple = int(0);
    for p in 1..n {
        for q in 1..n - p {
            let r = n - p - q;
            let t = bl(p) * bl(q) * bl(r);
            triple += binomial(n - 1, p as i64 - 1) * &t;
            lhs += t;
        }
    }
    let shifted: Rational = (1..n - 1)
        .map(|l| binomial(n - 1, l as i64 + 1) * bl(l) * bl(n - l - 1))
        .sum();
    let weighted: Rational = (1..n)
        .map(|l| (int(3) * h.h(n - 1) - int(2) * h.h(l - 1) + inv(n)) * bl(l) * bl(n - l))
        .sum();
    let corrected: Rational = (1..n)
        .map(|l| {
            int(-2) * binomial(n - 1, l as i64 - 1) * (int(2) * h.h(l) + inv(l)) * bn(l) * bn(n - l)
                * inv(l * l)
        })
        .sum();
    let hn = h.h(n - 1);
    let last = int(-2)
        * (int(2) * inv(n) * hn + hn * hn + int(2) * h.h2(n - 1) + int(3) * inv(n * n))
        * bn(n)
        * inv(n);
    Ok(Sides::new(
        constant(lhs / int(3)),
        vec![
            constant(triple),
            constant(shifted),
            constant(weighted),
            constant(corrected),
            constant(frac(n - 1) / int(6) * bn(n - 2)),
            constant((inv((n - 1) * n) - int(3)) * bn(n - 1)),
            constant(last),
        ],
    ))
}
