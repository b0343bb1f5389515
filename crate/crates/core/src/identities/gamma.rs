//! Identities whose natural form involves `Γ` at non-integer arguments.
//! Both sides are divided by a common gamma factor so that only
//! Pochhammer symbols remain.

use crate::exactmath::{big, binomial, factorial, gamma_ratio, int, pochhammer, Rational};

use super::helpers::{bn, constant, inv};
use super::{IdentityError, Inputs, Sides};

fn fact(n: usize) -> Rational {
    big(factorial(n))
}

/// `Σ_{l=1}^{n-1} [(p+1)_{2l-1}/(2l-1)!] [(p+1)_{2n-2l-1}/(2n-2l-1)!] B_{2l}/(2l) · B_{2n-2l}/(2n-2l)`
fn ds_lhs(n: usize, p: &Rational) -> Rational {
    let p1 = p + int(1);
    (1..n)
        .map(|l| {
            let (u, v) = (2 * l, 2 * n - 2 * l);
            pochhammer(&p1, u - 1) / fact(u - 1) * pochhammer(&p1, v - 1) / fact(v - 1)
                * bn(u)
                * inv(u)
                * bn(v)
                * inv(v)
        })
        .sum()
}

fn ds_binomial_sum(n: usize, p: &Rational) -> Rational {
    let p1 = p + int(1);
    let s: Rational = (1..=n)
        .map(|l| {
            let u = 2 * l;
            binomial(2 * n, u as i64)
                * pochhammer(&p1, u - 1)
                * gamma_ratio(&(int(2) * p + int(u as i64 + 1)), 2 * n as i64 - u as i64 - 1)
                * bn(u)
                * bn(2 * n - u)
        })
        .sum();
    int(2) * s / fact(2 * n)
}

/// Normalized by `Γ(p+1)²`; `p = 0` is allowed.
pub(super) fn dunne_schubert(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, p) = (i.n, i.p_val());
    let p1 = p + int(1);
    let gamma_sum: Rational = (1..2 * n)
        .map(|l| pochhammer(&p1, l - 1) * pochhammer(&(int(2) * p + int(l as i64 + 1)), 2 * n - l - 1))
        .sum();
    let first = int(2) * bn(2 * n) / fact(2 * n) * gamma_sum;
    Ok(Sides::new(
        constant(ds_lhs(n, p)),
        vec![constant(first), constant(ds_binomial_sum(n, p))],
    ))
}

/// The first right-hand sum evaluated in closed form, `p > 0`.
pub(super) fn eq_7_2(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, p) = (i.n, i.p_val());
    let closed = (pochhammer(&(int(2) * p), 2 * n) - int(2) * pochhammer(p, 2 * n)) / (p * p);
    let first = bn(2 * n) / fact(2 * n) * closed;
    Ok(Sides::new(
        constant(ds_lhs(n, p)),
        vec![constant(first), constant(ds_binomial_sum(n, p))],
    ))
}

/// The Dunne–Schubert identity at `p = 1`, in Matiyasevich form.
pub(super) fn dunne_schubert_p1(i: &Inputs) -> Result<Sides, IdentityError> {
    let n = i.n;
    let lhs: Rational = (1..=n).map(|l| bn(2 * l) * bn(2 * n - 2 * l)).sum();
    let sum: Rational = (1..=n)
        .map(|l| binomial(2 * n + 2, 2 * l as i64 + 2) * bn(2 * l) * bn(2 * n - 2 * l))
        .sum();
    Ok(Sides::new(
        constant(lhs),
        vec![
            constant(sum * inv(n + 1)),
            constant(int(2 * n as i64) * bn(2 * n)),
        ],
    ))
}

/// Normalized by `Γ(p)/Γ(2p+1)`.
pub(super) fn gamma_sum(i: &Inputs) -> Result<Sides, IdentityError> {
    let (n, p) = (i.n, i.p_val());
    let q = int(2) * p + int(1);
    let lhs: Rational = (1..2 * n).map(|l| pochhammer(p, l) / pochhammer(&q, l)).sum();
    let tail = -pochhammer(p, 2 * n) / (p * pochhammer(&q, 2 * n - 1));
    Ok(Sides::new(constant(lhs), vec![constant(int(1)), constant(tail)]))
}
