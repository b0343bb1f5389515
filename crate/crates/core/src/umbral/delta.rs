use crate::exactmath::{int, rat, subsets_of_size, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaVariant {
    /// `Δ_u f(x) = f(x+u) - f(x)`
    Forward,
    /// `δ_u f(x) = (f(x) + f(x+u)) / 2`
    DiscreteMean,
}

/// Composition of single-shift operators of one variant, `Δ_{u_1}∘⋯∘Δ_{u_m}`
/// or `δ_{u_1}∘⋯∘δ_{u_m}`. An empty shift list is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceOp {
    pub shifts: Vec<Rational>,
    pub variant: DeltaVariant,
}

impl DifferenceOp {
    pub fn forward(shifts: Vec<Rational>) -> Self {
        DifferenceOp { shifts, variant: DeltaVariant::Forward }
    }

    pub fn discrete_mean(shifts: Vec<Rational>) -> Self {
        DifferenceOp { shifts, variant: DeltaVariant::DiscreteMean }
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        self.shifts.iter().fold(p.clone(), |acc, u| match self.variant {
            DeltaVariant::Forward => &acc.shift(u) - &acc,
            DeltaVariant::DiscreteMean => (&acc + &acc.shift(u)).scale(&rat(1, 2)),
        })
    }
}

pub fn apply_delta(op: &DifferenceOp, p: &Poly) -> Poly {
    op.apply(p)
}

fn subset_shifts(shifts: &[Rational], mask: u32) -> Vec<Rational> {
    shifts
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, u)| u.clone())
        .collect()
}

/// Checks `Δ_{u_1+⋯+u_k} p = Σ_{∅≠J} Δ_J p` exactly.
pub fn verify_lemma1(shifts: &[Rational], p: &Poly) -> bool {
    let k = shifts.len();
    let total: Rational = shifts.iter().sum();
    let lhs = DifferenceOp::forward(vec![total]).apply(p);
    let mut rhs = Poly::zero();
    for j in 1..=k {
        for mask in subsets_of_size(k, j) {
            rhs += &DifferenceOp::forward(subset_shifts(shifts, mask)).apply(p);
        }
    }
    lhs == rhs
}

/// Checks the discrete-mean expansion of `δ_{u_1+⋯+u_k}`: for odd `k` it is
/// `Σ_{∅≠J} (-2)^{|J|-1} δ_J`, for even `k` one minus that sum.
pub fn verify_lemma3(shifts: &[Rational], p: &Poly) -> bool {
    let k = shifts.len();
    let total: Rational = shifts.iter().sum();
    let lhs = DifferenceOp::discrete_mean(vec![total]).apply(p);
    let mut sum = Poly::zero();
    for j in 1..=k {
        let sign = int(-2).pow(j as i32 - 1);
        for mask in subsets_of_size(k, j) {
            let term = DifferenceOp::discrete_mean(subset_shifts(shifts, mask)).apply(p);
            sum.add_scaled(&sign, &term);
        }
    }
    let rhs = if k % 2 == 0 { p - &sum } else { sum };
    lhs == rhs
}

/// `p(x+u) - p(x)` and `(p(x) + p(x+u))/2`, the single-shift forms used in tests.
pub fn forward_difference(p: &Poly, u: &Rational) -> Poly {
    DifferenceOp::forward(vec![u.clone()]).apply(p)
}

pub fn discrete_mean(p: &Poly, u: &Rational) -> Poly {
    DifferenceOp::discrete_mean(vec![u.clone()]).apply(p)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn single_shift_examples() {
        let u = rat(3, 5);
        let sq = Poly::monomial(int(1), 2);
        let expected = Poly::from_coeffs(vec![&u * &u, int(2) * &u]);
        assert_eq!(apply_delta(&DifferenceOp::forward(vec![u.clone()]), &sq), expected);

        let lin = Poly::x();
        let expected = Poly::from_coeffs(vec![&u / int(2), int(1)]);
        assert_eq!(apply_delta(&DifferenceOp::discrete_mean(vec![u]), &lin), expected);

        let cube = Poly::monomial(int(1), 3);
        assert_eq!(forward_difference(&cube, &int(1)), p(&[(1, 1), (3, 1), (3, 1)]));
    }

    #[test]
    fn forward_lowers_degree() {
        for d in 1..8 {
            let m = Poly::monomial(int(1), d);
            assert_eq!(forward_difference(&m, &rat(2, 7)).degree(), Some(d - 1));
        }
        assert!(DifferenceOp::forward(vec![]).apply(&Poly::x()) == Poly::x());
    }

    #[test]
    fn lemma1_examples() {
        let sq = Poly::monomial(int(1), 2);
        assert!(verify_lemma1(&[rat(1, 3), rat(5, 2)], &sq));
        assert!(verify_lemma1(&[rat(7, 4)], &sq));
        let quartic = Poly::monomial(int(1), 4);
        assert!(verify_lemma1(&[rat(1, 2), rat(1, 3), rat(1, 6)], &quartic));
    }

    #[test]
    fn lemma3_examples() {
        let f = p(&[(1, 2), (-3, 1), (0, 1), (2, 5), (1, 1)]);
        assert!(verify_lemma3(&[rat(1, 2), rat(-4, 3)], &f));
        assert!(verify_lemma3(&[rat(1, 2), rat(1, 3), rat(9, 7)], &f));
        let quintic = Poly::monomial(int(1), 5);
        assert!(verify_lemma3(&[rat(1, 5), rat(-2, 3), rat(3, 4), rat(5, 6)], &quintic));
    }

    #[test]
    fn two_shift_identities_spelled_out() {
        // Δ_{u1+u2} = Δ_{u1}Δ_{u2} + Δ_{u1} + Δ_{u2}
        // δ_{u1+u2} = 2δ_{u1}δ_{u2} - δ_{u1} - δ_{u2} + 1
        let f = p(&[(1, 1), (2, 1), (-1, 3), (0, 1), (1, 1)]);
        let (u1, u2) = (rat(2, 3), rat(-5, 4));
        let sum = &u1 + &u2;
        let fwd = |s: Vec<Rational>| DifferenceOp::forward(s).apply(&f);
        assert_eq!(
            fwd(vec![sum.clone()]),
            &(&fwd(vec![u1.clone(), u2.clone()]) + &fwd(vec![u1.clone()])) + &fwd(vec![u2.clone()])
        );
        let dm = |s: Vec<Rational>| DifferenceOp::discrete_mean(s).apply(&f);
        let rhs = &(&(&dm(vec![u1.clone(), u2.clone()]).scale(&int(2)) - &dm(vec![u1])) - &dm(vec![u2])) + &f;
        assert_eq!(dm(vec![sum]), rhs);
    }
}
