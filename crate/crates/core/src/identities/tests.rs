use super::*;
use crate::exactmath::{binomial, factorial, big, int, pochhammer, rat};
use crate::sequences::bernoulli_number as b;

fn sides(name: &str, inputs: Inputs) -> Sides {
    evaluate(name, &inputs).unwrap()
}

#[test]
fn registry_names_unique_and_complete() {
    let names: Vec<&str> = registry().iter().map(|s| s.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
    for required in [
        "theorem1", "theorem2", "theorem3", "theorem4", "euler-1-2", "miki", "matiyasevich",
        "corollary1", "corollary2", "corollary3", "corollary4", "corollary5", "corollary6",
        "corollary7", "corollary8", "corollary9", "corollary10", "corollary11", "eq-2-12",
        "eq-2-15", "eq-4-0a", "kth-matiyasevich", "eq-6-9", "dunne-schubert", "eq-7-2",
        "gamma-sum",
    ] {
        assert!(names.contains(&required), "{required}");
    }
}

#[test]
fn theorem1_small_cases() {
    let (l, r) = eval_theorem1(1, int(1), int(1)).unwrap();
    let expected = Poly::from_coeffs(vec![rat(-1, 2), int(1)]);
    assert_eq!(l, expected);
    assert_eq!(r, expected);
    let (l, r) = eval_theorem1(4, rat(1, 2), rat(3, 2)).unwrap();
    assert_eq!(l, r);
    assert!(matches!(
        eval_theorem1(0, int(1), int(1)),
        Err(IdentityError::OutOfDomain { .. })
    ));
    assert!(eval_theorem1(3, int(0), int(1)).is_err());
}

#[test]
fn theorem2_k2_matches_theorem1() {
    for (a, b) in registry::pair_params() {
        for n in 1..=12 {
            let t1 = eval_theorem1(n, a.clone(), b.clone()).unwrap();
            let t2 = eval_theorem2(n, vec![a.clone(), b.clone()]).unwrap();
            assert_eq!(t1, t2, "n={n}");
        }
    }
}

#[test]
fn theorem4_k2_matches_theorem3_and_k1_is_trivial() {
    for (a, b) in registry::pair_params() {
        for n in 1..=10 {
            let t3 = eval_theorem3(n, a.clone(), b.clone()).unwrap();
            let t4 = eval_theorem4(n, vec![a.clone(), b.clone()]).unwrap();
            assert_eq!(t3, t4, "n={n}");
        }
    }
    for n in 0..8 {
        let (l, r) = eval_theorem4(n, vec![rat(5, 3)]).unwrap();
        assert_eq!(l, *crate::sequences::euler_poly(n));
        assert_eq!(r, l);
    }
}

#[test]
fn theorem3_small_case() {
    let (l, r) = eval_theorem3(1, int(1), int(1)).unwrap();
    let expected = Poly::from_coeffs(vec![rat(-1, 2), int(1)]);
    assert_eq!((l.clone(), r), (expected.clone(), expected));
    let (l, r) = eval_theorem3(4, int(2), rat(1, 2)).unwrap();
    assert_eq!(l, r);
}

#[test]
fn theorem2_specializes_to_third_order_identity() {
    for n in 3..=8 {
        let (l, r) = eval_theorem2(n, vec![int(1); 3]).unwrap();
        let scale = big(factorial(n + 3)) / big(factorial(n)) / int(2);
        let (l3, r3) = sides("eq-4-0a", Inputs::new(n)).into_pair();
        assert_eq!(l.scale(&scale), l3);
        assert_eq!(r.scale(&scale), r3);
    }
}

#[test]
fn theorem2_at_zero_gives_kth_matiyasevich() {
    for k in 2..=4 {
        for n in 0..=6 {
            let (l, r) = eval_theorem2(n, vec![int(1); k]).unwrap();
            let scale = pochhammer(&int(k as i64), n) / big(factorial(n));
            let (lk, rk) = sides("kth-matiyasevich", Inputs::new(n).with_k(k)).into_pair();
            assert_eq!(l.eval(&int(0)) * &scale, lk.coeff(0));
            assert_eq!(r.eval(&int(0)) * &scale, rk.coeff(0));
        }
    }
}

#[test]
fn specialization_chain_theorem1_corollary1_corollary2() {
    for n in 1..=16 {
        let (l, r) = eval_theorem1(n, int(1), int(1)).unwrap();
        let scale = int((n as i64 + 1) * (n as i64 + 2));
        let (l1, r1) = sides("corollary1", Inputs::new(n)).into_pair();
        assert_eq!(l.scale(&scale), l1);
        assert_eq!(r.scale(&scale), r1);
        if n >= 4 && n % 2 == 0 {
            let (l2, r2) = sides("corollary2", Inputs::new(n)).into_pair();
            assert_eq!(l1.eval(&int(0)), l2.coeff(0));
            assert_eq!(r1.eval(&int(0)), r2.coeff(0));
        }
    }
}

#[test]
fn corollary2_and_matiyasevich_differ_by_the_same_amount() {
    for n in (4..=30).step_by(2) {
        let c2 = sides("corollary2", Inputs::new(n));
        let m = sides("matiyasevich", Inputs::new(n));
        let t: Rational = (2..=n - 2).map(|j| binomial(n + 2, j as i64) * b(j) * b(n - j)).sum();
        let end = int(2 * (n as i64 + 2)) * b(n) + int(2) * t;
        assert_eq!(c2.lhs.coeff(0) - m.lhs.coeff(0), end);
        assert_eq!(c2.rhs().coeff(0) - m.rhs().coeff(0), end);
    }
}

#[test]
fn corollary2_rejects_n2() {
    let err = evaluate("corollary2", &Inputs::new(2)).unwrap_err();
    assert!(err.to_string().contains("even n ≥ 4"), "{err}");
    // The identity genuinely fails there.
    let s = bernoulli::corollary2(&Inputs::new(2)).unwrap();
    assert!(!s.holds());
}

#[test]
fn corollary3_at_one_is_eq_2_12() {
    for n in 1..=12 {
        let c3 = sides("corollary3", Inputs::new(n).with_a(int(1)));
        let e = sides("eq-2-12", Inputs::new(n));
        assert_eq!(c3.lhs, e.lhs);
        assert_eq!(c3.rhs(), e.rhs());
    }
}

#[test]
fn miki_from_polynomial_identity_at_zero() {
    for n in (4..=24).step_by(2) {
        let c4 = sides("corollary4", Inputs::new(n));
        let t: Rational = (1..n).map(|l| binomial(n, l as i64) * b(l) * b(n - l) / int(l as i64)).sum();
        let s2: Rational = (1..n)
            .map(|l| binomial(n, l as i64) * b(l) * b(n - l) / int((l * (n - l)) as i64))
            .sum();
        assert_eq!(t, int(n as i64) / int(2) * &s2);
        let scale = int(2) / int(n as i64);
        let miki = sides("miki", Inputs::new(n));
        assert_eq!((c4.lhs.eval(&int(0)) - &t) * &scale, miki.lhs.coeff(0));
        assert_eq!((c4.rhs().eval(&int(0)) - &t) * &scale, miki.rhs().coeff(0));
    }
}

#[test]
fn classic_values() {
    let m = sides("miki", Inputs::new(4));
    assert_eq!(m.lhs.coeff(0), rat(-5, 144));
    assert_eq!(m.rhs().coeff(0), rat(-5, 144));
    let m = sides("matiyasevich", Inputs::new(4));
    assert_eq!(m.lhs.coeff(0), rat(-2, 3));
    assert_eq!(m.rhs().coeff(0), rat(-2, 3));
    let c5 = sides("corollary5", Inputs::new(1));
    let x_minus_one = Poly::from_coeffs(vec![int(-1), int(1)]);
    assert_eq!(c5.lhs, x_minus_one);
    assert_eq!(c5.rhs(), x_minus_one);
}

#[test]
fn euler_analogue_of_corollary1() {
    for n in 1..=10 {
        let (l, r) = eval_theorem3(n, int(1), int(1)).unwrap();
        let scale = int((n as i64 + 1) * (n as i64 + 2));
        let em = sides("euler-matiyasevich", Inputs::new(n));
        assert_eq!(l.scale(&scale), em.lhs);
        assert_eq!(r.scale(&scale), em.rhs());
    }
}

#[test]
fn dunne_schubert_examples() {
    let (l, r) = eval_dunne_schubert(3, rat(1, 2)).unwrap();
    assert_eq!(l, r);
    let (l, r) = gamma_sum_identity(1, int(1)).unwrap();
    assert_eq!((l.clone(), r), (rat(1, 3), rat(1, 3)));
    let (l, r) = gamma_sum_identity(2, int(1)).unwrap();
    assert_eq!((l.clone(), r), (rat(3, 5), rat(3, 5)));
    assert!(eval_eq72(3, int(0)).is_err());
    assert!(eval_dunne_schubert(3, int(-1)).is_err());
}

#[test]
fn dunne_schubert_p0_is_miki() {
    for n in 2..=10 {
        let (l, r) = eval_dunne_schubert(n, int(0)).unwrap();
        let miki = sides("miki", Inputs::new(2 * n));
        let s2_left = &l - miki.lhs.coeff(0);
        let s2_right = &r - miki.rhs().coeff(0);
        assert_eq!(s2_left, s2_right);
        let big_n = 2 * n;
        let s2: Rational = (2..=big_n - 2)
            .map(|j| binomial(big_n, j as i64) * b(j) * b(big_n - j) / int((j * (big_n - j)) as i64))
            .sum();
        assert_eq!(s2_left, s2);
    }
}

#[test]
fn dunne_schubert_p1_display() {
    for n in 2..=12 {
        let (l, r) = eval_dunne_schubert(n, int(1)).unwrap();
        let p1 = sides("dunne-schubert-p1", Inputs::new(n));
        assert_eq!(l + b(2 * n), p1.lhs.coeff(0));
        assert_eq!(r + b(2 * n), p1.rhs().coeff(0));
    }
}

#[test]
fn corrected_forms_are_needed() {
    // The third-order Miki analogue with the literal denominator `n-l` fails.
    let n = 6;
    let s = sides("corollary9", Inputs::new(n));
    assert!(s.holds());
    let literal: Rational = (1..n)
        .map(|l| {
            int(-2) * binomial(n - 1, l as i64 - 1)
                * (int(2) * crate::exactmath::harmonic(l) + int(1) / int(l as i64))
                * b(l)
                * b(n - l)
                / int((l * (n - l)) as i64)
        })
        .sum();
    let mut terms = s.rhs_terms.clone();
    terms[3] = Poly::constant(literal);
    assert!(!Sides::new(s.lhs, terms).holds());
}

#[test]
fn mutation_breaks_identities() {
    let mut s = sides("theorem1", Inputs::new(5).with_a(int(2)).with_b(int(1)));
    assert!(s.holds());
    assert!(s.mutate());
    assert!(!s.holds());
    let mut zero = Sides::new(Poly::zero(), vec![Poly::zero()]);
    assert!(!zero.mutate());
}

#[test]
fn unknown_and_missing() {
    assert!(matches!(lookup("nope"), Err(IdentityError::UnknownIdentity { .. })));
    assert!(matches!(
        evaluate("theorem1", &Inputs::new(3).with_a(int(1))),
        Err(IdentityError::MissingParameter { .. })
    ));
    assert!(matches!(
        evaluate("miki", &Inputs::new(6).with_p(int(1))),
        Err(IdentityError::UnexpectedParameter { .. })
    ));
}

#[test]
fn verify_reports_in_grid_order() {
    let grid: Vec<Inputs> = (1..=8)
        .rev()
        .map(|n| Inputs::new(n).with_a(int(1)).with_b(int(2)))
        .collect();
    let reports = verify("theorem1", &grid, VerifyOptions::default()).unwrap();
    let ns: Vec<usize> = reports.iter().map(|r| r.as_ref().unwrap().inputs.n).collect();
    assert_eq!(ns, (1..=8).rev().collect::<Vec<_>>());
    assert!(reports.iter().all(|r| r.as_ref().unwrap().status == Status::Pass));
    let mutated = verify("theorem1", &grid, VerifyOptions { mutate_rhs: true }).unwrap();
    assert!(mutated.iter().any(|r| r.as_ref().unwrap().status == Status::Fail));
}

#[test]
fn verify_keeps_going_after_domain_error() {
    let grid = vec![Inputs::new(2), Inputs::new(4)];
    let reports = verify("corollary2", &grid, VerifyOptions::default()).unwrap();
    assert!(reports[0].is_err());
    assert_eq!(reports[1].as_ref().unwrap().status, Status::Pass);
}

#[test]
fn grid_requests() {
    let spec = lookup("theorem2").unwrap();
    let g = grid_for(spec, &GridRequest { k: Some(3), ..Default::default() });
    assert_eq!(g.len(), 3 * 15);
    let g = grid_for(spec, &GridRequest { k: Some(6), n: Some(0..=2), ..Default::default() });
    assert_eq!(g.len(), 3);
    assert_eq!(g[0].a_vec.as_ref().unwrap().len(), 6);
    let g = grid_for(
        spec,
        &GridRequest {
            n: Some(1..=3),
            params: Inputs::new(0).with_a_vec(vec![int(1), rat(1, 2), int(3)]),
            ..Default::default()
        },
    );
    assert_eq!(g.len(), 3);
    assert_eq!(g[0].k, Some(3));
    let miki = grid_for(lookup("miki").unwrap(), &GridRequest { n: Some(4..=12), ..Default::default() });
    assert_eq!(miki.len(), 9);
}

#[test]
fn small_default_grids_pass() {
    for spec in registry() {
        let grid: Vec<Inputs> = spec.default_grid().into_iter().filter(|i| i.n <= 8).collect();
        for r in verify(spec.name, &grid, VerifyOptions::default()).unwrap() {
            let r = r.unwrap();
            assert_eq!(r.status, Status::Pass, "{} {}", r.identity, r.inputs);
        }
    }
}
