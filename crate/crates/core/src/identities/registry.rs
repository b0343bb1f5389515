use std::sync::LazyLock;

use crate::exactmath::{int, is_positive, rat, Rational};

use super::inputs::ParamKind::{self, A, AVec, Epsilon, B, K, N, P};
use super::{bernoulli, euler, gamma, theorems, IdentityError, Inputs, Sides};

/// Whether an identity relates polynomials in `x` or plain numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Polynomial,
    Number,
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::Polynomial => "polynomial",
            Level::Number => "number",
        }
    }
}

type Evaluator = fn(&Inputs) -> Result<Sides, IdentityError>;

pub struct IdentitySpec {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamKind],
    pub validity: &'static str,
    pub level: Level,
    /// Human-readable description of [`IdentitySpec::default_grid`].
    pub grid: &'static str,
    check: fn(&Inputs) -> bool,
    eval: Evaluator,
    default_grid: fn() -> Vec<Inputs>,
}

impl std::fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentitySpec").field("name", &self.name).finish_non_exhaustive()
    }
}

impl IdentitySpec {
    pub fn is_valid(&self, inputs: &Inputs) -> bool {
        self.params.iter().all(|&p| inputs.has(p)) && (self.check)(inputs)
    }

    pub fn default_grid(&self) -> Vec<Inputs> {
        (self.default_grid)()
    }

    /// Checks parameters and validity, then evaluates both sides.
    pub fn evaluate(&self, inputs: &Inputs) -> Result<Sides, IdentityError> {
        self.check_inputs(inputs)?;
        (self.eval)(inputs)
    }

    pub fn check_inputs(&self, inputs: &Inputs) -> Result<(), IdentityError> {
        for &p in self.params {
            if !inputs.has(p) {
                return Err(IdentityError::MissingParameter {
                    identity: self.name.to_string(),
                    param: p.name().to_string(),
                });
            }
        }
        for p in [K, A, B, AVec, P, Epsilon] {
            // `k` rides along with `a_vec`, so it is tolerated wherever `a_vec` is.
            let implied = p == K && self.params.contains(&AVec);
            if inputs.has(p) && !self.params.contains(&p) && !implied {
                return Err(IdentityError::UnexpectedParameter {
                    identity: self.name.to_string(),
                    param: p.name().to_string(),
                });
            }
        }
        if !(self.check)(inputs) {
            return Err(IdentityError::OutOfDomain {
                identity: self.name.to_string(),
                inputs: inputs.to_string(),
                validity: self.validity.to_string(),
            });
        }
        Ok(())
    }
}

pub fn registry() -> &'static [IdentitySpec] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static IdentitySpec, IdentityError> {
    REGISTRY.iter().find(|s| s.name == name).ok_or_else(|| IdentityError::UnknownIdentity {
        name: name.to_string(),
        valid: REGISTRY.iter().map(|s| s.name.to_string()).collect(),
    })
}

pub fn evaluate(name: &str, inputs: &Inputs) -> Result<Sides, IdentityError> {
    lookup(name)?.evaluate(inputs)
}

fn pos(r: &Option<Rational>) -> bool {
    r.as_ref().is_some_and(is_positive)
}

fn non_negative(r: &Option<Rational>) -> bool {
    r.as_ref().is_some_and(|v| *v >= int(0))
}

fn a_vec_ok(i: &Inputs, min_k: usize) -> bool {
    match &i.a_vec {
        Some(v) => v.len() >= min_k && v.len() <= 16 && v.iter().all(is_positive) && i.k == Some(v.len()),
        None => false,
    }
}

pub(super) fn pair_params() -> Vec<(Rational, Rational)> {
    vec![
        (int(1), int(1)),
        (int(2), int(1)),
        (rat(1, 2), rat(3, 2)),
        (rat(7, 3), rat(5, 4)),
    ]
}

fn tuples(k: usize) -> Vec<Vec<Rational>> {
    match k {
        1 => vec![vec![int(1)], vec![int(2)], vec![rat(1, 2)]],
        2 => pair_params().into_iter().map(|(a, b)| vec![a, b]).collect(),
        3 => vec![
            vec![int(1), int(1), int(1)],
            vec![int(1), int(2), rat(1, 2)],
            vec![rat(3, 2), rat(1, 2), int(2)],
        ],
        4 => vec![
            vec![int(1), int(1), int(1), int(1)],
            vec![int(1), int(2), rat(1, 2), rat(3, 2)],
            vec![int(2), rat(3, 2), int(1), rat(1, 2)],
        ],
        _ => vec![vec![int(1); k]],
    }
}

/// Largest `n` in the default grid for the `k`-fold theorems.
pub(super) fn k_fold_max_n(k: usize) -> usize {
    match k {
        0..=2 => 20,
        3 => 14,
        _ => 10,
    }
}

fn ns(range: std::ops::RangeInclusive<usize>) -> Vec<Inputs> {
    range.map(Inputs::new).collect()
}

fn even_ns(range: std::ops::RangeInclusive<usize>) -> Vec<Inputs> {
    range.filter(|n| n % 2 == 0).map(Inputs::new).collect()
}

fn pair_grid() -> Vec<Inputs> {
    let mut out = Vec::new();
    for (a, b) in pair_params() {
        for n in 1..=30 {
            out.push(Inputs::new(n).with_a(a.clone()).with_b(b.clone()));
        }
    }
    out
}

fn k_fold_grid(ks: std::ops::RangeInclusive<usize>) -> Vec<Inputs> {
    let mut out = Vec::new();
    for k in ks {
        for t in tuples(k) {
            for n in 0..=k_fold_max_n(k) {
                out.push(Inputs::new(n).with_a_vec(t.clone()));
            }
        }
    }
    out
}

fn ds_p_values() -> Vec<Rational> {
    vec![rat(1, 2), int(1), rat(3, 2), int(2), rat(7, 3)]
}

fn p_grid(n: std::ops::RangeInclusive<usize>, with_zero: bool) -> Vec<Inputs> {
    let mut ps = ds_p_values();
    if with_zero {
        ps.insert(0, int(0));
    }
    let mut out = Vec::new();
    for p in ps {
        for m in n.clone() {
            out.push(Inputs::new(m).with_p(p.clone()));
        }
    }
    out
}

macro_rules! spec {
    (
        $name:literal, $summary:literal, [$($param:expr),*], $validity:literal, $level:ident,
        $grid_desc:literal, check: $check:expr, eval: $eval:expr, grid: $grid:expr $(,)?
    ) => {
        IdentitySpec {
            name: $name,
            summary: $summary,
            params: &[$($param),*],
            validity: $validity,
            level: Level::$level,
            grid: $grid_desc,
            check: $check,
            eval: $eval,
            default_grid: $grid,
        }
    };
}

static REGISTRY: LazyLock<Vec<IdentitySpec>> = LazyLock::new(|| {
    vec![
        spec!(
            "theorem1", "two-parameter Bernoulli polynomial convolution", [N, A, B],
            "n ≥ 1, a > 0, b > 0", Polynomial, "n = 1..30 × (a,b) ∈ {(1,1),(2,1),(1/2,3/2),(7/3,5/4)}",
            check: |i| i.n >= 1 && pos(&i.a) && pos(&i.b),
            eval: theorems::theorem1, grid: pair_grid,
        ),
        spec!(
            "theorem2", "k-fold Bernoulli polynomial convolution with Dirichlet weights", [N, AVec],
            "k ≥ 2, n ≥ 0, all a_i > 0", Polynomial,
            "k = 2,3,4 with n ≤ 20,14,10 and three or four weight tuples per k",
            check: |i| a_vec_ok(i, 2),
            eval: theorems::theorem2, grid: || k_fold_grid(2..=4),
        ),
        spec!(
            "theorem3", "two-parameter Euler polynomial convolution", [N, A, B],
            "n ≥ 1, a > 0, b > 0", Polynomial, "n = 1..30 × (a,b) ∈ {(1,1),(2,1),(1/2,3/2),(7/3,5/4)}",
            check: |i| i.n >= 1 && pos(&i.a) && pos(&i.b),
            eval: theorems::theorem3, grid: pair_grid,
        ),
        spec!(
            "theorem4", "k-fold Euler polynomial convolution with Dirichlet weights", [N, AVec],
            "k ≥ 1, n ≥ 0, all a_i > 0", Polynomial,
            "k = 1,2,3,4 with n ≤ 20,20,14,10 and three or four weight tuples per k",
            check: |i| a_vec_ok(i, 1),
            eval: theorems::theorem4, grid: || k_fold_grid(1..=4),
        ),
        spec!(
            "euler-1-2", "Euler's quadratic Bernoulli number identity", [N],
            "n ≥ 1", Number, "n = 1..60",
            check: |i| i.n >= 1,
            eval: bernoulli::euler_1_2, grid: || ns(1..=60),
        ),
        spec!(
            "miki", "Miki's identity with the harmonic number H_n", [N],
            "n ≥ 4", Number, "even n = 4..60",
            check: |i| i.n >= 4,
            eval: bernoulli::miki, grid: || even_ns(4..=60),
        ),
        spec!(
            "matiyasevich", "Matiyasevich's quadratic identity", [N],
            "n ≥ 4", Number, "even n = 4..60",
            check: |i| i.n >= 4,
            eval: bernoulli::matiyasevich, grid: || even_ns(4..=60),
        ),
        spec!(
            "corollary1", "unit-weight Bernoulli polynomial convolution", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: bernoulli::corollary1, grid: || ns(1..=30),
        ),
        spec!(
            "corollary2", "unit-weight convolution at x = 0", [N],
            "even n ≥ 4", Number, "even n = 4..60",
            check: |i| i.n >= 4 && i.n % 2 == 0,
            eval: bernoulli::corollary2, grid: || even_ns(4..=60),
        ),
        spec!(
            "corollary3", "shifted-harmonic generalization of Miki's identity", [N, A],
            "n ≥ 1, a > 0", Polynomial, "n = 1..30 × a ∈ {1, 2, 1/2, 7/3}",
            check: |i| i.n >= 1 && pos(&i.a),
            eval: bernoulli::corollary3,
            grid: || {
                let mut out = Vec::new();
                for a in [int(1), int(2), rat(1, 2), rat(7, 3)] {
                    out.extend((1..=30).map(|n| Inputs::new(n).with_a(a.clone())));
                }
                out
            },
        ),
        spec!(
            "corollary4", "polynomial Miki identity (a = 1 case)", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: bernoulli::corollary4, grid: || ns(1..=30),
        ),
        spec!(
            "eq-2-11", "a = 2 case of the shifted-harmonic family", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: bernoulli::eq_2_11, grid: || ns(1..=30),
        ),
        spec!(
            "eq-2-12", "a = 1 case before symmetrization", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: bernoulli::eq_2_12, grid: || ns(1..=30),
        ),
        spec!(
            "corollary5", "Bernoulli number-polynomial convolution (a → ∞)", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: bernoulli::corollary5, grid: || ns(1..=30),
        ),
        spec!(
            "corollary6", "halved convolution via B_n(2x)", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: bernoulli::corollary6, grid: || ns(1..=30),
        ),
        spec!(
            "eq-2-15", "halved convolution, equal-weight limit", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: bernoulli::eq_2_15, grid: || ns(1..=30),
        ),
        spec!(
            "corollary7", "second-order harmonic polynomial identity", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: bernoulli::corollary7, grid: || ns(1..=30),
        ),
        spec!(
            "eq-4-0a", "third-order unit-weight Bernoulli polynomial convolution", [N],
            "n ≥ 3", Polynomial, "n = 3..30",
            check: |i| i.n >= 3,
            eval: theorems::eq_4_0a, grid: || ns(3..=30),
        ),
        spec!(
            "kth-matiyasevich", "k-th order Matiyasevich identity", [N, K],
            "k ≥ 2, n ≥ 0", Number, "k = 2..4 × n = 0..20",
            check: |i| i.k.is_some_and(|k| (2..=16).contains(&k)),
            eval: theorems::kth_matiyasevich,
            grid: || {
                let mut out = Vec::new();
                for k in 2..=4 {
                    out.extend((0..=20).map(|n| Inputs::new(n).with_k(k)));
                }
                out
            },
        ),
        spec!(
            "eq-6-9", "three-fold equal-weight convolution with parameter ε", [N, Epsilon],
            "n ≥ 2, ε > 0", Polynomial, "ε ∈ {1, 1/2, 3} × n = 2..20",
            check: |i| i.n >= 2 && pos(&i.epsilon),
            eval: bernoulli::eq_6_9,
            grid: || {
                let mut out = Vec::new();
                for e in [int(1), rat(1, 2), int(3)] {
                    out.extend((2..=20).map(|n| Inputs::new(n).with_epsilon(e.clone())));
                }
                out
            },
        ),
        spec!(
            "corollary8", "three-fold multinomial convolution (ε → ∞)", [N],
            "n ≥ 2", Polynomial, "n = 2..30",
            check: |i| i.n >= 2,
            eval: bernoulli::corollary8, grid: || ns(2..=30),
        ),
        spec!(
            "corollary9", "third-order analogue of Miki's identity", [N],
            "n ≥ 2", Number, "n = 2..60",
            check: |i| i.n >= 2,
            eval: bernoulli::corollary9, grid: || ns(2..=60),
        ),
        spec!(
            "corollary10", "Euler polynomial Miki analogue", [N],
            "n ≥ 2", Polynomial, "n = 2..30",
            check: |i| i.n >= 2,
            eval: euler::corollary10, grid: || ns(2..=30),
        ),
        spec!(
            "corollary10b", "Euler polynomial identity with second-order harmonics", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: euler::corollary10b, grid: || ns(1..=30),
        ),
        spec!(
            "corollary11", "centered Euler polynomial convolution", [N],
            "n ≥ 2", Polynomial, "n = 2..30",
            check: |i| i.n >= 2,
            eval: euler::corollary11, grid: || ns(2..=30),
        ),
        spec!(
            "corollary11b", "third-order Euler polynomial Miki analogue", [N],
            "n ≥ 2", Polynomial, "n = 2..30",
            check: |i| i.n >= 2,
            eval: euler::corollary11b, grid: || ns(2..=30),
        ),
        spec!(
            "euler-matiyasevich", "unit-weight Euler polynomial convolution", [N],
            "n ≥ 1", Polynomial, "n = 1..30",
            check: |i| i.n >= 1,
            eval: theorems::euler_matiyasevich, grid: || ns(1..=30),
        ),
        spec!(
            "dunne-schubert", "Dunne–Schubert identity, normalized by Γ(p+1)²", [N, P],
            "n ≥ 2, p ≥ 0", Number, "n = 2..15 × p ∈ {0, 1/2, 1, 3/2, 2, 7/3}",
            check: |i| i.n >= 2 && non_negative(&i.p),
            eval: gamma::dunne_schubert, grid: || p_grid(2..=15, true),
        ),
        spec!(
            "dunne-schubert-p1", "Dunne–Schubert identity at p = 1", [N],
            "n ≥ 2", Number, "n = 2..30",
            check: |i| i.n >= 2,
            eval: gamma::dunne_schubert_p1, grid: || ns(2..=30),
        ),
        spec!(
            "eq-7-2", "Dunne–Schubert with the gamma sum in closed form", [N, P],
            "n ≥ 2, p > 0", Number, "n = 2..15 × p ∈ {1/2, 1, 3/2, 2, 7/3}",
            check: |i| i.n >= 2 && pos(&i.p),
            eval: gamma::eq_7_2, grid: || p_grid(2..=15, false),
        ),
        spec!(
            "gamma-sum", "gamma-ratio sum, normalized by Γ(p)/Γ(2p+1)", [N, P],
            "n ≥ 1, p > 0", Number, "n = 1..30 × p ∈ {1/2, 1, 3/2, 2, 7/3}",
            check: |i| i.n >= 1 && pos(&i.p),
            eval: gamma::gamma_sum, grid: || p_grid(1..=30, false),
        ),
    ]
});
