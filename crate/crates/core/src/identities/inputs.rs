use std::fmt;

use crate::exactmath::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamKind {
    N,
    K,
    A,
    B,
    AVec,
    P,
    Epsilon,
}

impl ParamKind {
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::N => "n",
            ParamKind::K => "k",
            ParamKind::A => "a",
            ParamKind::B => "b",
            ParamKind::AVec => "a_vec",
            ParamKind::P => "p",
            ParamKind::Epsilon => "epsilon",
        }
    }
}

/// One grid point. Only the fields an identity declares are consulted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Inputs {
    pub n: usize,
    pub k: Option<usize>,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub a_vec: Option<Vec<Rational>>,
    pub p: Option<Rational>,
    pub epsilon: Option<Rational>,
}

impl Inputs {
    pub fn new(n: usize) -> Self {
        Inputs {
            n,
            ..Default::default()
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = n;
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_a(mut self, a: Rational) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_b(mut self, b: Rational) -> Self {
        self.b = Some(b);
        self
    }

    /// Also sets `k` to the vector length.
    pub fn with_a_vec(mut self, a_vec: Vec<Rational>) -> Self {
        self.k = Some(a_vec.len());
        self.a_vec = Some(a_vec);
        self
    }

    pub fn with_p(mut self, p: Rational) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_epsilon(mut self, epsilon: Rational) -> Self {
        self.epsilon = Some(epsilon);
        self
    }

    pub fn has(&self, kind: ParamKind) -> bool {
        match kind {
            ParamKind::N => true,
            ParamKind::K => self.k.is_some(),
            ParamKind::A => self.a.is_some(),
            ParamKind::B => self.b.is_some(),
            ParamKind::AVec => self.a_vec.is_some(),
            ParamKind::P => self.p.is_some(),
            ParamKind::Epsilon => self.epsilon.is_some(),
        }
    }

    /// Named values in a fixed order, rationals formatted as `p/q`.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![("n", self.n.to_string())];
        if let Some(k) = self.k {
            out.push(("k", k.to_string()));
        }
        for (name, v) in [("a", &self.a), ("b", &self.b)] {
            if let Some(v) = v {
                out.push((name, format_rational(v)));
            }
        }
        if let Some(v) = &self.a_vec {
            let parts: Vec<String> = v.iter().map(format_rational).collect();
            out.push(("a_vec", parts.join(",")));
        }
        for (name, v) in [("p", &self.p), ("epsilon", &self.epsilon)] {
            if let Some(v) = v {
                out.push((name, format_rational(v)));
            }
        }
        out
    }

    pub(crate) fn a_vec_or_empty(&self) -> &[Rational] {
        self.a_vec.as_deref().unwrap_or(&[])
    }
}

impl fmt::Display for Inputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .fields()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

// Accessors for evaluators. The registry checks presence before any
// evaluator runs, so a missing value here is a registry bug.
impl Inputs {
    pub(crate) fn a_val(&self) -> &Rational {
        self.a.as_ref().expect("registry checked `a`")
    }

    pub(crate) fn b_val(&self) -> &Rational {
        self.b.as_ref().expect("registry checked `b`")
    }

    pub(crate) fn p_val(&self) -> &Rational {
        self.p.as_ref().expect("registry checked `p`")
    }

    pub(crate) fn eps_val(&self) -> &Rational {
        self.epsilon.as_ref().expect("registry checked `epsilon`")
    }

    pub(crate) fn k_val(&self) -> usize {
        self.k.expect("registry checked `k`")
    }
}
