//! Kochen-Specker contextuality of a scenario graph.
//!
//! Weight every vertex by the number of maximal cliques through it,
//! `c_G(i)`. For any state `v`, `S(v) = Σ c_G(i) v(i)` counts each maximal
//! clique once, so `S(v) = c(G)`, the number of maximal cliques. An
//! independent set of weight `c(G)` must meet every maximal clique exactly
//! once, i.e. it is a 0-1 state. So the following are equivalent:
//!
//! 1. `α(G; c_G) = c(G)`;
//! 2. `G` has a 0-1 state;
//! 3. some 0-1 state `v` has `S(v) = α(G; c_G)`;
//! 4. some state `v` has `S(v) = α(G; c_G)`;
//!
//! and always `α(G; c_G) ≤ c(G)`. [`ks_check`] evaluates all four by
//! separate routines and refuses to report if they disagree. The verdict is
//! about the graph as given; it says nothing about whether the graph is the
//! atom graph of a physical system.

use std::time::{Duration, Instant};

use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::exactla::{format_rational, to_f64, Rational};
use crate::graph::{context_counts, total_contexts, weighted_independence, Graph, Independence, WeightVector};
use crate::states::{find_state_with, for_each_zero_one_state, is_state, zero_one_state, ZeroOneSearch};
use crate::{Error, Result};

mod cabello;
mod kcbs;

pub use cabello::{cabello18, Cabello18, CABELLO_BASES};
pub use kcbs::{kcbs_scenario, KcbsScenario};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    KsContextual,
    AdmitsZeroOne,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::KsContextual => "KS-contextual",
            Verdict::AdmitsZeroOne => "admits 0-1 state",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Scope of every verdict: a statement about the graph, not about a
/// physical realisation.
pub const VERDICT_LEVEL: &str = "scenario-graph";

#[derive(Clone, Debug)]
pub struct KSReport {
    pub graph: Graph,
    pub c_total: usize,
    pub counts: Vec<usize>,
    pub alpha_cg: Independence,
    pub zero_one: ZeroOneSearch,
    pub verdict: Verdict,
    /// The four equivalent statements, in the order of the module docs.
    pub statements: [bool; 4],
    pub elapsed: Duration,
}

impl KSReport {
    /// `c(G) − α(G; c_G)`; positive exactly for KS-contextual graphs.
    pub fn gap(&self) -> Rational {
        Rational::from_integer(self.c_total.into()) - &self.alpha_cg.value
    }

    /// `{graph: {n, m}, c_total, alpha_cg: {value, witness}, zero_one,
    /// search_nodes, verdict, level, statements, elapsed_ms}`. Timing is
    /// `null` unless requested so that reports are reproducible.
    pub fn to_json_value(&self, include_timing: bool) -> Value {
        let names = |set: &[usize]| -> Vec<&str> { set.iter().map(|&v| self.graph.label(v)).collect() };
        let zero_one = self
            .zero_one
            .witness
            .as_ref()
            .map(|w| json!({ "witness": names(w) }))
            .unwrap_or(Value::Null);
        json!({
            "graph": { "n": self.graph.len(), "m": self.graph.edge_count() },
            "c_total": self.c_total,
            "alpha_cg": {
                "value": integral(&self.alpha_cg.value),
                "witness": names(&self.alpha_cg.witness),
            },
            "zero_one": zero_one,
            "search_nodes": self.zero_one.nodes,
            "verdict": self.verdict.as_str(),
            "level": VERDICT_LEVEL,
            "statements": self.statements,
            "elapsed_ms": include_timing.then_some(self.elapsed.as_secs_f64() * 1e3),
        })
    }
}

/// Integers as JSON numbers, anything else as `"p/q"`.
pub(crate) fn integral(x: &Rational) -> Value {
    if x.is_integer() {
        if let Some(i) = x.to_integer().to_i64() {
            return json!(i);
        }
    }
    json!(format_rational(x))
}

/// `Σ c_G(i) p(i)` for a state `p`.
pub fn evaluate_s(g: &Graph, p: &[Rational]) -> Result<Rational> {
    if !is_state(g, p) {
        return Err(Error::NotState("maximal clique sums must all be 1".into()));
    }
    Ok(weighted_sum(&context_counts(g), p))
}

fn weighted_sum(counts: &[usize], p: &[Rational]) -> Rational {
    counts
        .iter()
        .zip(p)
        .filter(|(&c, _)| c > 0)
        .fold(Rational::zero(), |acc, (&c, x)| {
            acc + Rational::from_integer(c.into()) * x
        })
}

/// The noncontextuality inequality `S(v) ≤ α(G; c_G)` next to the value
/// `c(G)` every state attains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcInequality {
    pub alpha: Rational,
    pub witness: Vec<usize>,
    pub bound: usize,
    pub gap: Rational,
}

impl NcInequality {
    pub fn to_json_value(&self, g: &Graph, float: bool) -> Value {
        let render = |x: &Rational| if float { json!(to_f64(x)) } else { integral(x) };
        let witness: Vec<&str> = self.witness.iter().map(|&v| g.label(v)).collect();
        json!({
            "alpha": render(&self.alpha),
            "witness": witness,
            "bound": self.bound,
            "gap": render(&self.gap),
            "violated": self.gap > Rational::zero(),
        })
    }
}

pub fn nc_inequality(g: &Graph) -> Result<NcInequality> {
    let counts = context_counts(g);
    let alpha = weighted_independence(g, &WeightVector::from_counts(&counts))?;
    let bound = total_contexts(g);
    let gap = Rational::from_integer(bound.into()) - &alpha.value;
    Ok(NcInequality {
        alpha: alpha.value,
        witness: alpha.witness,
        bound,
        gap,
    })
}

/// Computes `c(G)`, `α(G; c_G)` and a 0-1 state search, evaluates the four
/// equivalent statements independently, and checks that they agree and
/// that `α(G; c_G) ≤ c(G)`. A disagreement would be a bug and is reported
/// as [`Error::Internal`].
pub fn ks_check(g: &Graph) -> Result<KSReport> {
    let start = Instant::now();
    let counts = context_counts(g);
    let c_total = total_contexts(g);
    let c = Rational::from_integer(c_total.into());
    let alpha = weighted_independence(g, &WeightVector::from_counts(&counts))?;
    if alpha.value > c {
        return Err(Error::Internal(format!(
            "α(G; c_G) = {} exceeds c(G) = {c_total}",
            format_rational(&alpha.value)
        )));
    }

    let s1 = alpha.value == c;
    let zero_one = zero_one_state(g);
    let s2 = zero_one.exists();
    let mut s3 = false;
    for_each_zero_one_state(g, &mut |w| {
        let s: usize = w.iter().map(|&v| counts[v]).sum();
        s3 = Rational::from_integer(s.into()) == alpha.value;
        !s3
    });
    let weights: Vec<Rational> = counts.iter().map(|&k| Rational::from_integer(k.into())).collect();
    let s4 = find_state_with(g, Some((&weights, &alpha.value)))?.is_some();

    let statements = [s1, s2, s3, s4];
    if statements.iter().any(|&s| s != s1) {
        return Err(Error::Internal(format!(
            "equivalent statements disagree: {statements:?}"
        )));
    }
    Ok(KSReport {
        graph: g.clone(),
        c_total,
        counts,
        alpha_cg: alpha,
        zero_one,
        verdict: if s2 {
            Verdict::AdmitsZeroOne
        } else {
            Verdict::KsContextual
        },
        statements,
        elapsed: start.elapsed(),
    })
}
