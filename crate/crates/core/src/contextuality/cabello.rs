//! The 18-ray Kochen-Specker set in dimension 4.
//!
//! Nine orthogonal bases, each ray shared by exactly two of them. A 0-1
//! assignment would pick one ray per basis, and counting picked rays over
//! bases would then give an even number (each ray counted twice) equal to
//! nine. So no assignment exists, which the exact-cover search confirms.

use num_traits::Zero;
use serde_json::{json, Value};

use super::{ks_check, nc_inequality, KSReport, NcInequality};
use crate::exactla::{dot, int, primitive_integer_vector, Rational};
use crate::graph::io::graph_to_json_value;
use crate::graph::Graph;
use crate::orthorep::orthogonality_graph;
use crate::{Error, Result};

pub const CABELLO_BASES: [[[i8; 4]; 4]; 9] = [
    [[0, 0, 0, 1], [0, 0, 1, 0], [1, 1, 0, 0], [1, -1, 0, 0]],
    [[0, 0, 0, 1], [0, 1, 0, 0], [1, 0, 1, 0], [1, 0, -1, 0]],
    [[1, -1, 1, -1], [1, -1, -1, 1], [1, 1, 0, 0], [0, 0, 1, 1]],
    [[1, -1, 1, -1], [1, 1, 1, 1], [1, 0, -1, 0], [0, 1, 0, -1]],
    [[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 1], [1, 0, 0, -1]],
    [[1, -1, -1, 1], [1, 1, 1, 1], [1, 0, 0, -1], [0, 1, -1, 0]],
    [[1, 1, -1, 1], [1, 1, 1, -1], [1, -1, 0, 0], [0, 0, 1, 1]],
    [[1, 1, -1, 1], [-1, 1, 1, 1], [1, 0, 1, 0], [0, 1, 0, -1]],
    [[1, 1, 1, -1], [-1, 1, 1, 1], [1, 0, 0, 1], [0, 1, -1, 0]],
];

#[derive(Clone, Debug)]
pub struct Cabello18 {
    /// Orthogonality graph of the distinct rays.
    pub graph: Graph,
    /// Primitive integer representative of each ray, first nonzero entry
    /// positive, indexed like the graph.
    pub rays: Vec<Vec<Rational>>,
    /// Each basis as four vertex indices.
    pub bases: Vec<[usize; 4]>,
    /// Number of bases containing each ray.
    pub memberships: Vec<usize>,
    pub report: KSReport,
    pub inequality: NcInequality,
}

impl Cabello18 {
    /// Every ray lies in an even number of bases while the number of bases
    /// is odd, which rules out a 0-1 assignment by counting.
    pub fn parity_obstruction(&self) -> bool {
        self.memberships.iter().all(|m| m % 2 == 0) && self.bases.len() % 2 == 1
    }

    pub fn to_json_value(&self, include_timing: bool) -> Value {
        let bases: Vec<Vec<&str>> = self
            .bases
            .iter()
            .map(|b| b.iter().map(|&v| self.graph.label(v)).collect())
            .collect();
        json!({
            "graph": graph_to_json_value(&self.graph),
            "bases": bases,
            "memberships": self.memberships,
            "parity_obstruction": self.parity_obstruction(),
            "inequality": self.inequality.to_json_value(&self.graph, false),
            "report": self.report.to_json_value(include_timing),
        })
    }
}

fn ray_label(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Verifies the embedded vectors (every basis exactly orthogonal, 18
/// distinct rays) and runs the contextuality check on their orthogonality
/// graph.
pub fn cabello18() -> Result<Cabello18> {
    let mut rays: Vec<Vec<Rational>> = Vec::new();
    let mut bases = Vec::with_capacity(CABELLO_BASES.len());
    for basis in &CABELLO_BASES {
        let vectors: Vec<Vec<Rational>> = basis
            .iter()
            .map(|v| v.iter().map(|&x| int(x.into())).collect())
            .collect();
        for (i, a) in vectors.iter().enumerate() {
            for b in &vectors[i + 1..] {
                if !dot(a, b).is_zero() {
                    return Err(Error::Internal(format!(
                        "fixture basis vectors {} and {} are not orthogonal",
                        ray_label(a),
                        ray_label(b)
                    )));
                }
            }
        }
        let mut ids = [0usize; 4];
        for (slot, v) in ids.iter_mut().zip(&vectors) {
            let ray = primitive_integer_vector(v);
            *slot = match rays.iter().position(|r| *r == ray) {
                Some(i) => i,
                None => {
                    rays.push(ray);
                    rays.len() - 1
                }
            };
        }
        bases.push(ids);
    }
    if rays.len() != 18 {
        return Err(Error::Internal(format!(
            "fixture has {} distinct rays, expected 18",
            rays.len()
        )));
    }
    let mut memberships = vec![0usize; rays.len()];
    for b in &bases {
        for &v in b {
            memberships[v] += 1;
        }
    }
    let graph = orthogonality_graph(rays.iter().map(|r| ray_label(r)), &rays)?;
    let report = ks_check(&graph)?;
    let inequality = nc_inequality(&graph)?;
    Ok(Cabello18 {
        graph,
        rays,
        bases,
        memberships,
        report,
        inequality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contextuality::Verdict;
    use crate::graph::maximal_cliques;

    #[test]
    fn fixture() {
        let c = cabello18().unwrap();
        assert_eq!(c.graph.len(), 18);
        assert!(c.memberships.iter().all(|&m| m == 2));
        assert!(c.parity_obstruction());
        let cliques = maximal_cliques(&c.graph);
        for b in &c.bases {
            let mut b = b.to_vec();
            b.sort_unstable();
            assert!(cliques.contains(&b));
        }
        assert!(!c.report.zero_one.exists());
        assert_eq!(c.report.verdict, Verdict::KsContextual);
        assert!(c.inequality.gap > Rational::zero());
    }
}
