//! Faithful, linearly independent orthogonal co-representations.
//!
//! A co-representation assigns a vector to each vertex so that adjacent
//! vertices get orthogonal vectors. It is *faithful* when the assignment is
//! injective and orthogonality happens only along edges, and *linearly
//! independent* when the vectors are. Every graph on `n` vertices has one in
//! `Q^n`; [`construct_flior`] builds it one vertex at a time.
//!
//! Vectors are kept as primitive integer vectors rather than unit vectors:
//! unit length is generally irrational, and both properties are invariant
//! under rescaling. Unit vectors only appear in floating-point exports.

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::exactla::{
    dot, format_rational, nullspace, parse_rational, primitive_integer_vector, rank, to_f64, Rational, RationalMatrix,
};
use crate::graph::Graph;
use crate::{Error, Result};

/// A vector per vertex, all of one dimension, with the exact Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoRep {
    graph: Graph,
    dimension: usize,
    vectors: Vec<Vec<Rational>>,
    gram: RationalMatrix,
}

impl OrthoRep {
    pub fn new(graph: Graph, dimension: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if vectors.len() != graph.len() {
            return Err(Error::DimensionMismatch {
                expected: graph.len(),
                found: vectors.len(),
            });
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: v.len(),
                });
            }
            if v.iter().all(Zero::is_zero) {
                return Err(Error::InvalidGraph(format!(
                    "zero vector assigned to vertex {:?}",
                    graph.label(i)
                )));
            }
        }
        let gram = RationalMatrix::gram(&vectors);
        Ok(OrthoRep {
            graph,
            dimension,
            vectors,
            gram,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    pub fn vector(&self, v: usize) -> &[Rational] {
        &self.vectors[v]
    }

    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    /// Unit-normalised floating copies of the vectors.
    pub fn normalized_f64(&self) -> Vec<Vec<f64>> {
        self.vectors
            .iter()
            .map(|v| {
                let xs: Vec<f64> = v.iter().map(to_f64).collect();
                let norm = xs.iter().map(|x| x * x).sum::<f64>().sqrt();
                xs.into_iter().map(|x| x / norm).collect()
            })
            .collect()
    }

    /// `{"dimension": d, "vectors": {label: ["p/q", ...]}}`.
    pub fn to_json_value(&self) -> Value {
        let mut vectors = Map::new();
        for (i, v) in self.vectors.iter().enumerate() {
            let entries: Vec<String> = v.iter().map(format_rational).collect();
            vectors.insert(self.graph.label(i).to_string(), json!(entries));
        }
        json!({ "dimension": self.dimension, "vectors": vectors })
    }

    /// Floating export: unit vectors with plain `f64` components.
    pub fn to_float_json_value(&self) -> Value {
        let mut vectors = Map::new();
        for (i, v) in self.normalized_f64().into_iter().enumerate() {
            vectors.insert(self.graph.label(i).to_string(), json!(v));
        }
        json!({ "dimension": self.dimension, "vectors": vectors })
    }

    /// Reads the exact JSON form for the vertices of `graph`.
    pub fn from_json_value(graph: Graph, v: &Value) -> Result<Self> {
        let dimension = v
            .get("dimension")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("orthorep JSON needs an integer \"dimension\"".into()))?
            as usize;
        let map = v
            .get("vectors")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("orthorep JSON needs a \"vectors\" object".into()))?;
        let vectors = graph
            .labels()
            .iter()
            .map(|label| {
                let entries = map
                    .get(label)
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse(format!("no vector for vertex {label:?}")))?;
                entries
                    .iter()
                    .map(|e| match e {
                        Value::String(s) => parse_rational(s),
                        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
                        other => Err(Error::Parse(format!("bad vector entry {other}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        OrthoRep::new(graph, dimension, vectors)
    }
}

/// Builds a faithful, linearly independent co-representation of `g` in
/// `Q^n`, `n = |V(g)|`.
pub fn construct_flior(g: &Graph) -> Result<OrthoRep> {
    construct_flior_in(g, g.len())
}

/// As [`construct_flior`], embedded in `Q^dim` with `dim ≥ n`. Only the
/// first `n` coordinates are used.
///
/// Vertex `k` (in input order) gets `Σ x_i v_i + e_k`, where `e_k` spans
/// a direction orthogonal to all earlier vectors. The coefficients `x` solve
/// `(v_j, Σ x_i v_i) = 0` for each earlier neighbour `j` and must keep the
/// same form nonzero for each earlier non-neighbour. The equalities cut out
/// a subspace `S`; each inequality excludes a hyperplane of `S`. Integer
/// coordinate tuples over a basis of `S` are tried in order of increasing
/// max-norm until one avoids every hyperplane.
pub fn construct_flior_in(g: &Graph, dim: usize) -> Result<OrthoRep> {
    let n = g.len();
    if dim < n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: dim,
        });
    }
    let mut vectors: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for k in 0..n {
        let fresh = orthogonal_direction(&vectors, dim)?;
        let gram = RationalMatrix::gram(&vectors);

        let (adjacent, separate): (Vec<usize>, Vec<usize>) = (0..k).partition(|&j| g.adjacent(j, k));
        let solution_basis: Vec<Vec<Rational>> = if adjacent.is_empty() {
            (0..k).map(|l| unit(k, l)).collect()
        } else {
            let eq = RationalMatrix::from_rows(adjacent.iter().map(|&j| gram.row(j).to_vec()).collect())?;
            nullspace(&eq)
        };
        // hyperplane normals inside S, one per non-neighbour
        let normals: Vec<Vec<Rational>> = separate
            .iter()
            .map(|&j| solution_basis.iter().map(|s| dot(gram.row(j), s)).collect())
            .collect();
        if normals.iter().any(|c| c.iter().all(Zero::is_zero)) {
            return Err(Error::Internal(
                "inequality constraint vanishes on the solution space".into(),
            ));
        }
        let t = avoid_hyperplanes(solution_basis.len(), &normals);

        let mut v = fresh;
        for (tl, s) in t.iter().zip(&solution_basis) {
            if tl.is_zero() {
                continue;
            }
            for (i, si) in s.iter().enumerate() {
                if si.is_zero() {
                    continue;
                }
                let coeff = tl * si;
                for (vc, pc) in v.iter_mut().zip(&vectors[i]) {
                    *vc += &coeff * pc;
                }
            }
        }
        vectors.push(primitive_integer_vector(&v));
    }
    OrthoRep::new(g.clone(), dim, vectors)
}

fn unit(len: usize, at: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[at] = Rational::one();
    v
}

/// Some nonzero vector orthogonal to all of `vectors`.
fn orthogonal_direction(vectors: &[Vec<Rational>], dim: usize) -> Result<Vec<Rational>> {
    if vectors.is_empty() {
        return Ok(unit(dim, 0));
    }
    let m = RationalMatrix::from_rows(vectors.to_vec())?;
    nullspace(&m)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("no orthogonal direction left".into()))
}

/// First integer tuple, by increasing max-norm, with `c · t ≠ 0` for every
/// normal `c`. Terminates because finitely many hyperplanes cannot cover
/// the integer lattice.
fn avoid_hyperplanes(dim: usize, normals: &[Vec<Rational>]) -> Vec<Rational> {
    let ok = |t: &[i64]| {
        normals.iter().all(|c| {
            let s = c
                .iter()
                .zip(t)
                .filter(|(_, &ti)| ti != 0)
                .fold(Rational::zero(), |acc, (ci, &ti)| {
                    acc + ci * Rational::from_integer(ti.into())
                });
            !s.is_zero()
        })
    };
    for radius in 0i64.. {
        let mut t = vec![-radius; dim];
        loop {
            if (dim == 0 || t.iter().any(|x| x.abs() == radius)) && ok(&t) {
                return t.into_iter().map(|x| Rational::from_integer(x.into())).collect();
            }
            // odometer over [-radius, radius]^dim
            let mut pos = 0;
            while pos < dim && t[pos] == radius {
                t[pos] = -radius;
                pos += 1;
            }
            if pos == dim {
                break;
            }
            t[pos] += 1;
        }
    }
    unreachable!("radius loop is unbounded")
}

/// Graph on the given vectors with an edge for every exactly orthogonal
/// pair.
pub fn orthogonality_graph<S: Into<String>>(
    labels: impl IntoIterator<Item = S>,
    vectors: &[Vec<Rational>],
) -> Result<Graph> {
    let mut g = Graph::new(labels)?;
    if g.len() != vectors.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            found: vectors.len(),
        });
    }
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            if vectors[i].len() != vectors[j].len() {
                return Err(Error::DimensionMismatch {
                    expected: vectors[i].len(),
                    found: vectors[j].len(),
                });
            }
            if dot(&vectors[i], &vectors[j]).is_zero() {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Injective, and `v_i ⊥ v_j` exactly when `i` and `j` are adjacent.
pub fn verify_faithful(g: &Graph, rep: &OrthoRep) -> bool {
    let n = g.len();
    if rep.vectors.len() != n {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            if rep.vectors[i] == rep.vectors[j] {
                return false;
            }
            if g.adjacent(i, j) != rep.gram.get(i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Rank of the stacked vectors equals the vertex count.
pub fn verify_linear_independence(rep: &OrthoRep) -> bool {
    if rep.vectors.is_empty() {
        return true;
    }
    match RationalMatrix::from_rows(rep.vectors.clone()) {
        Ok(m) => rank(&m) == rep.vectors.len(),
        Err(_) => false,
    }
}

/// The pentagon umbrella in `R^3`: five unit vectors with `v_i ⊥ v_{i+1}`
/// arranged symmetrically around the handle `ψ = (0, 0, 1)`.
#[derive(Clone, Debug)]
pub struct Umbrella {
    pub vectors: [[f64; 3]; 5],
    pub handle: [f64; 3],
}

impl Umbrella {
    /// `Σ ⟨ψ|v_i⟩²`.
    pub fn value(&self) -> f64 {
        self.vectors
            .iter()
            .map(|v| {
                let d: f64 = v.iter().zip(&self.handle).map(|(a, b)| a * b).sum();
                d * d
            })
            .sum()
    }

    /// Largest `|⟨v_i, v_{i+1}⟩|`.
    pub fn orthogonality_residual(&self) -> f64 {
        (0..5)
            .map(|i| {
                let (a, b) = (&self.vectors[i], &self.vectors[(i + 1) % 5]);
                a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>().abs()
            })
            .fold(0.0, f64::max)
    }
}

/// `v_i = (sin θ cos φ_i, sin θ sin φ_i, cos θ)` with `φ_i = 4πi/5` and
/// `cos²θ = cos(π/5) / (1 + cos(π/5))`, which makes consecutive vectors
/// orthogonal.
pub fn kcbs_umbrella() -> Umbrella {
    use std::f64::consts::PI;
    let c = (PI / 5.0).cos();
    let cos_theta = (c / (1.0 + c)).sqrt();
    let sin_theta = (1.0 - cos_theta * cos_theta).sqrt();
    let mut vectors = [[0.0; 3]; 5];
    for (i, v) in vectors.iter_mut().enumerate() {
        let phi = 4.0 * PI * i as f64 / 5.0;
        *v = [sin_theta * phi.cos(), sin_theta * phi.sin(), cos_theta];
    }
    Umbrella {
        vectors,
        handle: [0.0, 0.0, 1.0],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactla::int;

    fn rep(g: Graph, vs: &[&[i64]]) -> OrthoRep {
        let d = vs[0].len();
        OrthoRep::new(g, d, vs.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn single_vertex() {
        let g = catalog::complete(1);
        let r = construct_flior(&g).unwrap();
        assert_eq!(r.dimension(), 1);
        assert!(!r.vector(0)[0].is_zero());
    }

    #[test]
    fn triangle_gets_standard_basis() {
        let r = construct_flior(&catalog::complete(3)).unwrap();
        assert_eq!(
            r.vectors(),
            &[
                vec![int(1), int(0), int(0)],
                vec![int(0), int(1), int(0)],
                vec![int(0), int(0), int(1)]
            ]
        );
    }

    #[test]
    fn pentagon_passes_both_verifiers() {
        let g = catalog::pentagon();
        let r = construct_flior(&g).unwrap();
        assert_eq!(r.dimension(), 5);
        assert!(verify_faithful(&g, &r));
        assert!(verify_linear_independence(&r));
        // deterministic
        assert_eq!(construct_flior(&g).unwrap(), r);
    }

    #[test]
    fn faithfulness_examples() {
        let k2 = catalog::complete(2);
        assert!(verify_faithful(&k2, &rep(k2.clone(), &[&[1, 0], &[0, 1]])));
        assert!(!verify_faithful(&k2, &rep(k2.clone(), &[&[1, 0], &[1, 1]])));
        let e2 = catalog::edgeless(2);
        assert!(!verify_faithful(&e2, &rep(e2.clone(), &[&[1, 0], &[0, 1]])));
        // not injective
        assert!(!verify_faithful(&e2, &rep(e2.clone(), &[&[1, 1], &[1, 1]])));
    }

    #[test]
    fn independence_examples() {
        assert!(verify_linear_independence(&rep(
            catalog::complete(3),
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]
        )));
        assert!(!verify_linear_independence(&rep(
            catalog::edgeless(2),
            &[&[1, 0], &[2, 0]]
        )));
    }

    #[test]
    fn zero_vectors_rejected() {
        let g = catalog::edgeless(1);
        assert!(OrthoRep::new(g, 2, vec![vec![int(0), int(0)]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = catalog::bowtie();
        let r = construct_flior(&g).unwrap();
        let v = r.to_json_value();
        let back = OrthoRep::from_json_value(g, &v).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json_value(), v);
    }

    #[test]
    fn padded_dimension() {
        let g = catalog::complete(2);
        let r = construct_flior_in(&g, 3).unwrap();
        assert_eq!(r.dimension(), 3);
        assert!(verify_faithful(&g, &r) && verify_linear_independence(&r));
        assert!(construct_flior_in(&g, 1).is_err());
    }

    #[test]
    fn orthogonality_graph_recovers_the_graph() {
        let g = catalog::pentagon();
        let r = construct_flior(&g).unwrap();
        let h = orthogonality_graph(g.labels().to_vec(), r.vectors()).unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn umbrella() {
        let u = kcbs_umbrella();
        assert!(u.orthogonality_residual() < 1e-12);
        for v in &u.vectors {
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        assert!((u.value() - 5f64.sqrt()).abs() < 1e-9);
    }
}
