use serde_json::{json, Value};

use super::integral;
use crate::catalog;
use crate::exactla::{to_f64, Rational};
use crate::extension::context_extension;
use crate::graph::io::graph_to_json_value;
use crate::graph::{weighted_independence, Graph, WeightVector};
use crate::orthorep::{kcbs_umbrella, Umbrella};
use crate::states::{quantum_state_eval_rays, DensityMatrix};
use crate::Result;

/// The pentagon scenario: five rank-one measurements in `R^3` with
/// consecutive ones exclusive.
#[derive(Clone, Debug)]
pub struct KcbsScenario {
    pub graph: Graph,
    /// `α(C5) = 2`: the largest number of outcomes a 0-1 assignment can
    /// make true.
    pub classical_bound: Rational,
    pub umbrella: Umbrella,
    /// `⟨ψ|v_i⟩²` for the handle state `ψ`.
    pub probabilities: Vec<f64>,
    pub quantum_value: f64,
    pub violation: bool,
    /// Largest `|⟨v_i, v_{i+1}⟩|`, a check on the umbrella.
    pub orthogonality_residual: f64,
    /// Context extension of the pentagon: the atom graph of the algebra the
    /// five projectors generate in dimension 5.
    pub extended: Graph,
}

pub fn kcbs_scenario() -> Result<KcbsScenario> {
    let graph = catalog::pentagon();
    let classical_bound = weighted_independence(&graph, &WeightVector::ones(graph.len()))?.value;
    let umbrella = kcbs_umbrella();
    let rho = DensityMatrix::pure(&umbrella.handle)?;
    let rays: Vec<Vec<f64>> = umbrella.vectors.iter().map(|v| v.to_vec()).collect();
    let probabilities = quantum_state_eval_rays(&rays, &rho)?;
    let quantum_value: f64 = probabilities.iter().sum();
    let violation = quantum_value > to_f64(&classical_bound);
    let extended = context_extension(&graph);
    Ok(KcbsScenario {
        orthogonality_residual: umbrella.orthogonality_residual(),
        graph,
        classical_bound,
        umbrella,
        probabilities,
        quantum_value,
        violation,
        extended,
    })
}

impl KcbsScenario {
    pub fn to_json_value(&self) -> Value {
        json!({
            "graph": graph_to_json_value(&self.graph),
            "classical_bound": integral(&self.classical_bound),
            "umbrella": {
                "vectors": self.umbrella.vectors,
                "state": self.umbrella.handle,
                "orthogonality_residual": self.orthogonality_residual,
            },
            "probabilities": self.probabilities,
            "quantum_value": self.quantum_value,
            "violation": self.violation,
            "extended": graph_to_json_value(&self.extended),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;
    use crate::graph::maximal_cliques;

    #[test]
    fn scenario_values() {
        let s = kcbs_scenario().unwrap();
        assert_eq!(s.classical_bound, int(2));
        assert!((s.quantum_value - 5f64.sqrt()).abs() < 1e-9);
        assert!(s.violation);
        assert!(s.orthogonality_residual < 1e-12);
        assert_eq!(s.extended.len(), 10);
        assert_eq!(maximal_cliques(&s.extended).len(), 5);
    }
}
