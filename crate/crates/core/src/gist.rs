//! Structural manifold and its magnitude.
//!
//! Binding dimension `i` means ignoring it. A member of A is invariant under
//! that binding when another member of A becomes indistinguishable from it.
//! The manifold holds the invariant fraction of A for every dimension.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::structures::{CategoryStructure, Stimulus};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructuralManifold {
    pub proportions: Vec<f64>,
    /// Euclidean norm of `proportions`.
    pub phi_hat: f64,
}

impl StructuralManifold {
    pub fn from_proportions(proportions: Vec<f64>) -> Self {
        let phi_hat = proportions.iter().map(|p| p * p).sum::<f64>().sqrt();
        Self {
            proportions,
            phi_hat,
        }
    }
}

/// `(0,0,1)`
impl fmt::Display for StructuralManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.proportions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Manifold via single-dimension flips: a member is invariant on dimension
/// `i` when flipping `i` lands on another member.
pub fn structural_manifold(s: &CategoryStructure) -> StructuralManifold {
    let dims = s.dims();
    let proportions = (0..dims)
        .map(|dim| {
            let bit: Stimulus = 1 << (dims - 1 - dim);
            let invariant = s.members().iter().filter(|&&m| s.contains(m ^ bit)).count();
            invariant as f64 / s.size() as f64
        })
        .collect();
    StructuralManifold::from_proportions(proportions)
}

/// Manifold via projections: delete dimension `i` from every member and
/// count members whose projection is shared with another member.
pub fn structural_manifold_by_projection(s: &CategoryStructure) -> StructuralManifold {
    let dims = s.dims();
    let proportions = (0..dims)
        .map(|dim| {
            let mut projections: HashMap<String, usize> = HashMap::new();
            let keys: Vec<String> = s
                .members()
                .iter()
                .map(|&m| {
                    let mut digits = crate::structures::bitstring(m, dims);
                    digits.remove(dim);
                    digits
                })
                .collect();
            for key in &keys {
                *projections.entry(key.clone()).or_default() += 1;
            }
            let invariant = keys.iter().filter(|k| projections[*k] > 1).count();
            invariant as f64 / s.size() as f64
        })
        .collect();
    StructuralManifold::from_proportions(proportions)
}
