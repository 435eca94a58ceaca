//! Ring and Steenrod-square dumps for the `ring` and `sq` commands.

use serde::Serialize;
use stiefel_core::ring::Connectivity;
use stiefel_core::{Field, RingPresentation, SqTable, SquareRule};

use crate::CliError;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GeneratorDump {
    pub label: u32,
    pub name: String,
    pub degree: u32,
    /// Name of the generator it squares to, or `"0"`.
    pub square: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DegreeDump {
    pub degree: u32,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RingDump {
    pub field: Field,
    pub n: u32,
    pub k: u32,
    pub max_degree: u32,
    pub manifold_dimension: u32,
    pub connectivity: Connectivity,
    pub generators: Vec<GeneratorDump>,
    pub degrees: Vec<DegreeDump>,
}

fn generator_name(ring: &RingPresentation, label: u32) -> String {
    let letter = if ring.field() == Field::Real { 'a' } else { 'y' };
    format!("{letter}_{label}")
}

impl RingDump {
    pub fn new(ring: &RingPresentation) -> Self {
        let generators = ring
            .generators()
            .iter()
            .map(|g| GeneratorDump {
                label: g.label,
                name: generator_name(ring, g.label),
                degree: g.degree,
                square: match g.square {
                    SquareRule::Generator(l) => generator_name(ring, l),
                    SquareRule::Zero => "0".into(),
                },
            })
            .collect();
        let degrees = (0..=ring.max_degree())
            .map(|d| {
                let basis = ring.basis(d).expect("degree in range");
                DegreeDump {
                    degree: d,
                    dim: basis.len(),
                    basis: basis.iter().map(|m| ring.format_monomial(m)).collect(),
                }
            })
            .collect();
        RingDump {
            field: ring.field(),
            n: ring.n(),
            k: ring.k(),
            max_degree: ring.max_degree(),
            manifold_dimension: ring.manifold_dimension(),
            connectivity: ring.connectivity(),
            generators,
            degrees,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SqEntry {
    pub i: u32,
    pub monomial: String,
    pub degree: u32,
    pub value: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SqDump {
    pub field: Field,
    pub n: u32,
    pub k: u32,
    pub max_degree: u32,
    pub operations: Vec<u32>,
    pub entries: Vec<SqEntry>,
}

impl SqDump {
    /// `Sq^i` on every basis monomial with `i <= degree` and
    /// `degree + i <= max_degree`. Without `only`, real rings get every
    /// `i >= 1` and complex or quaternionic rings get `Sq^1`.
    pub fn new(ring: &RingPresentation, only: Option<u32>) -> Result<Self, CliError> {
        let operations: Vec<u32> = match (only, ring.field()) {
            (Some(i), _) => vec![i],
            (None, Field::Real) => (1..=ring.max_degree() / 2).collect(),
            (None, _) => vec![1],
        };
        let table = SqTable::new(ring);
        let mut entries = Vec::new();
        for d in 0..=ring.max_degree() {
            for m in ring.basis(d)? {
                for &i in &operations {
                    if i > d || d + i > ring.max_degree() {
                        continue;
                    }
                    let value = table.sq_monomial(i, m)?;
                    entries.push(SqEntry {
                        i,
                        monomial: ring.format_monomial(m),
                        degree: d,
                        value: ring.format_terms(&value),
                    });
                }
            }
        }
        Ok(SqDump {
            field: ring.field(),
            n: ring.n(),
            k: ring.k(),
            max_degree: ring.max_degree(),
            operations,
            entries,
        })
    }
}
