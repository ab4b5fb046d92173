//! JSON file formats.
//!
//! ```text
//! algebra        {"atoms": ["a", "b", ...]}
//! diagram        {"algebra": {...}, "fragment": [["a"], ["a","b"], ...], "labels": [...]}
//! relation       {"set": [...], "mu": [["1","1/2"], ...], "nu": [[...], ...]}
//! lattice        {"carrier": [...], "mu": [[...]], "nu": [[...]]}
//! fuzzy set      {"x": "0.3", "y": "1/2", ...}
//! fuzzy diagram  {"lattice": {...}, "fragment": ["carrier label", ...], "labels": [...], "tolerance": "1/100"}
//! ```
//!
//! Degrees are strings, `p/q` or decimal; they are read exactly. Diagram
//! fragments list each element as its atom labels in atom order.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::BooleanAlgebra;
use crate::degree::{Degree, FuzzySet};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::fuzzy_diagram::{default_tolerance, FuzzyAristotelianDiagram};
use crate::iflattice::IFLattice;
use crate::ifrel::{FiniteSet, IFRelation, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraRecord {
    pub atoms: Vec<String>,
}

impl AlgebraRecord {
    pub fn build(&self) -> Result<BooleanAlgebra> {
        BooleanAlgebra::with_labels(self.atoms.iter().cloned())
    }

    pub fn from_algebra(algebra: &BooleanAlgebra) -> Self {
        AlgebraRecord {
            atoms: algebra.atoms().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramRecord {
    pub algebra: AlgebraRecord,
    pub fragment: Vec<Vec<String>>,
    /// Defaults to the `{a,b}` rendering of each element.
    #[serde(default)]
    pub labels: Vec<String>,
}

impl DiagramRecord {
    pub fn build(&self) -> Result<Diagram> {
        let algebra = self.algebra.build()?;
        let fragment = self
            .fragment
            .iter()
            .map(|atoms| algebra.element_from_labels(atoms))
            .collect::<Result<Vec<_>>>()?;
        if self.labels.is_empty() {
            Diagram::unlabelled(algebra, fragment)
        } else {
            Diagram::new(algebra, fragment, self.labels.clone())
        }
    }

    pub fn from_diagram(diagram: &Diagram) -> Self {
        DiagramRecord {
            algebra: AlgebraRecord::from_algebra(diagram.algebra()),
            fragment: diagram.fragment().iter().map(|e| e.labels()).collect(),
            labels: diagram.labels().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationRecord {
    pub set: Vec<String>,
    pub mu: Matrix,
    pub nu: Matrix,
}

impl RelationRecord {
    pub fn build(&self) -> Result<IFRelation> {
        let set = FiniteSet::new(self.set.iter().cloned())?;
        IFRelation::square(set, self.mu.clone(), self.nu.clone())
    }

    pub fn from_relation(relation: &IFRelation) -> Result<Self> {
        if !relation.is_square() {
            return Err(Error::NotSquare);
        }
        Ok(RelationRecord {
            set: relation.source().labels().to_vec(),
            mu: relation.mu_matrix().clone(),
            nu: relation.nu_matrix().clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeRecord {
    #[serde(alias = "set")]
    pub carrier: Vec<String>,
    pub mu: Matrix,
    pub nu: Matrix,
}

impl LatticeRecord {
    pub fn relation(&self) -> Result<IFRelation> {
        let set = FiniteSet::new(self.carrier.iter().cloned())?;
        IFRelation::square(set, self.mu.clone(), self.nu.clone())
    }

    pub fn build(&self) -> Result<IFLattice> {
        IFLattice::new(self.relation()?)
    }

    pub fn from_lattice(lattice: &IFLattice) -> Self {
        LatticeRecord {
            carrier: lattice.carrier().labels().to_vec(),
            mu: lattice.order().mu_matrix().clone(),
            nu: lattice.order().nu_matrix().clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzyDiagramRecord {
    pub lattice: LatticeRecord,
    /// Carrier labels.
    pub fragment: Vec<String>,
    #[serde(default)]
    pub labels: Vec<String>,
    #[serde(default = "default_tolerance")]
    pub tolerance: Degree,
}

impl FuzzyDiagramRecord {
    pub fn build(&self) -> Result<FuzzyAristotelianDiagram> {
        let lattice = self.lattice.build()?;
        let fragment = self
            .fragment
            .iter()
            .map(|label| {
                lattice.carrier().index_of(label).ok_or_else(|| {
                    Error::Record(format!("fragment element `{label}` is not in the carrier"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = if self.labels.is_empty() {
            self.fragment.clone()
        } else {
            self.labels.clone()
        };
        FuzzyAristotelianDiagram::new(Arc::new(lattice), fragment, labels, self.tolerance.clone())
    }

    pub fn from_diagram(diagram: &FuzzyAristotelianDiagram) -> Self {
        let carrier = diagram.algebra().carrier();
        FuzzyDiagramRecord {
            lattice: LatticeRecord::from_lattice(diagram.algebra()),
            fragment: diagram
                .fragment()
                .iter()
                .map(|&i| carrier.label(i).to_string())
                .collect(),
            labels: diagram.labels().to_vec(),
            tolerance: diagram.tolerance().clone(),
        }
    }
}

/// Any of the input documents, for format detection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Algebra(AlgebraRecord),
    Diagram(DiagramRecord),
    Relation(RelationRecord),
    Lattice(LatticeRecord),
    FuzzySet(FuzzySet),
    FuzzyDiagram(FuzzyDiagramRecord),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Algebra,
    Diagram,
    Relation,
    Lattice,
    FuzzySet,
    FuzzyDiagram,
}

impl DocumentKind {
    pub const ALL: [DocumentKind; 6] = [
        DocumentKind::Algebra,
        DocumentKind::Diagram,
        DocumentKind::Relation,
        DocumentKind::Lattice,
        DocumentKind::FuzzySet,
        DocumentKind::FuzzyDiagram,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DocumentKind::Algebra => "algebra",
            DocumentKind::Diagram => "diagram",
            DocumentKind::Relation => "relation",
            DocumentKind::Lattice => "lattice",
            DocumentKind::FuzzySet => "fuzzy-set",
            DocumentKind::FuzzyDiagram => "fuzzy-diagram",
        }
    }

    /// Guesses the kind from the top-level keys.
    pub fn detect(value: &Value) -> Option<DocumentKind> {
        let obj = value.as_object()?;
        let has = |k: &str| obj.contains_key(k);
        Some(if has("lattice") {
            DocumentKind::FuzzyDiagram
        } else if has("algebra") {
            DocumentKind::Diagram
        } else if has("atoms") {
            DocumentKind::Algebra
        } else if has("carrier") {
            DocumentKind::Lattice
        } else if has("set") && has("mu") {
            DocumentKind::Relation
        } else if obj.values().all(|v| v.is_string() || v.is_number()) {
            DocumentKind::FuzzySet
        } else {
            return None;
        })
    }
}

impl std::str::FromStr for DocumentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DocumentKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Record(format!("unknown document kind `{s}`")))
    }
}

impl Document {
    pub fn kind(&self) -> DocumentKind {
        match self {
            Document::Algebra(_) => DocumentKind::Algebra,
            Document::Diagram(_) => DocumentKind::Diagram,
            Document::Relation(_) => DocumentKind::Relation,
            Document::Lattice(_) => DocumentKind::Lattice,
            Document::FuzzySet(_) => DocumentKind::FuzzySet,
            Document::FuzzyDiagram(_) => DocumentKind::FuzzyDiagram,
        }
    }

    pub fn parse(text: &str, kind: DocumentKind) -> std::result::Result<Self, serde_json::Error> {
        Ok(match kind {
            DocumentKind::Algebra => Document::Algebra(serde_json::from_str(text)?),
            DocumentKind::Diagram => Document::Diagram(serde_json::from_str(text)?),
            DocumentKind::Relation => Document::Relation(serde_json::from_str(text)?),
            DocumentKind::Lattice => Document::Lattice(serde_json::from_str(text)?),
            DocumentKind::FuzzySet => Document::FuzzySet(serde_json::from_str(text)?),
            DocumentKind::FuzzyDiagram => Document::FuzzyDiagram(serde_json::from_str(text)?),
        })
    }

    pub fn to_json(&self) -> String {
        let result = match self {
            Document::Algebra(r) => serde_json::to_string_pretty(r),
            Document::Diagram(r) => serde_json::to_string_pretty(r),
            Document::Relation(r) => serde_json::to_string_pretty(r),
            Document::Lattice(r) => serde_json::to_string_pretty(r),
            Document::FuzzySet(r) => serde_json::to_string_pretty(r),
            Document::FuzzyDiagram(r) => serde_json::to_string_pretty(r),
        };
        result.expect("records serialize")
    }

    /// Builds the domain value, enforcing every invariant beyond the
    /// schema. Returns a one-line summary.
    pub fn validate(&self) -> Result<String> {
        Ok(match self {
            Document::Algebra(r) => {
                let a = r.build()?;
                format!(
                    "algebra with {} atoms, {} elements",
                    a.atom_count(),
                    a.size()
                )
            }
            Document::Diagram(r) => {
                let d = r.build()?;
                format!(
                    "diagram with {} fragment elements{}",
                    d.len(),
                    if d.is_contingent() {
                        ", all contingent"
                    } else {
                        ""
                    }
                )
            }
            Document::Relation(r) => {
                let rel = r.build()?;
                format!("relation on {} points", rel.source().len())
            }
            Document::Lattice(r) => {
                let l = r.build()?;
                format!("IF partial order on {} points", l.len())
            }
            Document::FuzzySet(s) => format!("fuzzy set on {} points", s.len()),
            Document::FuzzyDiagram(r) => {
                let d = r.build()?;
                format!("fuzzy diagram with {} fragment elements", d.len())
            }
        })
    }
}
