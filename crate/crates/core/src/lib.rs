//! Executable Aristotelian diagrams, crisp and intuitionistic fuzzy.
//!
//! - [`algebra`]: finite powerset Boolean algebras and axiom checking.
//! - [`diagram`]: the seven logical relations, informativity order,
//!   isomorphisms and infomorphisms, the traditional square.
//! - [`degree`]: exact degrees, IF pairs, fuzzy sets and contradiction
//!   degrees.
//! - [`ifrel`]: IF relations, max-min / min-max composition and order
//!   properties.
//! - [`iflattice`]: lattices, distributivity, complements and De Morgan
//!   over IF partial orders.
//! - [`fuzzy_diagram`]: fuzzy Aristotelian diagrams, fuzzy infomorphisms,
//!   homomorphisms and category-law checks.
//! - [`records`]: JSON file formats; [`dot`]: Graphviz rendering;
//!   [`sample`]: seeded generators for property sampling.

pub mod algebra;
pub mod degree;
pub mod diagram;
pub mod dot;
pub mod error;
pub mod fuzzy_diagram;
pub mod iflattice;
pub mod ifrel;
pub mod records;
pub mod sample;

pub use algebra::{verify_axioms, BooleanAlgebra, Element};
pub use degree::{Degree, FuzzySet, IFPair, Implication, Negation, OperatorChoice};
pub use diagram::{canonical_square, classify, Diagram, DiagramMap, RelationKind};
pub use error::{Error, Result};
pub use fuzzy_diagram::{FuzzyAristotelianDiagram, FuzzyDiagramMap};
pub use iflattice::IFLattice;
pub use ifrel::{FiniteSet, IFRelation};
