//! Fuzzy Aristotelian diagrams: fragments of an intuitionistic fuzzy
//! Boolean algebra.
//!
//! Logical relations are classified in the crisp order underlying the IF
//! order (see [`crate::iflattice`]), with the same first-match clauses as
//! the crisp case. Each classification carries the IF degree of the order
//! edge that witnesses it:
//!
//! | kind | witness edge |
//! |------|--------------|
//! | BI   | `(x, x)` |
//! | LI   | `(x, y)` |
//! | RI   | `(y, x)` |
//! | CD   | `(x, ¬y)`, which is the diagonal since `x = ¬y` |
//! | C    | `(x, ¬y)` |
//! | SC   | `(¬y, x)` |
//! | Un   | none; the pair is `(min(ν(x,y), ν(y,x)), max(μ(x,y), μ(y,x)))`, the degree to which neither edge holds |
//!
//! This is an interpretation: only bi-implication has a graded reading of
//! its own, given by [`FuzzyAristotelianDiagram::fuzzy_bi_implication`].

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::degree::{Degree, IFPair};
use crate::diagram::{
    canonical_square, informativity_leq, is_bijection, validate_mapping, Diagram, RelationKind,
};
use crate::error::{Error, Result};
use crate::iflattice::IFLattice;

/// Default bi-implication tolerance, 1/100.
pub fn default_tolerance() -> Degree {
    Degree::new(1, 100).expect("valid degree")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyAristotelianDiagram {
    algebra: Arc<IFLattice>,
    fragment: Vec<usize>,
    labels: Vec<String>,
    tolerance: Degree,
    bottom: usize,
    top: usize,
}

impl FuzzyAristotelianDiagram {
    pub fn new(
        algebra: Arc<IFLattice>,
        fragment: Vec<usize>,
        labels: Vec<String>,
        tolerance: Degree,
    ) -> Result<Self> {
        if !algebra.is_lattice() {
            return Err(Error::NotBooleanAlgebra("not a lattice".into()));
        }
        if !algebra.is_distributive()? {
            return Err(Error::NotBooleanAlgebra("not distributive".into()));
        }
        if !algebra.is_complemented()? {
            return Err(Error::NotBooleanAlgebra("not complemented".into()));
        }
        if fragment.is_empty() {
            return Err(Error::EmptySet);
        }
        if labels.len() != fragment.len() {
            return Err(Error::LabelCount {
                expected: fragment.len(),
                found: labels.len(),
            });
        }
        for (i, &x) in fragment.iter().enumerate() {
            if x >= algebra.len() {
                return Err(Error::MappingRange {
                    index: i,
                    value: x,
                    size: algebra.len(),
                });
            }
            if fragment[..i].contains(&x) {
                return Err(Error::DuplicateElement(i));
            }
        }
        let bottom = algebra.bottom().expect("bounded");
        let top = algebra.top().expect("bounded");
        Ok(FuzzyAristotelianDiagram {
            algebra,
            fragment,
            labels,
            tolerance,
            bottom,
            top,
        })
    }

    /// Fragment labelled by the carrier's own labels.
    pub fn unlabelled(algebra: Arc<IFLattice>, fragment: Vec<usize>) -> Result<Self> {
        let labels = fragment
            .iter()
            .map(|&x| {
                algebra
                    .carrier()
                    .labels()
                    .get(x)
                    .cloned()
                    .unwrap_or_default()
            })
            .collect();
        Self::new(algebra, fragment, labels, default_tolerance())
    }

    /// The crisp diagram's algebra embedded as a `(1,0)` / `(0,1)` subset
    /// order, with the same fragment and labels.
    pub fn from_crisp(diagram: &Diagram) -> Result<Self> {
        let lattice = IFLattice::from_powerset(diagram.algebra())?;
        let fragment = diagram
            .fragment()
            .iter()
            .map(|e| e.bits() as usize)
            .collect();
        Self::new(
            Arc::new(lattice),
            fragment,
            diagram.labels().to_vec(),
            default_tolerance(),
        )
    }

    pub fn algebra(&self) -> &Arc<IFLattice> {
        &self.algebra
    }

    pub fn fragment(&self) -> &[usize] {
        &self.fragment
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn tolerance(&self) -> &Degree {
        &self.tolerance
    }

    pub fn with_tolerance(mut self, tolerance: Degree) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn len(&self) -> usize {
        self.fragment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fragment.is_empty()
    }

    /// Membership equals nonmembership on the order edge from fragment
    /// entry `i` to `j`, up to the diagram's tolerance.
    pub fn fuzzy_bi_implication(&self, i: usize, j: usize) -> bool {
        let pair = self
            .algebra
            .order()
            .pair(self.fragment[i], self.fragment[j]);
        within_tolerance(&pair, &self.tolerance)
    }

    /// Classifies fragment entries `i` and `j`.
    pub fn classify_fuzzy(&self, i: usize, j: usize) -> FuzzyRelation {
        self.classify_elements(self.fragment[i], self.fragment[j])
    }

    /// Classifies two carrier elements.
    pub fn classify_elements(&self, x: usize, y: usize) -> FuzzyRelation {
        let lattice = &self.algebra;
        let order = lattice.order();
        let meet = lattice.glb(x, y).expect("lattice");
        let join = lattice.lub(x, y).expect("lattice");
        let neg_y = lattice.complement(y).expect("unique complement");
        let (kind, annotation) = if x == y {
            (RelationKind::BI, order.pair(x, x))
        } else if lattice.leq(x, y) {
            (RelationKind::LI, order.pair(x, y))
        } else if lattice.leq(y, x) {
            (RelationKind::RI, order.pair(y, x))
        } else if meet == self.bottom && join == self.top {
            (RelationKind::CD, order.pair(x, neg_y))
        } else if meet == self.bottom {
            (RelationKind::C, order.pair(x, neg_y))
        } else if join == self.top {
            (RelationKind::SC, order.pair(neg_y, x))
        } else {
            let mu = order.nu(x, y).min(order.nu(y, x)).clone();
            let nu = order.mu(x, y).max(order.mu(y, x)).clone();
            (
                RelationKind::Un,
                IFPair::new(mu, nu).expect("bounded by a valid cell"),
            )
        };
        FuzzyRelation { kind, annotation }
    }

    pub fn relation_table(&self) -> FuzzyRelationTable {
        let n = self.len();
        FuzzyRelationTable {
            labels: self.labels.clone(),
            tolerance: self.tolerance.clone(),
            cells: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| FuzzyCell {
                            relation: self.classify_fuzzy(i, j),
                            bi_implication: self.fuzzy_bi_implication(i, j),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// `|μ - ν| ≤ ε`, exactly.
pub fn within_tolerance(pair: &IFPair, tolerance: &Degree) -> bool {
    pair.mu().abs_diff(pair.nu()) <= *tolerance
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyRelation {
    pub kind: RelationKind,
    pub annotation: IFPair,
}

impl fmt::Display for FuzzyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.annotation)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyCell {
    #[serde(flatten)]
    pub relation: FuzzyRelation,
    pub bi_implication: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyRelationTable {
    pub labels: Vec<String>,
    pub tolerance: Degree,
    pub cells: Vec<Vec<FuzzyCell>>,
}

impl FuzzyRelationTable {
    pub fn kinds(&self) -> Vec<Vec<RelationKind>> {
        self.cells
            .iter()
            .map(|r| r.iter().map(|c| c.relation.kind).collect())
            .collect()
    }

    pub fn render_text(&self) -> String {
        let cell_text: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| {
                        let mark = if c.bi_implication { " ≈" } else { "" };
                        format!("{}{mark}", c.relation)
                    })
                    .collect()
            })
            .collect();
        let width = self
            .labels
            .iter()
            .map(|l| l.chars().count())
            .chain(cell_text.iter().flatten().map(|c| c.chars().count()))
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        out.push_str(&" ".repeat(width));
        for label in &self.labels {
            out.push_str(&format!(" | {label:<width$}"));
        }
        out.push('\n');
        for (label, row) in self.labels.iter().zip(&cell_text) {
            out.push_str(&format!("{label:<width$}"));
            for cell in row {
                out.push_str(&format!(" | {cell:<width$}"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "≈ marks fuzzy bi-implication (|μ - ν| ≤ {})\n",
            self.tolerance
        ));
        out.lines().map(|l| format!("{}\n", l.trim_end())).collect()
    }
}

/// A map between fuzzy diagram fragments, by index.
#[derive(Debug, Clone)]
pub struct FuzzyDiagramMap<'a> {
    source: &'a FuzzyAristotelianDiagram,
    target: &'a FuzzyAristotelianDiagram,
    mapping: Vec<usize>,
}

impl<'a> FuzzyDiagramMap<'a> {
    pub fn new(
        source: &'a FuzzyAristotelianDiagram,
        target: &'a FuzzyAristotelianDiagram,
        mapping: Vec<usize>,
    ) -> Result<Self> {
        validate_mapping(&mapping, source.len(), target.len())?;
        Ok(FuzzyDiagramMap {
            source,
            target,
            mapping,
        })
    }

    pub fn identity(diagram: &'a FuzzyAristotelianDiagram) -> Self {
        FuzzyDiagramMap {
            source: diagram,
            target: diagram,
            mapping: (0..diagram.len()).collect(),
        }
    }

    pub fn source(&self) -> &'a FuzzyAristotelianDiagram {
        self.source
    }

    pub fn target(&self) -> &'a FuzzyAristotelianDiagram {
        self.target
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn is_composable_with(&self, next: &FuzzyDiagramMap<'a>) -> bool {
        std::ptr::eq(self.target, next.source) || self.target == next.source
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FuzzyDiagramMap<'a>) -> Result<FuzzyDiagramMap<'a>> {
        if !self.is_composable_with(next) {
            return Err(Error::Record("maps are not composable".into()));
        }
        Ok(FuzzyDiagramMap {
            source: self.source,
            target: next.target,
            mapping: self.mapping.iter().map(|&i| next.mapping[i]).collect(),
        })
    }

    /// Same endpoints and the same underlying function.
    pub fn same_as(&self, other: &FuzzyDiagramMap<'_>) -> bool {
        self.source == other.source && self.target == other.target && self.mapping == other.mapping
    }
}

/// Whether every classified relation is sent to one at least as
/// informative.
pub fn check_fuzzy_infomorphism(map: &FuzzyDiagramMap<'_>) -> bool {
    let n = map.source.len();
    let f = &map.mapping;
    (0..n).all(|i| {
        (0..n).all(|j| {
            let before = map.source.classify_fuzzy(i, j).kind;
            let after = map.target.classify_fuzzy(f[i], f[j]).kind;
            informativity_leq(before, after)
        })
    })
}

/// A function between the carriers of two IF Boolean algebras.
#[derive(Debug, Clone)]
pub struct IfbaMap<'a> {
    source: &'a IFLattice,
    target: &'a IFLattice,
    mapping: Vec<usize>,
}

impl<'a> IfbaMap<'a> {
    pub fn new(source: &'a IFLattice, target: &'a IFLattice, mapping: Vec<usize>) -> Result<Self> {
        for (name, lattice) in [("source", source), ("target", target)] {
            if !lattice.is_if_boolean_algebra() {
                return Err(Error::NotBooleanAlgebra(format!("{name} is not certified")));
            }
        }
        validate_mapping(&mapping, source.len(), target.len())?;
        Ok(IfbaMap {
            source,
            target,
            mapping,
        })
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn is_bijective(&self) -> bool {
        is_bijection(&self.mapping, self.target.len())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismReport {
    pub join: bool,
    pub complement: bool,
    pub bottom: bool,
    pub top: bool,
    /// Implied by the other four; checked to catch inconsistent inputs.
    pub meet: bool,
}

impl HomomorphismReport {
    pub fn is_homomorphism(&self) -> bool {
        self.join && self.complement && self.bottom && self.top && self.meet
    }
}

pub fn homomorphism_report(map: &IfbaMap<'_>) -> HomomorphismReport {
    let (s, t, f) = (map.source, map.target, &map.mapping);
    let n = s.len();
    let lub = |l: &IFLattice, x, y| l.lub(x, y).expect("lattice");
    let glb = |l: &IFLattice, x, y| l.glb(x, y).expect("lattice");
    let neg = |l: &IFLattice, x| l.complement(x).expect("complemented");
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    HomomorphismReport {
        join: pairs().all(|(x, y)| f[lub(s, x, y)] == lub(t, f[x], f[y])),
        complement: (0..n).all(|x| f[neg(s, x)] == neg(t, f[x])),
        bottom: f[s.bottom().expect("bounded")] == t.bottom().expect("bounded"),
        top: f[s.top().expect("bounded")] == t.top().expect("bounded"),
        meet: pairs().all(|(x, y)| f[glb(s, x, y)] == glb(t, f[x], f[y])),
    }
}

/// Preserves joins, complements and both bounds (and therefore meets).
pub fn check_if_homomorphism(map: &IfbaMap<'_>) -> bool {
    homomorphism_report(map).is_homomorphism()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: String,
    pub checked: usize,
    pub failures: usize,
}

impl LawResult {
    fn new(law: &str) -> Self {
        LawResult {
            law: law.to_string(),
            checked: 0,
            failures: 0,
        }
    }

    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryReport {
    pub chains: usize,
    pub identity: LawResult,
    pub closure: LawResult,
    pub associativity: LawResult,
    /// Chains with a map that is not a fuzzy infomorphism. Closure is
    /// vacuous for pairs involving such a map.
    pub excluded: Vec<usize>,
    /// Chains whose maps do not line up end to end.
    pub non_composable: Vec<usize>,
}

impl CategoryReport {
    pub fn all_passed(&self) -> bool {
        self.identity.passed() && self.closure.passed() && self.associativity.passed()
    }

    pub fn render_text(&self, pass: &str, fail: &str) -> String {
        let mut out = format!("chains sampled: {}\n", self.chains);
        for law in [&self.identity, &self.closure, &self.associativity] {
            out.push_str(&format!(
                "{:<13} {} ({} checked, {} failures)\n",
                law.law,
                if law.passed() { pass } else { fail },
                law.checked,
                law.failures
            ));
        }
        out.push_str(&format!("excluded chains: {:?}\n", self.excluded));
        out.push_str(&format!(
            "non-composable chains: {:?}\n",
            self.non_composable
        ));
        out
    }
}

/// Checks the category laws on chains `f: D1 → D2`, `g: D2 → D3`,
/// `h: D3 → D4`:
///
/// 1. identities are fuzzy infomorphisms and units for composition;
/// 2. composites of fuzzy infomorphisms are fuzzy infomorphisms;
/// 3. `(h ∘ g) ∘ f = h ∘ (g ∘ f)`.
pub fn verify_category_laws<'a>(chains: &[[FuzzyDiagramMap<'a>; 3]]) -> CategoryReport {
    let mut identity = LawResult::new("identity");
    let mut closure = LawResult::new("closure");
    let mut associativity = LawResult::new("associativity");
    let mut excluded = Vec::new();
    let mut non_composable = Vec::new();

    for (index, [f, g, h]) in chains.iter().enumerate() {
        if !f.is_composable_with(g) || !g.is_composable_with(h) {
            non_composable.push(index);
            continue;
        }
        for map in [f, g, h] {
            for end in [map.source, map.target] {
                identity.record(check_fuzzy_infomorphism(&FuzzyDiagramMap::identity(end)));
            }
            let left = FuzzyDiagramMap::identity(map.source)
                .then(map)
                .expect("composable");
            let right = map
                .then(&FuzzyDiagramMap::identity(map.target))
                .expect("composable");
            identity.record(left.same_as(map) && right.same_as(map));
        }

        let passes = [f, g, h].map(check_fuzzy_infomorphism);
        if passes.contains(&false) {
            excluded.push(index);
        }
        let gf = f.then(g).expect("composable");
        let hg = g.then(h).expect("composable");
        if passes[0] && passes[1] {
            closure.record(check_fuzzy_infomorphism(&gf));
        }
        if passes[1] && passes[2] {
            closure.record(check_fuzzy_infomorphism(&hg));
        }
        if passes.iter().all(|&p| p) {
            closure.record(check_fuzzy_infomorphism(&gf.then(h).expect("composable")));
        }

        let left = gf.then(h).expect("composable");
        let right = f.then(&hg).expect("composable");
        associativity.record(left.same_as(&right));
    }

    CategoryReport {
        chains: chains.len(),
        identity,
        closure,
        associativity,
        excluded,
        non_composable,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedEdge {
    pub from: usize,
    pub to: usize,
    pub kind: RelationKind,
    pub pair: IFPair,
}

/// A crisp diagram with an IF pair on each edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedSquare {
    pub diagram: Diagram,
    /// One edge per unordered pair `from < to`.
    pub edges: Vec<AnnotatedEdge>,
}

/// The traditional square with contradiction edges annotated
/// `(1/2, contradiction_nu)` and all other edges `(1, 0)`.
pub fn annotate_square(contradiction_nu: &Degree) -> Result<AnnotatedSquare> {
    if *contradiction_nu > Degree::half() {
        return Err(Error::ContradictionNu(contradiction_nu.to_string()));
    }
    let contradiction = IFPair::new(Degree::half(), contradiction_nu.clone())?;
    let diagram = canonical_square();
    let mut edges = Vec::new();
    for from in 0..diagram.len() {
        for to in from + 1..diagram.len() {
            let kind = diagram.relation(from, to);
            let pair = if kind == RelationKind::CD {
                contradiction.clone()
            } else {
                IFPair::certain()
            };
            edges.push(AnnotatedEdge {
                from,
                to,
                kind,
                pair,
            });
        }
    }
    Ok(AnnotatedSquare { diagram, edges })
}
