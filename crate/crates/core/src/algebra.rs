//! Finite Boolean algebras as powerset algebras over `n` labelled atoms.
//!
//! An element is a bitmask over the atoms; meet, join and complement are
//! intersection, union and masked negation. Every finite Boolean algebra is
//! isomorphic to one of these, so nothing is lost by the encoding.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ATOMS: usize = 16;
/// Largest algebra for which [`verify_axioms`] enumerates every tuple.
pub const EXHAUSTIVE_ATOMS: usize = 4;

#[derive(Clone)]
pub struct BooleanAlgebra {
    atoms: Arc<[String]>,
}

impl BooleanAlgebra {
    /// An algebra with atoms labelled `a`, `b`, `c`, ...
    pub fn new(atom_count: usize) -> Result<Self> {
        if !(1..=MAX_ATOMS).contains(&atom_count) {
            return Err(Error::AtomCount(atom_count));
        }
        let labels = (0..atom_count)
            .map(|i| char::from(b'a' + i as u8).to_string())
            .collect::<Vec<_>>();
        Self::with_labels(labels)
    }

    pub fn with_labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let atoms: Vec<String> = labels.into_iter().map(Into::into).collect();
        if !(1..=MAX_ATOMS).contains(&atoms.len()) {
            return Err(Error::AtomCount(atoms.len()));
        }
        for (i, label) in atoms.iter().enumerate() {
            if atoms[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(BooleanAlgebra {
            atoms: atoms.into(),
        })
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    /// Number of elements, `2^n`.
    pub fn size(&self) -> usize {
        1usize << self.atom_count()
    }

    pub fn mask(&self) -> u32 {
        ((1u64 << self.atom_count()) - 1) as u32
    }

    pub fn element(&self, bits: u32) -> Result<Element> {
        if bits > self.mask() {
            return Err(Error::ElementRange {
                bits,
                atoms: self.atom_count(),
            });
        }
        Ok(Element {
            bits,
            algebra: self.clone(),
        })
    }

    pub fn bottom(&self) -> Element {
        Element {
            bits: 0,
            algebra: self.clone(),
        }
    }

    pub fn top(&self) -> Element {
        Element {
            bits: self.mask(),
            algebra: self.clone(),
        }
    }

    /// The element whose atoms carry the given labels.
    pub fn element_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Element> {
        let mut bits = 0u32;
        for label in labels {
            let label = label.as_ref();
            let idx = self
                .atoms
                .iter()
                .position(|a| a == label)
                .ok_or_else(|| Error::UnknownAtom(label.to_string()))?;
            bits |= 1 << idx;
        }
        self.element(bits)
    }

    /// Atom labels of `bits`, in atom order.
    pub fn labels_of(&self, bits: u32) -> Vec<String> {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| bits & (1 << i) != 0)
            .map(|(_, a)| a.clone())
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..=self.mask()).map(move |bits| Element {
            bits,
            algebra: self.clone(),
        })
    }

    /// `{a,b}` style rendering of an element.
    pub fn format_bits(&self, bits: u32) -> String {
        format!("{{{}}}", self.labels_of(bits).join(","))
    }

    fn same(&self, other: &BooleanAlgebra) -> bool {
        Arc::ptr_eq(&self.atoms, &other.atoms) || self.atoms == other.atoms
    }
}

impl PartialEq for BooleanAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for BooleanAlgebra {}

impl fmt::Debug for BooleanAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BooleanAlgebra")
            .field("atoms", &&*self.atoms)
            .finish()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    bits: u32,
    algebra: BooleanAlgebra,
}

impl Element {
    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn algebra(&self) -> &BooleanAlgebra {
        &self.algebra
    }

    fn check(&self, other: &Element) -> Result<()> {
        if self.algebra.same(&other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    fn with_bits(&self, bits: u32) -> Element {
        Element {
            bits,
            algebra: self.algebra.clone(),
        }
    }

    pub fn meet(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        Ok(self.with_bits(self.bits & other.bits))
    }

    pub fn join(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        Ok(self.with_bits(self.bits | other.bits))
    }

    pub fn complement(&self) -> Element {
        self.with_bits(!self.bits & self.algebra.mask())
    }

    pub fn leq(&self, other: &Element) -> Result<bool> {
        self.check(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn lt(&self, other: &Element) -> Result<bool> {
        Ok(self.leq(other)? && self.bits != other.bits)
    }

    pub fn is_bottom(&self) -> bool {
        self.bits == 0
    }

    pub fn is_top(&self) -> bool {
        self.bits == self.algebra.mask()
    }

    /// Neither bottom nor top.
    pub fn is_contingent(&self) -> bool {
        !self.is_bottom() && !self.is_top()
    }

    pub fn labels(&self) -> Vec<String> {
        self.algebra.labels_of(self.bits)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.format_bits(self.bits))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

/// Explicit operation tables over bitmask indices.
///
/// [`verify_axioms`] checks the tables built from an algebra; the tables are
/// public so a caller can tamper with an entry and watch the check fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationTable {
    pub size: usize,
    pub bottom: u32,
    pub top: u32,
    /// Row-major `size * size`.
    pub meet: Vec<u32>,
    pub join: Vec<u32>,
    pub complement: Vec<u32>,
}

impl OperationTable {
    pub fn from_algebra(algebra: &BooleanAlgebra) -> Self {
        let size = algebra.size();
        let mask = algebra.mask();
        let mut meet = Vec::with_capacity(size * size);
        let mut join = Vec::with_capacity(size * size);
        for a in 0..size as u32 {
            for b in 0..size as u32 {
                meet.push(a & b);
                join.push(a | b);
            }
        }
        OperationTable {
            size,
            bottom: 0,
            top: mask,
            meet,
            join,
            complement: (0..size as u32).map(|a| !a & mask).collect(),
        }
    }

    fn m(&self, a: u32, b: u32) -> u32 {
        self.meet[a as usize * self.size + b as usize]
    }

    fn j(&self, a: u32, b: u32) -> u32 {
        self.join[a as usize * self.size + b as usize]
    }

    fn c(&self, a: u32) -> u32 {
        self.complement[a as usize]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    IdempotentMeet,
    IdempotentJoin,
    CommutativeMeet,
    CommutativeJoin,
    AssociativeMeet,
    AssociativeJoin,
    AbsorptionMeet,
    AbsorptionJoin,
    DistributiveMeet,
    DistributiveJoin,
    BottomMeet,
    BottomJoin,
    TopMeet,
    TopJoin,
    ComplementMeet,
    ComplementJoin,
}

impl Law {
    pub const ALL: [Law; 16] = [
        Law::IdempotentMeet,
        Law::IdempotentJoin,
        Law::CommutativeMeet,
        Law::CommutativeJoin,
        Law::AssociativeMeet,
        Law::AssociativeJoin,
        Law::AbsorptionMeet,
        Law::AbsorptionJoin,
        Law::DistributiveMeet,
        Law::DistributiveJoin,
        Law::BottomMeet,
        Law::BottomJoin,
        Law::TopMeet,
        Law::TopJoin,
        Law::ComplementMeet,
        Law::ComplementJoin,
    ];

    /// Axiom group 1..=5: lattice laws, absorption, distributivity, bounds,
    /// complementation.
    pub fn group(self) -> u8 {
        use Law::*;
        match self {
            IdempotentMeet | IdempotentJoin | CommutativeMeet | CommutativeJoin
            | AssociativeMeet | AssociativeJoin => 1,
            AbsorptionMeet | AbsorptionJoin => 2,
            DistributiveMeet | DistributiveJoin => 3,
            BottomMeet | BottomJoin | TopMeet | TopJoin => 4,
            ComplementMeet | ComplementJoin => 5,
        }
    }

    pub fn equation(self) -> &'static str {
        use Law::*;
        match self {
            IdempotentMeet => "a ∧ a = a",
            IdempotentJoin => "a ∨ a = a",
            CommutativeMeet => "a ∧ b = b ∧ a",
            CommutativeJoin => "a ∨ b = b ∨ a",
            AssociativeMeet => "a ∧ (b ∧ c) = (a ∧ b) ∧ c",
            AssociativeJoin => "a ∨ (b ∨ c) = (a ∨ b) ∨ c",
            AbsorptionMeet => "a ∧ (a ∨ b) = a",
            AbsorptionJoin => "a ∨ (a ∧ b) = a",
            DistributiveMeet => "a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)",
            DistributiveJoin => "a ∨ (b ∧ c) = (a ∨ b) ∧ (a ∨ c)",
            BottomMeet => "0 ∧ a = 0",
            BottomJoin => "0 ∨ a = a",
            TopMeet => "1 ∧ a = a",
            TopJoin => "1 ∨ a = 1",
            ComplementMeet => "a ∧ ¬a = 0",
            ComplementJoin => "a ∨ ¬a = 1",
        }
    }

    fn arity(self) -> u32 {
        use Law::*;
        match self {
            IdempotentMeet | IdempotentJoin | BottomMeet | BottomJoin | TopMeet | TopJoin
            | ComplementMeet | ComplementJoin => 1,
            CommutativeMeet | CommutativeJoin | AbsorptionMeet | AbsorptionJoin => 2,
            AssociativeMeet | AssociativeJoin | DistributiveMeet | DistributiveJoin => 3,
        }
    }

    fn holds(self, t: &OperationTable, a: u32, b: u32, c: u32) -> bool {
        use Law::*;
        match self {
            IdempotentMeet => t.m(a, a) == a,
            IdempotentJoin => t.j(a, a) == a,
            CommutativeMeet => t.m(a, b) == t.m(b, a),
            CommutativeJoin => t.j(a, b) == t.j(b, a),
            AssociativeMeet => t.m(a, t.m(b, c)) == t.m(t.m(a, b), c),
            AssociativeJoin => t.j(a, t.j(b, c)) == t.j(t.j(a, b), c),
            AbsorptionMeet => t.m(a, t.j(a, b)) == a,
            AbsorptionJoin => t.j(a, t.m(a, b)) == a,
            DistributiveMeet => t.m(a, t.j(b, c)) == t.j(t.m(a, b), t.m(a, c)),
            DistributiveJoin => t.j(a, t.m(b, c)) == t.m(t.j(a, b), t.j(a, c)),
            BottomMeet => t.m(t.bottom, a) == t.bottom,
            BottomJoin => t.j(t.bottom, a) == a,
            TopMeet => t.m(t.top, a) == a,
            TopJoin => t.j(t.top, a) == t.top,
            ComplementMeet => t.m(a, t.c(a)) == t.bottom,
            ComplementJoin => t.j(a, t.c(a)) == t.top,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawCheck {
    pub law: Law,
    pub group: u8,
    /// Number of element tuples evaluated.
    pub checked: usize,
    /// First failing tuple, as bitmasks.
    pub counterexample: Option<Vec<u32>>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub size: usize,
    pub laws: Vec<LawCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(LawCheck::passed)
    }

    pub fn law(&self, law: Law) -> Option<&LawCheck> {
        self.laws.iter().find(|c| c.law == law)
    }
}

/// Exhaustively checks every Boolean algebra law over all element tuples.
pub fn verify_axioms(algebra: &BooleanAlgebra) -> Result<AxiomReport> {
    if algebra.atom_count() > EXHAUSTIVE_ATOMS {
        return Err(Error::ExhaustiveLimit {
            atoms: algebra.atom_count(),
            limit: EXHAUSTIVE_ATOMS,
        });
    }
    Ok(verify_table(&OperationTable::from_algebra(algebra)))
}

pub fn verify_table(table: &OperationTable) -> AxiomReport {
    let n = table.size as u32;
    let laws = Law::ALL
        .iter()
        .map(|&law| {
            let arity = law.arity();
            let total = (n as usize).pow(arity);
            let mut counterexample = None;
            'search: for a in 0..n {
                for b in 0..if arity >= 2 { n } else { 1 } {
                    for c in 0..if arity >= 3 { n } else { 1 } {
                        if !law.holds(table, a, b, c) {
                            counterexample = Some([a, b, c][..arity as usize].to_vec());
                            break 'search;
                        }
                    }
                }
            }
            LawCheck {
                law,
                group: law.group(),
                checked: total,
                counterexample,
            }
        })
        .collect();
    AxiomReport {
        size: table.size,
        laws,
    }
}
