//! Lattice structure carried by an intuitionistic fuzzy partial order.
//!
//! Least upper and greatest lower bounds are taken in the crisp order
//! `x ≼ y` iff `x = y` or `ν(x, y) < 1`, that is, wherever the fuzzy order
//! holds to some degree. Perfect antisymmetry and transitivity of the fuzzy
//! order make `≼` a crisp partial order.

use serde::{Deserialize, Serialize};

use crate::algebra::BooleanAlgebra;
use crate::error::{Error, Result};
use crate::ifrel::{FiniteSet, IFRelation, OrderReport};

/// Carrier size limit; distributivity is checked over all triples.
pub const MAX_CARRIER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IFLattice {
    order: IFRelation,
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<Option<usize>>>,
    meet: Vec<Vec<Option<usize>>>,
}

impl IFLattice {
    /// Wraps an IF partial order. Fails if `order` is not one, or if the
    /// carrier exceeds [`MAX_CARRIER`].
    pub fn new(order: IFRelation) -> Result<Self> {
        let report = order.order_report()?;
        if !report.partial_order {
            let mut failed = Vec::new();
            if !report.reflexive {
                failed.push("not reflexive");
            }
            if !report.perfectly_antisymmetric {
                failed.push("not perfectly antisymmetric");
            }
            if !report.transitive {
                failed.push("not transitive");
            }
            return Err(Error::NotPartialOrder(failed.join(", ")));
        }
        let n = order.source().len();
        if n > MAX_CARRIER {
            return Err(Error::CarrierLimit {
                size: n,
                limit: MAX_CARRIER,
            });
        }
        let leq = underlying_order_of(&order);
        let bound = |upper: bool| -> Vec<Vec<Option<usize>>> {
            (0..n)
                .map(|x| (0..n).map(|y| extremal_bound(&leq, x, y, upper)).collect())
                .collect()
        };
        let join = bound(true);
        let meet = bound(false);
        Ok(IFLattice {
            order,
            leq,
            join,
            meet,
        })
    }

    /// A crisp order embedded with `(1, 0)` / `(0, 1)` cells.
    pub fn from_crisp_order(carrier: FiniteSet, leq: &[Vec<bool>]) -> Result<Self> {
        Self::new(IFRelation::from_crisp(carrier.clone(), carrier, leq)?)
    }

    /// The subset order of a powerset algebra. Carrier index `i` is the
    /// element with bitmask `i`; labels are `{a,b}` renderings.
    pub fn from_powerset(algebra: &BooleanAlgebra) -> Result<Self> {
        let n = algebra.size();
        if n > MAX_CARRIER {
            return Err(Error::CarrierLimit {
                size: n,
                limit: MAX_CARRIER,
            });
        }
        let carrier = FiniteSet::new((0..n as u32).map(|b| algebra.format_bits(b)))?;
        let leq: Vec<Vec<bool>> = (0..n as u32)
            .map(|x| (0..n as u32).map(|y| x & !y == 0).collect())
            .collect();
        Self::from_crisp_order(carrier, &leq)
    }

    pub fn order(&self) -> &IFRelation {
        &self.order
    }

    pub fn carrier(&self) -> &FiniteSet {
        self.order.source()
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn underlying_order(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    pub fn lub(&self, x: usize, y: usize) -> Option<usize> {
        self.join[x][y]
    }

    pub fn glb(&self, x: usize, y: usize) -> Option<usize> {
        self.meet[x][y]
    }

    /// Least element, if one exists.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&b| (0..self.len()).all(|x| self.leq[b][x]))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| (0..self.len()).all(|x| self.leq[x][t]))
    }

    pub fn is_lattice(&self) -> bool {
        self.join.iter().flatten().all(Option::is_some)
            && self.meet.iter().flatten().all(Option::is_some)
    }

    fn require_lattice(&self) -> Result<()> {
        if self.is_lattice() {
            Ok(())
        } else {
            Err(Error::NotLattice)
        }
    }

    // Only valid once `is_lattice` holds.
    fn j(&self, x: usize, y: usize) -> usize {
        self.join[x][y].expect("lattice")
    }

    fn m(&self, x: usize, y: usize) -> usize {
        self.meet[x][y].expect("lattice")
    }

    /// Both distributive identities over every triple.
    pub fn is_distributive(&self) -> Result<bool> {
        self.require_lattice()?;
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.m(a, self.j(b, c)) != self.j(self.m(a, b), self.m(a, c)) {
                        return Ok(false);
                    }
                    if self.j(a, self.m(b, c)) != self.m(self.j(a, b), self.j(a, c)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every `b` with `a ∧ b = ⊥` and `a ∨ b = ⊤`, in carrier order.
    pub fn find_complements(&self, a: usize) -> Result<Vec<usize>> {
        self.require_lattice()?;
        let (bottom, top) = self.bounds();
        Ok((0..self.len())
            .filter(|&b| self.m(a, b) == bottom && self.j(a, b) == top)
            .collect())
    }

    pub fn is_complemented(&self) -> Result<bool> {
        self.require_lattice()?;
        for a in 0..self.len() {
            if self.find_complements(a)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The complement of `a` when it exists and is unique.
    pub fn complement(&self, a: usize) -> Option<usize> {
        match self.find_complements(a).ok()?.as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }

    fn bounds(&self) -> (usize, usize) {
        // A finite lattice is bounded.
        (
            self.bottom().expect("finite lattice has a bottom"),
            self.top().expect("finite lattice has a top"),
        )
    }

    /// Verifies `¬(a ∨ b) = ¬a ∧ ¬b` and `¬(a ∧ b) = ¬a ∨ ¬b` for every
    /// pair. Requires a complemented distributive lattice; a failing law in
    /// that setting is reported as [`Error::DeMorganViolation`].
    pub fn check_de_morgan(&self) -> Result<bool> {
        if !self.is_lattice() {
            return Err(Error::DeMorganPrecondition("not a lattice".into()));
        }
        let mut unmet = Vec::new();
        if !self.is_complemented()? {
            unmet.push("not complemented");
        }
        if !self.is_distributive()? {
            unmet.push("not distributive");
        }
        if !unmet.is_empty() {
            return Err(Error::DeMorganPrecondition(unmet.join(", ")));
        }
        let n = self.len();
        let neg: Vec<usize> = (0..n)
            .map(|a| {
                self.complement(a)
                    .expect("unique in a distributive lattice")
            })
            .collect();
        let label = |i: usize| self.carrier().label(i).to_string();
        for a in 0..n {
            for b in 0..n {
                if neg[self.j(a, b)] != self.m(neg[a], neg[b]) {
                    return Err(Error::DeMorganViolation {
                        law: "¬(a ∨ b) = ¬a ∧ ¬b".into(),
                        a: label(a),
                        b: label(b),
                    });
                }
                if neg[self.m(a, b)] != self.j(neg[a], neg[b]) {
                    return Err(Error::DeMorganViolation {
                        law: "¬(a ∧ b) = ¬a ∨ ¬b".into(),
                        a: label(a),
                        b: label(b),
                    });
                }
            }
        }
        Ok(true)
    }

    /// Lattice, distributive and complemented.
    pub fn is_if_boolean_algebra(&self) -> bool {
        self.is_lattice()
            && self.is_distributive().unwrap_or(false)
            && self.is_complemented().unwrap_or(false)
    }

    pub fn certify(&self) -> LatticeReport {
        let lattice = self.is_lattice();
        let distributive = self.is_distributive().ok();
        let complemented = self.is_complemented().ok();
        let de_morgan = match (distributive, complemented) {
            (Some(true), Some(true)) => Some(self.check_de_morgan().is_ok()),
            _ => None,
        };
        LatticeReport {
            order: OrderReport {
                reflexive: true,
                perfectly_antisymmetric: true,
                transitive: true,
                partial_order: true,
            },
            lattice: Some(lattice),
            distributive,
            complemented,
            de_morgan,
            boolean_algebra: lattice && distributive == Some(true) && complemented == Some(true),
        }
    }
}

/// Certification of a relation as an IF partial order, lattice and Boolean
/// algebra. Later stages are `None` when an earlier one fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub order: OrderReport,
    pub lattice: Option<bool>,
    pub distributive: Option<bool>,
    pub complemented: Option<bool>,
    pub de_morgan: Option<bool>,
    pub boolean_algebra: bool,
}

impl LatticeReport {
    /// Certifies an arbitrary square relation without failing on the way.
    pub fn for_relation(order: &IFRelation) -> Result<Self> {
        let report = order.order_report()?;
        if !report.partial_order {
            return Ok(LatticeReport {
                order: report,
                lattice: None,
                distributive: None,
                complemented: None,
                de_morgan: None,
                boolean_algebra: false,
            });
        }
        Ok(IFLattice::new(order.clone())?.certify())
    }
}

/// `x ≼ y` iff `x = y` or the fuzzy order holds to some degree.
pub fn underlying_order_of(order: &IFRelation) -> Vec<Vec<bool>> {
    let n = order.source().len();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| x == y || order.holds_somewhat(x, y))
                .collect()
        })
        .collect()
}

fn extremal_bound(leq: &[Vec<bool>], x: usize, y: usize, upper: bool) -> Option<usize> {
    let n = leq.len();
    let le = |a: usize, b: usize| if upper { leq[a][b] } else { leq[b][a] };
    let bounds: Vec<usize> = (0..n).filter(|&z| le(x, z) && le(y, z)).collect();
    bounds
        .iter()
        .copied()
        .find(|&candidate| bounds.iter().all(|&other| le(candidate, other)))
}
