//! Intuitionistic fuzzy relations between finite sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degree::{Degree, IFPair};
use crate::error::{Error, Result};

/// An ordered set of distinct labels.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FiniteSet(Vec<String>);

impl FiniteSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptySet);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(FiniteSet(labels))
    }

    /// `{x0, x1, ...}`
    pub fn numbered(size: usize) -> Result<Self> {
        Self::new((0..size).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.iter().position(|l| l == label)
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl<'de> Deserialize<'de> for FiniteSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FiniteSet::new(Vec::<String>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

pub type Matrix = Vec<Vec<Degree>>;

/// A pair of membership / nonmembership matrices over `source × target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IFRelation {
    source: FiniteSet,
    target: FiniteSet,
    mu: Matrix,
    nu: Matrix,
}

fn check_shape(name: &'static str, m: &Matrix, rows: usize, cols: usize) -> Result<()> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(Error::MatrixShape { name, rows, cols });
    }
    Ok(())
}

impl IFRelation {
    pub fn new(source: FiniteSet, target: FiniteSet, mu: Matrix, nu: Matrix) -> Result<Self> {
        let (rows, cols) = (source.len(), target.len());
        check_shape("mu", &mu, rows, cols)?;
        check_shape("nu", &nu, rows, cols)?;
        for row in 0..rows {
            for col in 0..cols {
                let (m, n) = (&mu[row][col], &nu[row][col]);
                if m.as_rational() + n.as_rational() > *Degree::one().as_rational() {
                    return Err(Error::CellSum {
                        row,
                        col,
                        mu: m.to_string(),
                        nu: n.to_string(),
                    });
                }
            }
        }
        Ok(IFRelation {
            source,
            target,
            mu,
            nu,
        })
    }

    /// A relation on a single set.
    pub fn square(set: FiniteSet, mu: Matrix, nu: Matrix) -> Result<Self> {
        Self::new(set.clone(), set, mu, nu)
    }

    pub fn from_pairs(
        source: FiniteSet,
        target: FiniteSet,
        cells: Vec<Vec<IFPair>>,
    ) -> Result<Self> {
        check_shape_pairs(&cells, source.len(), target.len())?;
        let mu = cells
            .iter()
            .map(|r| r.iter().map(|p| p.mu().clone()).collect())
            .collect();
        let nu = cells
            .iter()
            .map(|r| r.iter().map(|p| p.nu().clone()).collect())
            .collect();
        Ok(IFRelation {
            source,
            target,
            mu,
            nu,
        })
    }

    /// Embeds a crisp relation: related cells become `(1, 0)`, the rest
    /// `(0, 1)`.
    pub fn from_crisp(source: FiniteSet, target: FiniteSet, related: &[Vec<bool>]) -> Result<Self> {
        let cells = related
            .iter()
            .map(|r| r.iter().map(|&b| IFPair::from_bool(b)).collect())
            .collect();
        Self::from_pairs(source, target, cells)
    }

    pub fn identity(set: &FiniteSet) -> Self {
        let n = set.len();
        let eye: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        Self::from_crisp(set.clone(), set.clone(), &eye).expect("square shape")
    }

    pub fn source(&self) -> &FiniteSet {
        &self.source
    }

    pub fn target(&self) -> &FiniteSet {
        &self.target
    }

    pub fn mu(&self, x: usize, y: usize) -> &Degree {
        &self.mu[x][y]
    }

    pub fn nu(&self, x: usize, y: usize) -> &Degree {
        &self.nu[x][y]
    }

    pub fn pair(&self, x: usize, y: usize) -> IFPair {
        IFPair::new(self.mu[x][y].clone(), self.nu[x][y].clone()).expect("validated cell")
    }

    pub fn mu_matrix(&self) -> &Matrix {
        &self.mu
    }

    pub fn nu_matrix(&self) -> &Matrix {
        &self.nu
    }

    pub fn is_square(&self) -> bool {
        self.source == self.target
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.source.len())
        } else {
            Err(Error::NotSquare)
        }
    }

    /// Max-min composition on membership, min-max on nonmembership.
    pub fn compose(&self, other: &IFRelation) -> Result<IFRelation> {
        if self.target != other.source {
            return Err(Error::SetMismatch);
        }
        let (rows, mid, cols) = (self.source.len(), self.target.len(), other.target.len());
        let mut mu = Vec::with_capacity(rows);
        let mut nu = Vec::with_capacity(rows);
        for x in 0..rows {
            let mut mu_row = Vec::with_capacity(cols);
            let mut nu_row = Vec::with_capacity(cols);
            for z in 0..cols {
                let mut best_mu = Degree::zero();
                let mut best_nu = Degree::one();
                for y in 0..mid {
                    let m = (&self.mu[x][y]).min(&other.mu[y][z]);
                    if *m > best_mu {
                        best_mu = m.clone();
                    }
                    let n = (&self.nu[x][y]).max(&other.nu[y][z]);
                    if *n < best_nu {
                        best_nu = n.clone();
                    }
                }
                mu_row.push(best_mu);
                nu_row.push(best_nu);
            }
            mu.push(mu_row);
            nu.push(nu_row);
        }
        Ok(IFRelation {
            source: self.source.clone(),
            target: other.target.clone(),
            mu,
            nu,
        })
    }

    /// Every diagonal cell is `(1, 0)`.
    pub fn is_reflexive(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok((0..n).all(|x| self.mu[x][x].is_one() && self.nu[x][x].is_zero()))
    }

    /// Whether the relation holds to some degree from `x` to `y`:
    /// `mu > 0`, or `mu = 0` with `nu < 1`. For a valid pair this is just
    /// `nu < 1`.
    pub fn holds_somewhat(&self, x: usize, y: usize) -> bool {
        let (m, n) = (&self.mu[x][y], &self.nu[x][y]);
        !m.is_zero() || !n.is_one()
    }

    /// For distinct `x`, `y`: if the relation holds to any degree from `x`
    /// to `y`, it fails completely, `(0, 1)`, from `y` to `x`.
    pub fn is_perfectly_antisymmetric(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok((0..n).all(|x| {
            (0..n).all(|y| {
                x == y
                    || !self.holds_somewhat(x, y)
                    || (self.mu[y][x].is_zero() && self.nu[y][x].is_one())
            })
        }))
    }

    /// `R ∘ R ⊆ R`: composed membership never exceeds, and composed
    /// nonmembership never undercuts, the original.
    pub fn is_transitive(&self) -> Result<bool> {
        let n = self.require_square()?;
        let rr = self.compose(self)?;
        Ok((0..n)
            .all(|x| (0..n).all(|z| rr.mu[x][z] <= self.mu[x][z] && rr.nu[x][z] >= self.nu[x][z])))
    }

    pub fn is_partial_order(&self) -> Result<bool> {
        Ok(self.is_reflexive()? && self.is_perfectly_antisymmetric()? && self.is_transitive()?)
    }

    pub fn order_report(&self) -> Result<OrderReport> {
        let reflexive = self.is_reflexive()?;
        let perfectly_antisymmetric = self.is_perfectly_antisymmetric()?;
        let transitive = self.is_transitive()?;
        Ok(OrderReport {
            reflexive,
            perfectly_antisymmetric,
            transitive,
            partial_order: reflexive && perfectly_antisymmetric && transitive,
        })
    }
}

fn check_shape_pairs(cells: &[Vec<IFPair>], rows: usize, cols: usize) -> Result<()> {
    if cells.len() != rows || cells.iter().any(|r| r.len() != cols) {
        return Err(Error::MatrixShape {
            name: "cells",
            rows,
            cols,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub reflexive: bool,
    pub perfectly_antisymmetric: bool,
    pub transitive: bool,
    pub partial_order: bool,
}
