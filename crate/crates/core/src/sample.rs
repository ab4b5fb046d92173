//! Seeded random generators for property sampling.
//!
//! All generators take a caller-owned RNG; [`rng`] builds a ChaCha stream
//! from a seed, so identical seeds give identical samples on every
//! platform.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::BooleanAlgebra;
use crate::degree::{Degree, IFPair};
use crate::diagram::Diagram;
use crate::error::Result;
use crate::fuzzy_diagram::{check_fuzzy_infomorphism, FuzzyAristotelianDiagram, FuzzyDiagramMap};
use crate::iflattice::IFLattice;
use crate::ifrel::{FiniteSet, IFRelation, Matrix};

/// Largest denominator used for random degrees.
pub const MAX_DENOMINATOR: i64 = 12;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn degree<R: Rng>(rng: &mut R) -> Degree {
    let q = rng.gen_range(1..=MAX_DENOMINATOR);
    Degree::new(rng.gen_range(0..=q), q).expect("p <= q")
}

/// A pair `(a/q, b/q)` with `a + b <= q`.
pub fn if_pair<R: Rng>(rng: &mut R) -> IFPair {
    let q = rng.gen_range(1..=MAX_DENOMINATOR);
    let a = rng.gen_range(0..=q);
    let b = rng.gen_range(0..=q - a);
    IFPair::new(Degree::new(a, q).unwrap(), Degree::new(b, q).unwrap()).expect("a + b <= q")
}

/// A pair with `nu < 1`, so the edge holds to some degree.
fn holding_pair<R: Rng>(rng: &mut R) -> IFPair {
    loop {
        let p = if_pair(rng);
        if !p.nu().is_one() {
            return p;
        }
    }
}

pub fn relation<R: Rng>(rng: &mut R, source: &FiniteSet, target: &FiniteSet) -> IFRelation {
    let cells = (0..source.len())
        .map(|_| (0..target.len()).map(|_| if_pair(rng)).collect())
        .collect();
    IFRelation::from_pairs(source.clone(), target.clone(), cells).expect("shape")
}

/// Three composable relations `X→Y`, `Y→Z`, `Z→W` over sets of size
/// `1..=max_size`.
pub fn composable_triple<R: Rng>(rng: &mut R, max_size: usize) -> [IFRelation; 3] {
    let sets: Vec<FiniteSet> = (0..4)
        .map(|_| FiniteSet::numbered(rng.gen_range(1..=max_size)).unwrap())
        .collect();
    [
        relation(rng, &sets[0], &sets[1]),
        relation(rng, &sets[1], &sets[2]),
        relation(rng, &sets[2], &sets[3]),
    ]
}

/// A random crisp diagram: `1..=max_atoms` atoms and a fragment of
/// `1..=max_fragment` distinct elements.
pub fn crisp_diagram<R: Rng>(rng: &mut R, max_atoms: usize, max_fragment: usize) -> Diagram {
    let algebra = BooleanAlgebra::new(rng.gen_range(1..=max_atoms)).expect("atom count");
    let len = rng.gen_range(1..=max_fragment.min(algebra.size()));
    let mut all: Vec<u32> = (0..=algebra.mask()).collect();
    all.shuffle(rng);
    let fragment = all[..len]
        .iter()
        .map(|&b| algebra.element(b).unwrap())
        .collect();
    Diagram::unlabelled(algebra, fragment).expect("distinct elements")
}

/// A random crisp partial order on `n` points, as a reflexive and
/// transitively closed `leq` matrix.
pub fn crisp_order<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<bool>> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let density = rng.gen_range(0.1..0.7);
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        leq[perm[i]][perm[i]] = true;
        for j in i + 1..n {
            if rng.gen_bool(density) {
                leq[perm[i]][perm[j]] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    leq
}

/// The subset order of a powerset on `atoms` atoms, with the carrier
/// shuffled.
pub fn shuffled_powerset_order<R: Rng>(rng: &mut R, atoms: usize) -> Vec<Vec<bool>> {
    let n = 1usize << atoms;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut leq = vec![vec![false; n]; n];
    for x in 0..n {
        for y in 0..n {
            leq[perm[x]][perm[y]] = x & !y == 0;
        }
    }
    leq
}

/// Grades a crisp partial order into an IF partial order whose underlying
/// order is the same.
///
/// Each point gets two IF pairs, `(a, c)` as an edge source and `(b, d)` as
/// an edge target; a strict edge `x ≺ z` gets `(min(a_x, b_z), max(c_x,
/// d_z))`, non-edges `(0, 1)`. With `c, d < 1`, min-of-memberships and
/// max-of-nonmemberships along chains keep the result transitive.
pub fn grade_order<R: Rng>(rng: &mut R, leq: &[Vec<bool>]) -> IFRelation {
    let n = leq.len();
    let as_source: Vec<IFPair> = (0..n).map(|_| holding_pair(rng)).collect();
    let as_target: Vec<IFPair> = (0..n).map(|_| holding_pair(rng)).collect();
    let mut mu: Matrix = vec![vec![Degree::zero(); n]; n];
    let mut nu: Matrix = vec![vec![Degree::one(); n]; n];
    for x in 0..n {
        for z in 0..n {
            if x == z {
                mu[x][z] = Degree::one();
                nu[x][z] = Degree::zero();
            } else if leq[x][z] {
                mu[x][z] = as_source[x].mu().min(as_target[z].mu()).clone();
                nu[x][z] = as_source[x].nu().max(as_target[z].nu()).clone();
            }
        }
    }
    IFRelation::square(FiniteSet::numbered(n).unwrap(), mu, nu).expect("valid cells")
}

/// A random IF partial order. About half are graded shuffled powersets
/// (always Boolean); the rest grade a random poset on up to `max_points`
/// points.
pub fn if_order<R: Rng>(rng: &mut R, max_points: usize) -> IFRelation {
    let leq = if rng.gen_bool(0.5) {
        let atoms = rng.gen_range(0..=3);
        shuffled_powerset_order(rng, atoms)
    } else {
        let points = rng.gen_range(1..=max_points);
        crisp_order(rng, points)
    };
    grade_order(rng, &leq)
}

/// A graded powerset IF Boolean algebra; carrier index is the bitmask.
pub fn graded_powerset<R: Rng>(rng: &mut R, atoms: usize) -> Arc<IFLattice> {
    let n = 1usize << atoms;
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|x| (0..n).map(|y| x & !y == 0).collect())
        .collect();
    let order = grade_order(rng, &leq);
    Arc::new(IFLattice::new(order).expect("graded orders are partial orders"))
}

/// Diagrams and index mappings forming a chain `D0 → D1 → ... → Dk`.
#[derive(Debug, Clone)]
pub struct SampleChain {
    pub diagrams: Vec<FuzzyAristotelianDiagram>,
    pub mappings: Vec<Vec<usize>>,
}

impl SampleChain {
    pub fn maps(&self) -> Vec<FuzzyDiagramMap<'_>> {
        self.mappings
            .iter()
            .enumerate()
            .map(|(i, m)| {
                FuzzyDiagramMap::new(&self.diagrams[i], &self.diagrams[i + 1], m.clone())
                    .expect("generated mapping is valid")
            })
            .collect()
    }
}

fn random_fuzzy_diagram<R: Rng>(rng: &mut R, max_atoms: usize) -> Result<FuzzyAristotelianDiagram> {
    let atoms = rng.gen_range(1..=max_atoms);
    let lattice = graded_powerset(rng, atoms);
    let size = lattice.len();
    let mut all: Vec<usize> = (0..size).collect();
    all.shuffle(rng);
    let len = rng.gen_range(1..=size.min(4));
    FuzzyAristotelianDiagram::unlabelled(lattice, all[..len].to_vec())
}

/// Candidate image of `source` under a random function of its fragment into
/// a fresh graded powerset. Half the candidates come from Boolean
/// homomorphisms `S ↦ φ⁻¹(S)` for a random `φ` between atom sets, the rest
/// from arbitrary functions.
fn candidate_step<R: Rng>(
    rng: &mut R,
    source: &FuzzyAristotelianDiagram,
    source_atoms: usize,
    max_atoms: usize,
) -> Result<(FuzzyAristotelianDiagram, Vec<usize>, usize)> {
    let atoms = rng.gen_range(1..=max_atoms);
    let lattice = graded_powerset(rng, atoms);
    let images: Vec<usize> = if rng.gen_bool(0.5) {
        let phi: Vec<usize> = (0..atoms).map(|_| rng.gen_range(0..source_atoms)).collect();
        source
            .fragment()
            .iter()
            .map(|&s| {
                (0..atoms)
                    .filter(|&b| s & (1 << phi[b]) != 0)
                    .map(|b| 1 << b)
                    .sum()
            })
            .collect()
    } else {
        source
            .fragment()
            .iter()
            .map(|_| rng.gen_range(0..lattice.len()))
            .collect()
    };
    let mut fragment: Vec<usize> = Vec::new();
    let mapping = images
        .iter()
        .map(|img| match fragment.iter().position(|f| f == img) {
            Some(i) => i,
            None => {
                fragment.push(*img);
                fragment.len() - 1
            }
        })
        .collect();
    if rng.gen_bool(0.3) {
        let extra = rng.gen_range(0..lattice.len());
        if !fragment.contains(&extra) {
            fragment.push(extra);
        }
    }
    let target = FuzzyAristotelianDiagram::unlabelled(lattice, fragment)?;
    Ok((target, mapping, atoms))
}

/// A chain of `length` fuzzy infomorphisms between diagrams over graded
/// powerset algebras with up to `max_atoms` atoms. Each step retries random
/// candidates and falls back to the identity.
pub fn infomorphism_chain<R: Rng>(rng: &mut R, length: usize, max_atoms: usize) -> SampleChain {
    let mut current = random_fuzzy_diagram(rng, max_atoms).expect("powersets are Boolean");
    let mut atoms = current.algebra().len().trailing_zeros() as usize;
    let mut diagrams = vec![current.clone()];
    let mut mappings = Vec::new();
    for _ in 0..length {
        let mut step = None;
        for _ in 0..32 {
            let (target, mapping, target_atoms) =
                candidate_step(rng, &current, atoms, max_atoms).expect("powersets are Boolean");
            let map = FuzzyDiagramMap::new(&current, &target, mapping.clone()).expect("valid");
            if check_fuzzy_infomorphism(&map) {
                step = Some((target, mapping, target_atoms));
                break;
            }
        }
        let (target, mapping, target_atoms) =
            step.unwrap_or_else(|| (current.clone(), (0..current.len()).collect(), atoms));
        diagrams.push(target.clone());
        mappings.push(mapping);
        current = target;
        atoms = target_atoms;
    }
    SampleChain { diagrams, mappings }
}
