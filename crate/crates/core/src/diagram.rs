//! Crisp Aristotelian diagrams: the seven logical relations, the
//! informativity order between them, isomorphisms and infomorphisms.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::algebra::{BooleanAlgebra, Element};
use crate::error::{Error, Result};

/// Largest fragment [`find_isos`] will search.
pub const ISO_SEARCH_LIMIT: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelationKind {
    BI,
    LI,
    RI,
    CD,
    C,
    SC,
    Un,
}

impl RelationKind {
    pub const ALL: [RelationKind; 7] = [
        RelationKind::BI,
        RelationKind::LI,
        RelationKind::RI,
        RelationKind::CD,
        RelationKind::C,
        RelationKind::SC,
        RelationKind::Un,
    ];

    /// The eight generating pairs of the informativity order.
    pub const INFORMATIVITY_COVERS: [(RelationKind, RelationKind); 8] = [
        (RelationKind::Un, RelationKind::LI),
        (RelationKind::Un, RelationKind::RI),
        (RelationKind::Un, RelationKind::C),
        (RelationKind::Un, RelationKind::SC),
        (RelationKind::LI, RelationKind::BI),
        (RelationKind::RI, RelationKind::BI),
        (RelationKind::C, RelationKind::CD),
        (RelationKind::SC, RelationKind::CD),
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationKind::BI => "BI",
            RelationKind::LI => "LI",
            RelationKind::RI => "RI",
            RelationKind::CD => "CD",
            RelationKind::C => "C",
            RelationKind::SC => "SC",
            RelationKind::Un => "Un",
        }
    }

    pub fn is_implication(self) -> bool {
        matches!(self, RelationKind::BI | RelationKind::LI | RelationKind::RI)
    }

    pub fn is_opposition(self) -> bool {
        matches!(self, RelationKind::CD | RelationKind::C | RelationKind::SC)
    }

    /// The relation seen from the other side: LI and RI swap.
    pub fn converse(self) -> RelationKind {
        match self {
            RelationKind::LI => RelationKind::RI,
            RelationKind::RI => RelationKind::LI,
            other => other,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Record(format!("unknown relation kind `{s}`")))
    }
}

fn informativity_closure() -> &'static [[bool; 7]; 7] {
    static CLOSURE: OnceLock<[[bool; 7]; 7]> = OnceLock::new();
    CLOSURE.get_or_init(|| {
        let mut le = [[false; 7]; 7];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (lo, hi) in RelationKind::INFORMATIVITY_COVERS {
            le[lo.index()][hi.index()] = true;
        }
        for k in 0..7 {
            for i in 0..7 {
                for j in 0..7 {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        le
    })
}

/// `r ≤ᵢ s` in the reflexive-transitive closure of the informativity covers.
pub fn informativity_leq(r: RelationKind, s: RelationKind) -> bool {
    informativity_closure()[r.index()][s.index()]
}

/// Classification by bitmask inside an algebra with the given top mask.
/// Clauses are tried in order; the first that holds wins.
pub(crate) fn classify_bits(top: u32, x: u32, y: u32) -> RelationKind {
    let meet = x & y;
    let join = x | y;
    if x == y {
        RelationKind::BI
    } else if x & !y == 0 {
        RelationKind::LI
    } else if y & !x == 0 {
        RelationKind::RI
    } else if meet == 0 && join == top {
        RelationKind::CD
    } else if meet == 0 {
        RelationKind::C
    } else if join == top {
        RelationKind::SC
    } else {
        RelationKind::Un
    }
}

pub fn classify(algebra: &BooleanAlgebra, x: &Element, y: &Element) -> Result<RelationKind> {
    if x.algebra() != algebra || y.algebra() != algebra {
        return Err(Error::AlgebraMismatch);
    }
    Ok(classify_bits(algebra.mask(), x.bits(), y.bits()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    algebra: BooleanAlgebra,
    fragment: Vec<Element>,
    labels: Vec<String>,
    contingent: bool,
}

impl Diagram {
    pub fn new(
        algebra: BooleanAlgebra,
        fragment: Vec<Element>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if fragment.is_empty() {
            return Err(Error::EmptySet);
        }
        if labels.len() != fragment.len() {
            return Err(Error::LabelCount {
                expected: fragment.len(),
                found: labels.len(),
            });
        }
        for (i, x) in fragment.iter().enumerate() {
            if x.algebra() != &algebra {
                return Err(Error::AlgebraMismatch);
            }
            if fragment[..i].contains(x) {
                return Err(Error::DuplicateElement(i));
            }
        }
        let contingent = fragment.iter().all(Element::is_contingent);
        Ok(Diagram {
            algebra,
            fragment,
            labels,
            contingent,
        })
    }

    /// A diagram whose labels are the elements' own `{a,b}` renderings.
    pub fn unlabelled(algebra: BooleanAlgebra, fragment: Vec<Element>) -> Result<Self> {
        let labels = fragment.iter().map(ToString::to_string).collect();
        Self::new(algebra, fragment, labels)
    }

    pub fn algebra(&self) -> &BooleanAlgebra {
        &self.algebra
    }

    pub fn fragment(&self) -> &[Element] {
        &self.fragment
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.fragment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fragment.is_empty()
    }

    /// True when no fragment element is 0 or 1; only then do the six
    /// non-BI relations partition distinct pairs.
    pub fn is_contingent(&self) -> bool {
        self.contingent
    }

    pub fn relation(&self, i: usize, j: usize) -> RelationKind {
        classify_bits(
            self.algebra.mask(),
            self.fragment[i].bits(),
            self.fragment[j].bits(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTable {
    pub labels: Vec<String>,
    pub kinds: Vec<Vec<RelationKind>>,
}

impl RelationTable {
    pub fn get(&self, i: usize, j: usize) -> RelationKind {
        self.kinds[i][j]
    }

    /// Position of a label, for lookups such as `table.between("A", "O")`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn between(&self, a: &str, b: &str) -> Option<RelationKind> {
        Some(self.kinds[self.index_of(a)?][self.index_of(b)?])
    }

    pub fn render_text(&self) -> String {
        let width = self
            .labels
            .iter()
            .map(|l| l.chars().count())
            .max()
            .unwrap_or(0)
            .max(2);
        let mut out = String::new();
        out.push_str(&" ".repeat(width));
        for label in &self.labels {
            out.push_str(&format!(" | {label:<width$}"));
        }
        out.push('\n');
        for (label, row) in self.labels.iter().zip(&self.kinds) {
            out.push_str(&format!("{label:<width$}"));
            for kind in row {
                out.push_str(&format!(" | {:<width$}", kind.name()));
            }
            out.push('\n');
        }
        out.lines().map(|l| format!("{}\n", l.trim_end())).collect()
    }
}

pub fn relation_table(diagram: &Diagram) -> RelationTable {
    let n = diagram.len();
    RelationTable {
        labels: diagram.labels.clone(),
        kinds: (0..n)
            .map(|i| (0..n).map(|j| diagram.relation(i, j)).collect())
            .collect(),
    }
}

/// The traditional square of opposition (with existential import) inside
/// the 3-atom algebra.
///
/// The atoms are the three ways a non-empty `S` can sit relative to `P`:
/// wholly inside, straddling, wholly outside. Fragment order is A, E, I, O.
pub fn canonical_square() -> Diagram {
    let algebra = BooleanAlgebra::with_labels(["S-inside-P", "S-straddles-P", "S-outside-P"])
        .expect("three distinct atoms");
    let fragment = [0b001, 0b100, 0b011, 0b110]
        .into_iter()
        .map(|bits| algebra.element(bits).expect("in range"))
        .collect();
    let labels = [
        "Every S is P",
        "No S is P",
        "Some S is P",
        "Some S is not P",
    ]
    .map(String::from)
    .to_vec();
    Diagram::new(algebra, fragment, labels).expect("valid square")
}

/// A map between diagram fragments, by index.
#[derive(Debug, Clone)]
pub struct DiagramMap<'a> {
    source: &'a Diagram,
    target: &'a Diagram,
    mapping: Vec<usize>,
}

impl<'a> DiagramMap<'a> {
    pub fn new(source: &'a Diagram, target: &'a Diagram, mapping: Vec<usize>) -> Result<Self> {
        validate_mapping(&mapping, source.len(), target.len())?;
        Ok(DiagramMap {
            source,
            target,
            mapping,
        })
    }

    pub fn identity(diagram: &'a Diagram) -> Self {
        DiagramMap {
            source: diagram,
            target: diagram,
            mapping: (0..diagram.len()).collect(),
        }
    }

    pub fn source(&self) -> &'a Diagram {
        self.source
    }

    pub fn target(&self) -> &'a Diagram {
        self.target
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn is_bijective(&self) -> bool {
        is_bijection(&self.mapping, self.target.len())
    }

    /// `next ∘ self`. Fails when `next` does not start where `self` ends.
    pub fn then(&self, next: &DiagramMap<'a>) -> Result<DiagramMap<'a>> {
        if self.target != next.source {
            return Err(Error::Record("maps are not composable".into()));
        }
        Ok(DiagramMap {
            source: self.source,
            target: next.target,
            mapping: self.mapping.iter().map(|&i| next.mapping[i]).collect(),
        })
    }
}

pub(crate) fn validate_mapping(mapping: &[usize], source: usize, target: usize) -> Result<()> {
    if mapping.len() != source {
        return Err(Error::MappingLength {
            expected: source,
            found: mapping.len(),
        });
    }
    for (index, &value) in mapping.iter().enumerate() {
        if value >= target {
            return Err(Error::MappingRange {
                index,
                value,
                size: target,
            });
        }
    }
    Ok(())
}

pub(crate) fn is_bijection(mapping: &[usize], target: usize) -> bool {
    if mapping.len() != target {
        return false;
    }
    let mut seen = vec![false; target];
    mapping
        .iter()
        .all(|&j| !std::mem::replace(&mut seen[j], true))
}

/// Whether the bijection preserves and reflects every logical relation.
pub fn check_iso(map: &DiagramMap<'_>) -> Result<bool> {
    if !map.is_bijective() {
        return Err(Error::NotBijective);
    }
    let f = &map.mapping;
    let n = map.source.len();
    Ok(
        (0..n)
            .all(|i| (0..n).all(|j| map.source.relation(i, j) == map.target.relation(f[i], f[j]))),
    )
}

/// Every Aristotelian isomorphism between the two diagrams, in
/// lexicographic order of the mapping vectors.
pub fn find_isos(d1: &Diagram, d2: &Diagram) -> Result<Vec<Vec<usize>>> {
    if d1.len() > ISO_SEARCH_LIMIT {
        return Err(Error::SearchLimit {
            size: d1.len(),
            limit: ISO_SEARCH_LIMIT,
        });
    }
    if d1.len() != d2.len() {
        return Ok(Vec::new());
    }
    let n = d1.len();
    let source = relation_table(d1).kinds;
    let target = relation_table(d2).kinds;
    let mut found = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search_isos(&source, &target, &mut current, &mut used, &mut found);
    Ok(found)
}

fn search_isos(
    source: &[Vec<RelationKind>],
    target: &[Vec<RelationKind>],
    current: &mut Vec<usize>,
    used: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) {
    let i = current.len();
    if i == source.len() {
        found.push(current.clone());
        return;
    }
    for j in 0..target.len() {
        if used[j] {
            continue;
        }
        let compatible = current
            .iter()
            .enumerate()
            .all(|(k, &fk)| source[i][k] == target[j][fk] && source[k][i] == target[fk][j]);
        if !compatible {
            continue;
        }
        used[j] = true;
        current.push(j);
        search_isos(source, target, current, used, found);
        current.pop();
        used[j] = false;
    }
}

/// Whether every relation is sent to one at least as informative.
pub fn check_infomorphism(map: &DiagramMap<'_>) -> bool {
    let f = &map.mapping;
    let n = map.source.len();
    (0..n).all(|i| {
        (0..n)
            .all(|j| informativity_leq(map.source.relation(i, j), map.target.relation(f[i], f[j])))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use RelationKind::*;

    fn bits(alg: &BooleanAlgebra, b: u32) -> Element {
        alg.element(b).unwrap()
    }

    #[test]
    fn classify_examples() {
        let alg = BooleanAlgebra::new(3).unwrap();
        let x = bits(&alg, 0b001);
        assert_eq!(classify(&alg, &x, &x).unwrap(), BI);
        assert_eq!(classify(&alg, &x, &bits(&alg, 0b110)).unwrap(), CD);
        assert_eq!(classify(&alg, &x, &bits(&alg, 0b100)).unwrap(), C);
        assert_eq!(
            classify(&alg, &bits(&alg, 0b011), &bits(&alg, 0b110)).unwrap(),
            SC
        );
        assert_eq!(classify(&alg, &bits(&alg, 0b011), &x).unwrap(), RI);
        let other = BooleanAlgebra::new(2).unwrap();
        assert!(classify(&alg, &x, &other.top()).is_err());
    }

    #[test]
    fn first_match_on_bounds() {
        // 0 and 1 satisfy both LI and CD; LI is listed first.
        let alg = BooleanAlgebra::new(2).unwrap();
        assert_eq!(classify(&alg, &alg.bottom(), &alg.top()).unwrap(), LI);
        assert_eq!(classify(&alg, &alg.top(), &alg.bottom()).unwrap(), RI);
    }

    #[test]
    fn unconnected_pairs_need_four_atoms() {
        let alg = BooleanAlgebra::new(3).unwrap();
        // With three atoms {a,b} and {b,c} already join to top; Un needs a fourth.
        let alg4 = BooleanAlgebra::new(4).unwrap();
        assert_eq!(
            classify(&alg4, &bits(&alg4, 0b0011), &bits(&alg4, 0b0110)).unwrap(),
            Un
        );
        assert_eq!(
            classify(&alg, &bits(&alg, 0b011), &bits(&alg, 0b110)).unwrap(),
            SC
        );
    }

    #[test]
    fn canonical_square_theses() {
        let t = relation_table(&canonical_square());
        let get = |a: usize, b: usize| t.get(a, b);
        let (a, e, i, o) = (0, 1, 2, 3);
        assert_eq!(get(a, o), CD);
        assert_eq!(get(e, i), CD);
        assert_eq!(get(a, e), C);
        assert_eq!(get(i, o), SC);
        assert_eq!(get(a, i), LI);
        assert_eq!(get(e, o), LI);
        assert_eq!(get(i, a), RI);
        assert!((0..4).all(|k| get(k, k) == BI));
        assert!(canonical_square().is_contingent());
        assert_eq!(t.between("Every S is P", "Some S is not P"), Some(CD));
    }

    #[test]
    fn relation_table_small_cases() {
        let alg = BooleanAlgebra::new(2).unwrap();
        let single = Diagram::unlabelled(alg.clone(), vec![bits(&alg, 1)]).unwrap();
        assert_eq!(relation_table(&single).kinds, vec![vec![BI]]);
        let x = bits(&alg, 0b01);
        let pair = Diagram::unlabelled(alg.clone(), vec![x.clone(), x.complement()]).unwrap();
        let t = relation_table(&pair);
        assert_eq!(t.get(0, 1), CD);
        assert_eq!(t.get(1, 0), CD);
    }

    #[test]
    fn diagram_validation() {
        let alg = BooleanAlgebra::new(2).unwrap();
        assert!(matches!(
            Diagram::unlabelled(alg.clone(), vec![bits(&alg, 1), bits(&alg, 1)]),
            Err(Error::DuplicateElement(1))
        ));
        assert!(Diagram::new(alg.clone(), vec![bits(&alg, 1)], vec![]).is_err());
        let other = BooleanAlgebra::new(3).unwrap();
        assert!(Diagram::unlabelled(alg.clone(), vec![other.top()]).is_err());
        let d = Diagram::unlabelled(alg.clone(), vec![alg.top()]).unwrap();
        assert!(!d.is_contingent());
    }

    #[test]
    fn informativity_examples() {
        assert!(informativity_leq(Un, LI));
        for r in RelationKind::ALL {
            assert!(informativity_leq(r, r));
            assert!(informativity_leq(Un, r));
        }
        assert!(!informativity_leq(CD, C));
        assert!(informativity_leq(C, CD));
        assert!(informativity_leq(Un, BI));
        assert!(!informativity_leq(C, Un));
        assert!(!informativity_leq(LI, CD));
        assert!(!informativity_leq(BI, LI));
    }

    #[test]
    fn iso_examples() {
        let sq = canonical_square();
        assert!(check_iso(&DiagramMap::identity(&sq)).unwrap());
        let mirror = DiagramMap::new(&sq, &sq, vec![1, 0, 3, 2]).unwrap();
        assert!(check_iso(&mirror).unwrap());
        let bad = DiagramMap::new(&sq, &sq, vec![2, 1, 0, 3]).unwrap();
        assert!(!check_iso(&bad).unwrap());
        let not_bij = DiagramMap::new(&sq, &sq, vec![0, 0, 1, 2]).unwrap();
        assert_eq!(check_iso(&not_bij), Err(Error::NotBijective));
    }

    #[test]
    fn find_isos_examples() {
        let sq = canonical_square();
        assert_eq!(
            find_isos(&sq, &sq).unwrap(),
            vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2]]
        );

        let alg = BooleanAlgebra::new(2).unwrap();
        let single = Diagram::unlabelled(alg.clone(), vec![bits(&alg, 1)]).unwrap();
        let single2 = Diagram::unlabelled(alg.clone(), vec![bits(&alg, 2)]).unwrap();
        assert_eq!(find_isos(&single, &single2).unwrap(), vec![vec![0]]);
        assert!(find_isos(&single, &sq).unwrap().is_empty());

        let big = BooleanAlgebra::new(4).unwrap();
        let frag: Vec<_> = (1..12).map(|b| bits(&big, b)).collect();
        let d = Diagram::unlabelled(big, frag).unwrap();
        assert!(matches!(find_isos(&d, &d), Err(Error::SearchLimit { .. })));
    }

    #[test]
    fn infomorphism_examples() {
        let sq = canonical_square();
        assert!(check_infomorphism(&DiagramMap::identity(&sq)));
        let mirror = DiagramMap::new(&sq, &sq, vec![1, 0, 3, 2]).unwrap();
        assert!(check_infomorphism(&mirror));

        // A contrary pair sent onto an unconnected one.
        let alg3 = BooleanAlgebra::new(3).unwrap();
        let contraries =
            Diagram::unlabelled(alg3.clone(), vec![bits(&alg3, 0b001), bits(&alg3, 0b100)])
                .unwrap();
        let alg4 = BooleanAlgebra::new(4).unwrap();
        let unconnected =
            Diagram::unlabelled(alg4.clone(), vec![bits(&alg4, 0b0011), bits(&alg4, 0b0110)])
                .unwrap();
        let m = DiagramMap::new(&contraries, &unconnected, vec![0, 1]).unwrap();
        assert!(!check_infomorphism(&m));
        let back = DiagramMap::new(&unconnected, &contraries, vec![0, 1]).unwrap();
        assert!(check_infomorphism(&back));
    }

    #[test]
    fn mapping_validation() {
        let sq = canonical_square();
        assert!(matches!(
            DiagramMap::new(&sq, &sq, vec![0, 1]),
            Err(Error::MappingLength { .. })
        ));
        assert!(matches!(
            DiagramMap::new(&sq, &sq, vec![0, 1, 2, 9]),
            Err(Error::MappingRange { .. })
        ));
    }
}
