//! Exact truth degrees, intuitionistic fuzzy pairs, fuzzy sets over finite
//! domains and the degree of contradiction between two fuzzy sets.
//!
//! Every value here is an exact rational in `[0, 1]`. The operators used
//! (min, max, `1 - x`, sums and products) are closed over the rationals, so
//! equality comparisons are exact throughout.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A truth degree: an exact rational in the closed unit interval.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(BigRational);

impl Degree {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DegreeParse(format!("{numer}/{denom}")));
        }
        Self::from_rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_rational(value: BigRational) -> Result<Self> {
        if value.is_negative() || value > BigRational::one() {
            return Err(Error::DegreeRange(value.to_string()));
        }
        Ok(Degree(value))
    }

    pub fn zero() -> Self {
        Degree(BigRational::zero())
    }

    pub fn one() -> Self {
        Degree(BigRational::one())
    }

    pub fn half() -> Self {
        Degree(BigRational::new(1.into(), 2.into()))
    }

    pub fn from_bool(value: bool) -> Self {
        if value {
            Self::one()
        } else {
            Self::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        Degree(BigRational::one() - &self.0)
    }

    pub fn product(&self, other: &Self) -> Self {
        Degree(&self.0 * &other.0)
    }

    /// `min(1, self + other)`.
    pub fn bounded_sum(&self, other: &Self) -> Self {
        let sum = &self.0 + &other.0;
        if sum > BigRational::one() {
            Self::one()
        } else {
            Degree(sum)
        }
    }

    /// Absolute difference `|self - other|`, itself a degree.
    pub fn abs_diff(&self, other: &Self) -> Self {
        Degree((&self.0 - &other.0).abs())
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Degree {
    type Err = Error;

    /// Accepts `p/q`, integers and decimal literals such as `0.3`, all
    /// converted exactly.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = || Error::DegreeParse(s.to_string());
        let value = if let Some((p, q)) = text.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            BigRational::new(p, q)
        } else if let Some((int, frac)) = text.split_once('.') {
            if frac.is_empty() && int.is_empty() {
                return Err(bad());
            }
            if !frac.chars().all(|c| c.is_ascii_digit()) || !int.chars().all(|c| c.is_ascii_digit())
            {
                return Err(bad());
            }
            let digits = format!("{int}{frac}");
            let numer: BigInt = if digits.is_empty() {
                BigInt::zero()
            } else {
                digits.parse().map_err(|_| bad())?
            };
            let denom = num_traits::pow(BigInt::from(10), frac.len());
            BigRational::new(numer, denom)
        } else {
            if text.is_empty() || !text.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            BigRational::from_integer(text.parse().map_err(|_| bad())?)
        };
        Degree::from_rational(value)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(u64),
            Float(f64),
        }
        let text = match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s,
            Raw::Int(i) => i.to_string(),
            // Display gives the shortest decimal that round-trips.
            Raw::Float(x) => x.to_string(),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A membership / nonmembership pair with `mu + nu <= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IFPair {
    mu: Degree,
    nu: Degree,
}

impl IFPair {
    pub fn new(mu: Degree, nu: Degree) -> Result<Self> {
        if &mu.0 + &nu.0 > BigRational::one() {
            return Err(Error::PairSum {
                mu: mu.to_string(),
                nu: nu.to_string(),
            });
        }
        Ok(IFPair { mu, nu })
    }

    /// The crisp "holds" pair `(1, 0)`.
    pub fn certain() -> Self {
        IFPair {
            mu: Degree::one(),
            nu: Degree::zero(),
        }
    }

    /// The crisp "fails" pair `(0, 1)`.
    pub fn impossible() -> Self {
        IFPair {
            mu: Degree::zero(),
            nu: Degree::one(),
        }
    }

    pub fn from_bool(value: bool) -> Self {
        if value {
            Self::certain()
        } else {
            Self::impossible()
        }
    }

    pub fn mu(&self) -> &Degree {
        &self.mu
    }

    pub fn nu(&self) -> &Degree {
        &self.nu
    }

    /// Hesitation margin `1 - mu - nu`.
    pub fn hesitation(&self) -> Degree {
        Degree(BigRational::one() - &self.mu.0 - &self.nu.0)
    }

    /// Standard intuitionistic fuzzy complement: swap the components.
    pub fn complement(&self) -> Self {
        IFPair {
            mu: self.nu.clone(),
            nu: self.mu.clone(),
        }
    }
}

impl fmt::Display for IFPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu, self.nu)
    }
}

impl fmt::Debug for IFPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for IFPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            mu: Degree,
            nu: Degree,
        }
        let raw = Raw::deserialize(deserializer)?;
        IFPair::new(raw.mu, raw.nu).map_err(serde::de::Error::custom)
    }
}

pub fn if_complement(pair: &IFPair) -> IFPair {
    pair.complement()
}

/// A fuzzy subset of a finite, ordered domain of labelled points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FuzzySet {
    membership: IndexMap<String, Degree>,
}

impl FuzzySet {
    pub fn new(membership: IndexMap<String, Degree>) -> Result<Self> {
        if membership.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(FuzzySet { membership })
    }

    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Degree)>,
        S: Into<String>,
    {
        let mut membership = IndexMap::new();
        for (label, degree) in pairs {
            let label = label.into();
            if membership.contains_key(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            membership.insert(label, degree);
        }
        Self::new(membership)
    }

    /// The same degree at every point of `domain`.
    pub fn constant<S: AsRef<str>>(domain: &[S], degree: Degree) -> Result<Self> {
        Self::from_pairs(
            domain
                .iter()
                .map(|p| (p.as_ref().to_string(), degree.clone())),
        )
    }

    pub fn domain(&self) -> impl Iterator<Item = &str> {
        self.membership.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.membership.len()
    }

    pub fn is_empty(&self) -> bool {
        self.membership.is_empty()
    }

    pub fn get(&self, point: &str) -> Option<&Degree> {
        self.membership.get(point)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Degree)> {
        self.membership.iter().map(|(k, v)| (k.as_str(), v))
    }

    fn same_domain(&self, other: &FuzzySet) -> bool {
        self.len() == other.len() && self.domain().all(|p| other.get(p).is_some())
    }
}

impl<'de> Deserialize<'de> for FuzzySet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let membership = IndexMap::<String, Degree>::deserialize(deserializer)?;
        FuzzySet::new(membership).map_err(serde::de::Error::custom)
    }
}

pub trait NegationOp: fmt::Debug + Send + Sync {
    fn name(&self) -> &str;
    fn negate(&self, a: &Degree) -> Degree;
}

pub trait ImplicationOp: fmt::Debug + Send + Sync {
    fn name(&self) -> &str;
    fn implies(&self, a: &Degree, b: &Degree) -> Degree;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Negation {
    /// `N(x) = 1 - x`
    Standard,
}

impl NegationOp for Negation {
    fn name(&self) -> &str {
        match self {
            Negation::Standard => "standard",
        }
    }

    fn negate(&self, a: &Degree) -> Degree {
        match self {
            Negation::Standard => a.complement(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Implication {
    /// `max(1 - a, b)`, the fuzzy reading of material implication.
    KleeneDienes,
    /// `min(1, 1 - a + b)`
    Lukasiewicz,
    /// `1` if `a <= b`, else `b`
    Godel,
    /// `1 - a + a*b`
    Reichenbach,
}

impl Implication {
    pub const ALL: [Implication; 4] = [
        Implication::KleeneDienes,
        Implication::Lukasiewicz,
        Implication::Godel,
        Implication::Reichenbach,
    ];
}

impl ImplicationOp for Implication {
    fn name(&self) -> &str {
        match self {
            Implication::KleeneDienes => "kleene-dienes",
            Implication::Lukasiewicz => "lukasiewicz",
            Implication::Godel => "godel",
            Implication::Reichenbach => "reichenbach",
        }
    }

    fn implies(&self, a: &Degree, b: &Degree) -> Degree {
        match self {
            Implication::KleeneDienes => a.complement().max(b.clone()),
            Implication::Lukasiewicz => a.complement().bounded_sum(b),
            Implication::Godel => {
                if a <= b {
                    Degree::one()
                } else {
                    b.clone()
                }
            }
            // 1 - a + ab = 1 - a(1 - b), which stays in [0,1].
            Implication::Reichenbach => a.product(&b.complement()).complement(),
        }
    }
}

/// A negation / implication pair used to measure contradiction.
#[derive(Debug, Clone)]
pub struct OperatorChoice {
    negation: Arc<dyn NegationOp>,
    implication: Arc<dyn ImplicationOp>,
}

impl OperatorChoice {
    pub fn new(
        negation: impl NegationOp + 'static,
        implication: impl ImplicationOp + 'static,
    ) -> Self {
        OperatorChoice {
            negation: Arc::new(negation),
            implication: Arc::new(implication),
        }
    }

    pub fn standard(implication: Implication) -> Self {
        Self::new(Negation::Standard, implication)
    }

    pub fn negation_name(&self) -> &str {
        self.negation.name()
    }

    pub fn implication_name(&self) -> &str {
        self.implication.name()
    }

    pub fn negate(&self, a: &Degree) -> Degree {
        self.negation.negate(a)
    }

    pub fn implies(&self, a: &Degree, b: &Degree) -> Degree {
        self.implication.implies(a, b)
    }
}

impl Default for OperatorChoice {
    fn default() -> Self {
        Self::standard(Implication::KleeneDienes)
    }
}

/// Named operators, preloaded with the built-ins. Further operators can be
/// registered under new names.
#[derive(Debug, Clone)]
pub struct OperatorRegistry {
    negations: IndexMap<String, Arc<dyn NegationOp>>,
    implications: IndexMap<String, Arc<dyn ImplicationOp>>,
}

impl OperatorRegistry {
    pub fn builtin() -> Self {
        let mut registry = OperatorRegistry {
            negations: IndexMap::new(),
            implications: IndexMap::new(),
        };
        registry.register_negation(Negation::Standard);
        for imp in Implication::ALL {
            registry.register_implication(imp);
        }
        registry
    }

    pub fn register_negation(&mut self, op: impl NegationOp + 'static) {
        self.negations.insert(op.name().to_string(), Arc::new(op));
    }

    pub fn register_implication(&mut self, op: impl ImplicationOp + 'static) {
        self.implications
            .insert(op.name().to_string(), Arc::new(op));
    }

    pub fn negation_names(&self) -> impl Iterator<Item = &str> {
        self.negations.keys().map(String::as_str)
    }

    pub fn implication_names(&self) -> impl Iterator<Item = &str> {
        self.implications.keys().map(String::as_str)
    }

    pub fn choice(&self, negation: &str, implication: &str) -> Result<OperatorChoice> {
        let negation = self
            .negations
            .get(negation)
            .ok_or_else(|| Error::UnknownOperator(negation.to_string()))?;
        let implication = self
            .implications
            .get(implication)
            .ok_or_else(|| Error::UnknownOperator(implication.to_string()))?;
        Ok(OperatorChoice {
            negation: Arc::clone(negation),
            implication: Arc::clone(implication),
        })
    }
}

impl Default for OperatorRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contradiction {
    /// Infimum of the pointwise degrees over the domain.
    pub scalar: Degree,
    pub pointwise: IndexMap<String, Degree>,
}

/// Degree to which `a` contradicts `b`: pointwise `J(A(x), N(B(x)))`,
/// aggregated by minimum.
pub fn contradiction_degree(
    a: &FuzzySet,
    b: &FuzzySet,
    ops: &OperatorChoice,
) -> Result<Contradiction> {
    if !a.same_domain(b) {
        return Err(Error::DomainMismatch);
    }
    let pointwise: IndexMap<String, Degree> = a
        .iter()
        .map(|(point, da)| {
            let db = b.get(point).expect("domains checked");
            (point.to_string(), ops.implies(da, &ops.negate(db)))
        })
        .collect();
    let scalar = pointwise
        .values()
        .min_by(|x, y| x.cmp(y))
        .cloned()
        .unwrap_or_else(Degree::one);
    Ok(Contradiction { scalar, pointwise })
}

pub fn self_contradiction_degree(a: &FuzzySet, ops: &OperatorChoice) -> Degree {
    contradiction_degree(a, a, ops)
        .expect("a set shares its own domain")
        .scalar
}
