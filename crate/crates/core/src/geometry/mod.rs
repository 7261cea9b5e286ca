//! Exact projective geometry over the rationals.
//!
//! Linear forms and points in `P^d` are vectors of `d+1` rationals scaled so
//! that the first nonzero entry is 1; equality is equality of these
//! canonical representatives.

mod generators;
mod resolution;
mod specialize;
mod verify;

use std::fmt;

use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{dot, normalize_leading};

pub use generators::{certificate_span_dimension, generators_from_certificates, GeneratorReport};
pub use resolution::{resolution_profile, ResolutionProfile, ResolutionTerm};
pub use specialize::{specialize, PointConfiguration, SpecializationMap};
pub use verify::{
    augment_with_spanned, certify_points, evaluate_certificate, gc_certificates, is_n_correct,
    maximal_hyperplanes, spanned_hyperplanes, GcCertificate, HyperplaneCount,
};

pub type Rational = BigRational;

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>()
        .map_err(|_| Error::InvalidRational(s.to_string()))
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn canonical(mut coords: Vec<Rational>) -> Result<Vec<Rational>> {
    if normalize_leading(&mut coords) {
        Ok(coords)
    } else {
        Err(Error::ZeroVector)
    }
}

/// Wire form of a rational vector: decimal integers or `"p/q"` strings.
#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct RationalStrings(Vec<String>);

impl RationalStrings {
    fn from_values(values: &[Rational]) -> Self {
        RationalStrings(values.iter().map(|x| x.to_string()).collect())
    }

    fn parse(&self) -> Result<Vec<Rational>> {
        self.0.iter().map(|s| parse_rational(s)).collect()
    }
}

/// A homogeneous linear form `sum_i c_i x_i` up to scaling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coefficients: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        Ok(LinearForm {
            coefficients: canonical(coefficients)?,
        })
    }

    pub fn from_integers(coefficients: &[i64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| rational(c)).collect())
    }

    pub fn parse(coefficients: &[&str]) -> Result<Self> {
        Self::new(
            coefficients
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_>>()?,
        )
    }

    /// The coordinate form `x_i` in `P^ambient_dim`.
    pub fn coordinate(i: usize, ambient_dim: usize) -> Self {
        let mut c = vec![Rational::zero(); ambient_dim + 1];
        c[i] = rational(1);
        LinearForm { coefficients: c }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Number of homogeneous coordinates, `d + 1`.
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, coords: &[Rational]) -> Rational {
        dot(&self.coefficients, coords)
    }

    pub fn vanishes_at(&self, p: &ProjectivePoint) -> bool {
        self.eval(p.coordinates()).is_zero()
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c == &rational(1) {
                write!(f, "x{i}")?;
            } else {
                write!(f, "({c})x{i}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalStrings::from_values(&self.coefficients).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RationalStrings::deserialize(d)?;
        raw.parse()
            .and_then(LinearForm::new)
            .map_err(serde::de::Error::custom)
    }
}

/// A point of `P^d` up to scaling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coordinates: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coordinates: Vec<Rational>) -> Result<Self> {
        Ok(ProjectivePoint {
            coordinates: canonical(coordinates)?,
        })
    }

    pub fn from_integers(coordinates: &[i64]) -> Result<Self> {
        Self::new(coordinates.iter().map(|&c| rational(c)).collect())
    }

    /// Lifts an affine point into `P^d` with a 1 in position `chart`.
    pub fn from_affine(affine: &[Rational], chart: usize) -> Result<Self> {
        if chart > affine.len() {
            return Err(Error::ChartOutOfRange {
                chart,
                ambient: affine.len(),
            });
        }
        let mut coords = affine.to_vec();
        coords.insert(chart, rational(1));
        Self::new(coords)
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.coordinates
    }

    pub fn ambient_dim(&self) -> usize {
        self.coordinates.len() - 1
    }

    /// Representative with coordinate `chart` equal to 1, or `None` at
    /// infinity.
    pub fn dehomogenized(&self, chart: usize) -> Option<Vec<Rational>> {
        let w = self.coordinates.get(chart)?;
        if w.is_zero() {
            return None;
        }
        Some(self.coordinates.iter().map(|x| x / w).collect())
    }

    /// Affine coordinates in the chart, with the chart coordinate dropped.
    pub fn affine(&self, chart: usize) -> Option<Vec<Rational>> {
        let mut v = self.dehomogenized(chart)?;
        v.remove(chart);
        Some(v)
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coordinates.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalStrings::from_values(&self.coordinates).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RationalStrings::deserialize(d)?;
        raw.parse()
            .and_then(ProjectivePoint::new)
            .map_err(serde::de::Error::custom)
    }
}

/// Wire format `{"ambient_dim": d, "forms": [["1","0","0","-1"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormsFile {
    pub ambient_dim: usize,
    pub forms: Vec<LinearForm>,
}

impl FormsFile {
    pub fn validate(&self) -> Result<()> {
        for f in &self.forms {
            if f.len() != self.ambient_dim + 1 {
                return Err(Error::FormLength {
                    expected: self.ambient_dim + 1,
                    found: f.len(),
                });
            }
        }
        Ok(())
    }
}

/// Rational serde helpers for single values.
pub(crate) mod rational_string {
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_parse_in_both_forms() {
        assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("4").unwrap(), rational(4));
        assert!(parse_rational("3/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn forms_are_scaled_canonically() {
        let a = LinearForm::from_integers(&[0, 2, 0, -4]).unwrap();
        let b = LinearForm::parse(&["0", "1/3", "0", "-2/3"]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coefficients()[1], rational(1));
        assert_eq!(LinearForm::from_integers(&[0, 0]), Err(Error::ZeroVector));
    }

    #[test]
    fn points_and_charts() {
        let p = ProjectivePoint::from_integers(&[2, 0, 0, 1]).unwrap();
        assert_eq!(p.coordinates()[0], rational(1));
        assert_eq!(p.affine(3).unwrap(), vec![rational(2), rational(0), rational(0)]);
        assert_eq!(p.affine(1), None);
        let q = ProjectivePoint::from_affine(&[rational(2), rational(0), rational(0)], 3).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn forms_file_round_trip() {
        let text = r#"{"ambient_dim":3,"forms":[["1","0","0","-1"],["0","1","0","-2"]]}"#;
        let f: FormsFile = serde_json::from_str(text).unwrap();
        f.validate().unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), text);
        let bad: FormsFile = serde_json::from_str(r#"{"ambient_dim":2,"forms":[["1","0"]]}"#).unwrap();
        assert!(bad.validate().is_err());
        assert!(serde_json::from_str::<FormsFile>(r#"{"ambient_dim":1,"forms":[["1","x"]]}"#).is_err());
    }
}
