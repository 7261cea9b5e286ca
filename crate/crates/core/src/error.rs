use thiserror::Error;

use crate::combinatorics::Face;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} out of range for {vertex_count} vertices")]
    VertexOutOfRange { index: usize, vertex_count: usize },

    #[error("vertex count {0} unsupported (faces are 64-bit masks, 1..=64 vertices)")]
    VertexCount(usize),

    #[error("face {0:?} is not strictly increasing")]
    UnsortedFace(Vec<usize>),

    #[error("empty facet list; use the void or irrelevant complex constructor explicitly")]
    EmptyFacetList,

    #[error("operation undefined on the void complex")]
    VoidComplex,

    #[error("face {0} is not in the complex")]
    FaceNotInComplex(Face),

    #[error("skeleton parameters out of range: need 1 <= j <= i <= 64, got i={i}, j={j}")]
    SkeletonBounds { i: usize, j: usize },

    #[error("the unit ideal (empty generator) is not a squarefree monomial ideal")]
    UnitIdeal,

    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,

    #[error("mixed decomposition; degree undefined here")]
    NonPure,

    #[error("generators have mixed degrees {0:?}; GC parameters need an equigenerated ideal")]
    MixedGeneratorDegrees(Vec<usize>),

    #[error("degree mismatch: ideal has degree {degree} but C(n+d, d) = {expected} for d={d}, n={n}")]
    DegreeMismatch {
        d: usize,
        n: usize,
        degree: usize,
        expected: u128,
    },

    #[error("{0} is not a primary component of the ideal")]
    NotAComponent(Face),

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("linear form has {found} coefficients, expected {expected}")]
    FormLength { expected: usize, found: usize },

    #[error("zero vector is not a linear form or projective point")]
    ZeroVector,

    #[error("specialization forms are not pairwise distinct (forms {0} and {1} agree up to scaling)")]
    DuplicateForms(usize, usize),

    #[error("specialization forms span only {rank} of {expected} dimensions")]
    FormsDoNotSpan { rank: usize, expected: usize },

    #[error("specialization has {forms} forms for {variables} variables")]
    FormCountMismatch { forms: usize, variables: usize },

    #[error("ambient dimension {ambient} does not match codimension {codim}")]
    AmbientMismatch { ambient: usize, codim: usize },

    #[error("non-generic: component {0} does not cut a point")]
    ComponentNotAPoint(Face),

    #[error("non-generic: points collide (components {0} and {1})")]
    PointsCollide(Face, Face),

    #[error("point {index} lies at infinity for chart x_{chart}")]
    PointAtInfinity { index: usize, chart: usize },

    #[error("chart index {chart} out of range for ambient dimension {ambient}")]
    ChartOutOfRange { chart: usize, ambient: usize },

    #[error("configuration has {found} points, expected C(d+n, d) = {expected}")]
    PointCount { expected: u128, found: usize },

    #[error("point {point} has only {found} independent vanishing pool forms, need {needed}")]
    TooFewVanishingForms {
        point: usize,
        found: usize,
        needed: usize,
    },

    #[error("certificate map does not cover point {0}")]
    MissingCertificate(usize),

    #[error("product {0:?} does not vanish on the whole configuration")]
    ProductDoesNotVanish(Vec<usize>),

    #[error("generator span has dimension {found}, expected C(n+d, n+1) = {expected}")]
    GeneratorSpan { found: usize, expected: u128 },

    #[error("generic form search exhausted {0} retries")]
    RetriesExhausted(usize),

    #[error("parameters out of range: {0}")]
    Parameters(String),

    #[error("matrix has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("vanishing minor on rows {0:?}")]
    VanishingMinor(Vec<usize>),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("input: {0}")]
    Input(String),
}

impl Error {
    /// Stable machine-readable tag used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::VertexCount(_) => "vertex_count",
            Error::UnsortedFace(_) => "unsorted_face",
            Error::EmptyFacetList => "empty_facet_list",
            Error::VoidComplex => "void_complex",
            Error::FaceNotInComplex(_) => "face_not_in_complex",
            Error::SkeletonBounds { .. } => "skeleton_bounds",
            Error::UnitIdeal => "unit_ideal",
            Error::ZeroIdeal => "zero_ideal",
            Error::NonPure => "non_pure",
            Error::MixedGeneratorDegrees(_) => "mixed_generator_degrees",
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::NotAComponent(_) => "not_a_component",
            Error::InvalidRational(_) => "invalid_rational",
            Error::FormLength { .. } => "form_length",
            Error::ZeroVector => "zero_vector",
            Error::DuplicateForms(..) => "duplicate_forms",
            Error::FormsDoNotSpan { .. } => "forms_do_not_span",
            Error::FormCountMismatch { .. } => "form_count_mismatch",
            Error::AmbientMismatch { .. } => "ambient_mismatch",
            Error::ComponentNotAPoint(_) => "component_not_a_point",
            Error::PointsCollide(..) => "points_collide",
            Error::PointAtInfinity { .. } => "point_at_infinity",
            Error::ChartOutOfRange { .. } => "chart_out_of_range",
            Error::PointCount { .. } => "point_count",
            Error::TooFewVanishingForms { .. } => "too_few_vanishing_forms",
            Error::MissingCertificate(_) => "missing_certificate",
            Error::ProductDoesNotVanish(_) => "product_does_not_vanish",
            Error::GeneratorSpan { .. } => "generator_span",
            Error::RetriesExhausted(_) => "retries_exhausted",
            Error::Parameters(_) => "parameters",
            Error::MatrixShape { .. } => "matrix_shape",
            Error::VanishingMinor(_) => "vanishing_minor",
            Error::UnknownFixture(_) => "unknown_fixture",
            Error::Input(_) => "input",
        }
    }
}
