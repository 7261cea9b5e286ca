//! Faces, simplicial complexes and their face counts.
//!
//! A [`Face`] is a set of vertex indices packed into a 64-bit mask, so every
//! complex lives on at most 64 vertices. A [`SimplicialComplex`] stores only
//! its inclusion-maximal faces; membership of any other face is decided by
//! containment in some facet.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// A finite set of vertices `{0, .., 63}`.
///
/// Ordering is lexicographic on the increasing vertex sequence, so
/// `{0,3} < {1,2}` and a prefix sorts first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    /// Builds a face from indices in any order; duplicates collapse.
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    vertex_count: MAX_VERTICES,
                });
            }
            mask |= 1 << v;
        }
        Ok(Face(mask))
    }

    /// Parses the wire form: a strictly increasing list of indices.
    pub fn from_sorted(vertices: &[usize]) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedFace(vertices.to_vec()));
        }
        Face::new(vertices.iter().copied())
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        Face(1 << v)
    }

    /// The full vertex set `{0, .., m-1}`.
    pub fn full(m: usize) -> Self {
        if m >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << m) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|σ| - 1`; the empty face has dimension -1.
    pub fn dimension(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Complement inside `{0, .., m-1}`.
    pub fn complement(self, m: usize) -> Face {
        Face::full(m).difference(self)
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Every subset of this face, including the empty face and itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Face(cur))
        })
    }
}

/// Iterator over the vertices of a face in increasing order.
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both sequences agree below the lowest differing vertex `v`. The face
        // holding `v` is smaller unless the other one has run out of vertices.
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        match (self.0 & low != 0, other.0 & above != 0, self.0 & above != 0) {
            (true, true, _) => Ordering::Less,
            (true, false, _) => Ordering::Greater,
            (false, _, true) => Ordering::Greater,
            (false, _, false) => Ordering::Less,
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Face::from_sorted(&v).map_err(serde::de::Error::custom)
    }
}

/// Keeps only inclusion-maximal members, sorted and deduplicated.
pub(crate) fn maximal_members(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

/// Keeps only inclusion-minimal members, sorted and deduplicated.
pub(crate) fn minimal_members(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by_key(|f| f.len());
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| k.is_subset(f)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

/// Face counts `(f_{-1}, f_0, .., f_dim)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        FVector { counts }
    }

    /// `counts[j]` is `f_{j-1}`, i.e. the coefficient of `t^j` in
    /// `F(t) = sum_j f_{j-1} t^j`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `f_i`, reading absent entries as zero.
    pub fn f(&self, i: isize) -> u64 {
        if i < -1 {
            return 0;
        }
        self.counts.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> isize {
        self.counts.len() as isize - 2
    }

    /// `sum_{i >= 0} (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i128 {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| if j % 2 == 1 { c as i128 } else { -(c as i128) })
            .sum()
    }
}

/// A simplicial complex on `vertex_count` vertices, stored by its facets.
///
/// With no facets at all this is the void complex; with the single facet `{}`
/// it is the irrelevant complex `{∅}`. The two are distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ComplexFile", into = "ComplexFile")]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Face>,
}

/// Wire format `{"vertices": m, "facets": [[0,1,2], ...]}`.
///
/// An empty facet list is only accepted together with `"void": true`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: usize,
    pub facets: Vec<Face>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub void: bool,
}

impl TryFrom<ComplexFile> for SimplicialComplex {
    type Error = Error;

    fn try_from(file: ComplexFile) -> Result<Self> {
        if file.void {
            if !file.facets.is_empty() {
                return Err(Error::Input("void complex cannot list facets".into()));
            }
            return SimplicialComplex::void(file.vertices);
        }
        SimplicialComplex::from_facets(file.vertices, file.facets)
    }
}

impl From<SimplicialComplex> for ComplexFile {
    fn from(c: SimplicialComplex) -> Self {
        ComplexFile {
            vertices: c.vertex_count,
            void: c.facets.is_empty(),
            facets: c.facets,
        }
    }
}

fn check_vertex_count(m: usize) -> Result<()> {
    if m == 0 || m > MAX_VERTICES {
        return Err(Error::VertexCount(m));
    }
    Ok(())
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`; dominated and duplicate
    /// faces are dropped.
    pub fn from_facets<I: IntoIterator<Item = Face>>(vertex_count: usize, faces: I) -> Result<Self> {
        check_vertex_count(vertex_count)?;
        let faces: Vec<Face> = faces.into_iter().collect();
        if faces.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let limit = Face::full(vertex_count);
        for f in &faces {
            if !f.is_subset(limit) {
                return Err(Error::VertexOutOfRange {
                    index: f.max_vertex().unwrap_or(0),
                    vertex_count,
                });
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            facets: maximal_members(faces),
        })
    }

    /// Convenience constructor from plain index lists.
    pub fn from_vertex_lists(vertex_count: usize, faces: &[&[usize]]) -> Result<Self> {
        let faces = faces
            .iter()
            .map(|f| Face::new(f.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(vertex_count, faces)
    }

    /// The complex with no faces, not even the empty one.
    pub fn void(vertex_count: usize) -> Result<Self> {
        check_vertex_count(vertex_count)?;
        Ok(SimplicialComplex {
            vertex_count,
            facets: Vec::new(),
        })
    }

    /// The complex `{∅}`.
    pub fn irrelevant(vertex_count: usize) -> Result<Self> {
        Self::from_facets(vertex_count, [Face::EMPTY])
    }

    /// The full simplex on all vertices.
    pub fn simplex(vertex_count: usize) -> Result<Self> {
        check_vertex_count(vertex_count)?;
        Self::from_facets(vertex_count, [Face::full(vertex_count)])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.dimension()).max()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All faces grouped by dimension; entry `k` holds the `(k-1)`-faces
    /// sorted by mask.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Face>> {
        let Some(dim) = self.dimension() else {
            return Vec::new();
        };
        let mut seen: Vec<HashSet<u64>> = vec![HashSet::new(); (dim + 2) as usize];
        for facet in &self.facets {
            for s in facet.subsets() {
                seen[s.len()].insert(s.mask());
            }
        }
        seen.into_iter()
            .map(|set| {
                let mut v: Vec<u64> = set.into_iter().collect();
                v.sort_unstable();
                v.into_iter().map(Face::from_mask).collect()
            })
            .collect()
    }

    /// All faces, sorted by mask.
    pub fn faces(&self) -> Vec<Face> {
        let mut all: Vec<Face> = self.faces_by_dimension().into_iter().flatten().collect();
        all.sort_by_key(|f| f.mask());
        all
    }

    /// The void complex has the empty f-vector.
    pub fn f_vector(&self) -> FVector {
        FVector::new(
            self.faces_by_dimension()
                .iter()
                .map(|layer| layer.len() as u64)
                .collect(),
        )
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Inclusion-minimal vertex sets that are not faces, in lexicographic
    /// order. For the void complex this is `[∅]`.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Face::EMPTY];
        }
        let faces: HashSet<u64> = self.faces().into_iter().map(Face::mask).collect();
        let mut found: HashSet<u64> = HashSet::new();
        for &sigma in &faces {
            let sigma = Face::from_mask(sigma);
            for v in sigma.complement(self.vertex_count).vertices() {
                let candidate = sigma.with(v);
                if faces.contains(&candidate.mask()) || found.contains(&candidate.mask()) {
                    continue;
                }
                if candidate
                    .vertices()
                    .all(|u| faces.contains(&candidate.without(u).mask()))
                {
                    found.insert(candidate.mask());
                }
            }
        }
        let mut out: Vec<Face> = found.into_iter().map(Face::from_mask).collect();
        out.sort();
        out
    }

    /// The Alexander dual `{V \ τ : τ ∉ Δ}` on the same vertex set.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let m = self.vertex_count;
        let mut facets: Vec<Face> = self
            .minimal_nonfaces()
            .into_iter()
            .map(|n| n.complement(m))
            .collect();
        facets.sort();
        SimplicialComplex {
            vertex_count: m,
            facets,
        }
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`, on the same index space.
    pub fn link(&self, sigma: Face) -> Result<SimplicialComplex> {
        let star: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        if star.is_empty() {
            return Err(Error::FaceNotInComplex(sigma));
        }
        Ok(SimplicialComplex {
            vertex_count: self.vertex_count,
            facets: maximal_members(star),
        })
    }
}

/// `Δ(i, j)`: every subset of at most `j` of `i` vertices.
pub fn skeleton(i: usize, j: usize) -> Result<SimplicialComplex> {
    if j < 1 || j > i || i > MAX_VERTICES {
        return Err(Error::SkeletonBounds { i, j });
    }
    let facets = itertools::Itertools::combinations(0..i, j).map(|c| {
        Face::new(c).expect("indices below 64")
    });
    SimplicialComplex::from_facets(i, facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[usize]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn face_order_is_lexicographic() {
        assert!(face(&[0, 3]) < face(&[1, 2]));
        assert!(face(&[0, 1]) < face(&[0, 1, 2]));
        assert!(face(&[0, 1, 2]) < face(&[0, 2]));
        assert!(Face::EMPTY < face(&[0]));
        let mut all: Vec<Face> = Face::full(5).subsets().collect();
        all.sort();
        let mut by_vec: Vec<Vec<usize>> = Face::full(5).subsets().map(Face::to_vec).collect();
        by_vec.sort();
        assert_eq!(all.into_iter().map(Face::to_vec).collect::<Vec<_>>(), by_vec);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        assert_eq!(face(&[1, 4, 6]).subsets().count(), 8);
        assert_eq!(Face::EMPTY.subsets().collect::<Vec<_>>(), vec![Face::EMPTY]);
    }

    #[test]
    fn dominated_faces_are_dropped() {
        let c = SimplicialComplex::from_vertex_lists(4, &[&[0, 1], &[0, 1], &[0]]).unwrap();
        assert_eq!(c.facets(), &[face(&[0, 1])]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            SimplicialComplex::from_vertex_lists(3, &[&[0, 3]]),
            Err(Error::VertexOutOfRange {
                index: 3,
                vertex_count: 3
            })
        );
        assert_eq!(
            SimplicialComplex::from_facets(3, []),
            Err(Error::EmptyFacetList)
        );
        assert_eq!(SimplicialComplex::void(0), Err(Error::VertexCount(0)));
        assert!(Face::from_sorted(&[2, 1]).is_err());
    }

    #[test]
    fn f_vectors() {
        assert_eq!(skeleton(4, 2).unwrap().f_vector().counts(), &[1, 4, 6]);
        assert_eq!(skeleton(3, 3).unwrap().f_vector().counts(), &[1, 3, 3, 1]);
        let point = SimplicialComplex::from_vertex_lists(1, &[&[0]]).unwrap();
        assert_eq!(point.f_vector().counts(), &[1, 1]);
        assert_eq!(SimplicialComplex::irrelevant(3).unwrap().f_vector().counts(), &[1]);
        assert!(SimplicialComplex::void(3).unwrap().f_vector().counts().is_empty());
    }

    #[test]
    fn skeleton_shapes() {
        let s = skeleton(4, 1).unwrap();
        assert_eq!(s.facets().len(), 4);
        assert!(s.facets().iter().all(|f| f.len() == 1));
        assert!(skeleton(3, 4).is_err());
        assert!(skeleton(3, 0).is_err());
    }

    #[test]
    fn skeleton_counts_match_binomials() {
        for i in 1..=9usize {
            for j in 1..=i {
                let s = skeleton(i, j).unwrap();
                let f = s.f_vector();
                for k in 0..j {
                    assert_eq!(f.f(k as isize) as u128, binomial(i as u64, k as u64 + 1));
                }
                let nonfaces = s.minimal_nonfaces();
                assert_eq!(nonfaces.len() as u128, binomial(i as u64, j as u64 + 1));
                assert!(nonfaces.iter().all(|n| n.len() == j + 1));
            }
        }
    }

    #[test]
    fn minimal_nonfaces_of_tetrahedron_edges() {
        let got = skeleton(4, 2).unwrap().minimal_nonfaces();
        let want: Vec<Face> = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
            .iter()
            .map(|v| face(v))
            .collect();
        assert_eq!(got, want);
        assert!(SimplicialComplex::simplex(5).unwrap().minimal_nonfaces().is_empty());
    }

    #[test]
    fn dual_of_edge_skeleton_is_vertices() {
        assert_eq!(skeleton(4, 2).unwrap().alexander_dual(), skeleton(4, 1).unwrap());
    }

    #[test]
    fn dual_of_extreme_complexes() {
        let full = SimplicialComplex::simplex(3).unwrap();
        let void = SimplicialComplex::void(3).unwrap();
        assert_eq!(full.alexander_dual(), void);
        assert_eq!(void.alexander_dual(), full);
        let irr = SimplicialComplex::irrelevant(3).unwrap();
        assert_eq!(irr.alexander_dual(), skeleton(3, 2).unwrap());
    }

    #[test]
    fn links() {
        let s = skeleton(4, 2).unwrap();
        assert_eq!(s.link(Face::EMPTY).unwrap(), s);
        let lk = s.link(face(&[0])).unwrap();
        assert_eq!(lk.facets(), &[face(&[1]), face(&[2]), face(&[3])]);
        let tri = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(tri.link(face(&[0, 1])).unwrap().facets(), &[face(&[2])]);
        assert_eq!(
            s.link(face(&[0, 1, 2])),
            Err(Error::FaceNotInComplex(face(&[0, 1, 2])))
        );
    }

    #[test]
    fn purity() {
        assert!(skeleton(4, 2).unwrap().is_pure());
        let mixed = SimplicialComplex::from_vertex_lists(3, &[&[0, 1], &[2]]).unwrap();
        assert!(!mixed.is_pure());
    }

    #[test]
    fn json_format() {
        let c: SimplicialComplex =
            serde_json::from_str(r#"{"vertices": 4, "facets": [[0,1],[2,3]]}"#).unwrap();
        assert_eq!(c.facets().len(), 2);
        let back = serde_json::to_string(&c).unwrap();
        assert_eq!(back, r#"{"vertices":4,"facets":[[0,1],[2,3]]}"#);
        assert!(serde_json::from_str::<SimplicialComplex>(r#"{"vertices": 4, "facets": []}"#).is_err());
        assert!(serde_json::from_str::<SimplicialComplex>(r#"{"vertices": 4, "facets": [[1,0]]}"#).is_err());
        let void: SimplicialComplex =
            serde_json::from_str(r#"{"vertices": 2, "facets": [], "void": true}"#).unwrap();
        assert!(void.is_void());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }
}
