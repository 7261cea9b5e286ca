//! Named examples shipped with the crate: an ideal together with the
//! specialization that turns it into a point configuration.

use serde::{Deserialize, Serialize};

use crate::chung_yao::{chung_yao_ideal, generic_forms};
use crate::error::{Error, Result};
use crate::geometry::{specialize, FormsFile, LinearForm, PointConfiguration, SpecializationMap};
use crate::ideal::SquarefreeMonomialIdeal;

pub const FIXTURE_NAMES: [&str; 3] = ["cy-4-lines", "berzolari-radon-10", "one-lattice-8"];

/// An ideal, a specialization `y_i ↦ forms[i]`, the chart to read points
/// in and the GC degree `n`.
///
/// Vertices are stored 0-based; `label_offset` is added when printing
/// labels in the source numbering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub name: String,
    pub ideal: SquarefreeMonomialIdeal,
    pub forms: FormsFile,
    pub chart: usize,
    pub n: usize,
    #[serde(default)]
    pub label_offset: usize,
}

impl Bundle {
    pub fn specialization_map(&self) -> Result<SpecializationMap> {
        self.forms.validate()?;
        SpecializationMap::new(self.forms.ambient_dim, self.forms.forms.clone())
    }

    pub fn configuration(&self) -> Result<PointConfiguration> {
        specialize(&self.ideal, &self.specialization_map()?, self.chart)
    }

    /// A vertex as it is numbered in the source.
    pub fn label(&self, vertex: usize) -> usize {
        vertex + self.label_offset
    }
}

pub fn fixture(name: &str) -> Result<Bundle> {
    match name {
        "cy-4-lines" => Ok(cy_four_lines()),
        "berzolari-radon-10" => Ok(berzolari_radon()),
        "one-lattice-8" => one_lattice(),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

fn forms(rows: &[&[i64]]) -> Vec<LinearForm> {
    rows.iter()
        .map(|r| LinearForm::from_integers(r).expect("nonzero fixture form"))
        .collect()
}

/// Four lines in the plane: `x = 0`, `y = 0`, `x + y = 1`, `x + 3y = 6`.
pub fn cy_four_lines() -> Bundle {
    Bundle {
        name: "cy-4-lines".into(),
        ideal: chung_yao_ideal(2, 2).expect("valid parameters"),
        forms: FormsFile {
            ambient_dim: 2,
            forms: forms(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, -1], &[1, 3, -6]]),
        },
        chart: 2,
        n: 2,
        label_offset: 0,
    }
}

/// Ten points of the tetrahedron `x, y, z >= 0`, `x + y + z <= 2`, cut out
/// by the coordinate planes and the planes `x_i = x_3`, `x_i = 2 x_3`.
pub fn berzolari_radon() -> Bundle {
    let generators: [&[usize]; 10] = [
        &[2, 6, 7],
        &[1, 2, 6],
        &[0, 2, 6],
        &[1, 2, 5],
        &[0, 4, 9],
        &[0, 2, 4],
        &[1, 5, 8],
        &[0, 1, 5],
        &[0, 1, 4],
        &[0, 1, 2],
    ];
    Bundle {
        name: "berzolari-radon-10".into(),
        ideal: SquarefreeMonomialIdeal::from_vertex_lists(10, &generators).expect("valid fixture"),
        forms: FormsFile {
            ambient_dim: 3,
            forms: forms(&[
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[1, 0, 0, -1],
                &[0, 1, 0, -1],
                &[0, 0, 1, -1],
                &[0, 0, 1, -2],
                &[0, 1, 0, -2],
                &[1, 0, 0, -2],
            ]),
        },
        chart: 3,
        n: 2,
        label_offset: 0,
    }
}

/// A Bi-CM ideal on eight variables, labelled from 1 in the source, whose
/// specialization by generic planes is a `GC_{3,2}` set that is not a
/// natural lattice.
pub fn one_lattice() -> Result<Bundle> {
    let labels: [[usize; 3]; 10] = [
        [1, 5, 6],
        [2, 6, 7],
        [3, 7, 8],
        [4, 5, 8],
        [1, 5, 7],
        [2, 6, 8],
        [5, 6, 7],
        [5, 6, 8],
        [5, 7, 8],
        [6, 7, 8],
    ];
    let generators: Vec<Vec<usize>> = labels
        .iter()
        .map(|g| g.iter().map(|&v| v - 1).collect())
        .collect();
    let slices: Vec<&[usize]> = generators.iter().map(Vec::as_slice).collect();
    Ok(Bundle {
        name: "one-lattice-8".into(),
        ideal: SquarefreeMonomialIdeal::from_vertex_lists(8, &slices)?,
        forms: FormsFile {
            ambient_dim: 3,
            forms: generic_forms(3, 8, 1)?,
        },
        chart: 3,
        n: 2,
        label_offset: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_specializes() {
        for name in FIXTURE_NAMES {
            let b = fixture(name).unwrap();
            let x = b.configuration().unwrap();
            assert_eq!(x.len(), b.ideal.primary_decomposition().unwrap().len(), "{name}");
        }
        assert_eq!(fixture("nope"), Err(Error::UnknownFixture("nope".into())));
    }

    #[test]
    fn bundle_json_round_trip() {
        for name in FIXTURE_NAMES {
            let b = fixture(name).unwrap();
            let text = serde_json::to_string(&b).unwrap();
            assert_eq!(serde_json::from_str::<Bundle>(&text).unwrap(), b);
        }
    }

    #[test]
    fn labels() {
        let b = one_lattice().unwrap();
        assert_eq!(b.label(4), 5);
        assert_eq!(cy_four_lines().label(3), 3);
    }
}
