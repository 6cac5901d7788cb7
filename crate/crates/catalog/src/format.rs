//! JSON interchange: rank-3 structure tables with exact scalars written as integers or `"a/b"`.

use std::fmt;

use exactla::{Field, Scalar};
use hopfcore::{FiniteHopfAlgebra, HopfTables};
use serde::{Deserialize, Serialize};

use crate::error::CatalogError;

/// A scalar on the wire: a JSON integer or a string `"a"`, `"-a"`, `"a/b"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    pub fn from_scalar(s: &Scalar) -> Num {
        s.as_i64().map(Num::Int).unwrap_or_else(|| Num::Text(s.to_text()))
    }

    pub fn to_scalar(&self, field: Field) -> Result<Scalar, CatalogError> {
        Ok(match self {
            Num::Int(v) => field.from_i64(*v),
            Num::Text(t) => field.parse_scalar(t)?,
        })
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Int(v) => write!(f, "{v}"),
            Num::Text(t) => write!(f, "{t}"),
        }
    }
}

/// `mult[i][j][k]`: coefficient of `e_k` in `eᵢeⱼ`; `comult[i][j][k]`: coefficient of `eⱼ⊗e_k`
/// in `Δeᵢ`; `antipode[i][j]`: coefficient of `eᵢ` in `S(eⱼ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfFile {
    pub dim: usize,
    pub field: String,
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Vec<Num>>>,
    pub comult: Vec<Vec<Vec<Num>>>,
    pub unit: Vec<Num>,
    pub counit: Vec<Num>,
    pub antipode: Vec<Vec<Num>>,
}

fn nums(v: &[Scalar]) -> Vec<Num> {
    v.iter().map(Num::from_scalar).collect()
}

fn scalars(v: &[Num], field: Field) -> Result<Vec<Scalar>, CatalogError> {
    v.iter().map(|x| x.to_scalar(field)).collect()
}

impl HopfFile {
    pub fn from_tables(t: &HopfTables) -> HopfFile {
        let cube = |c: Vec<Vec<Vec<Scalar>>>| c.iter().map(|a| a.iter().map(|b| nums(b)).collect()).collect();
        HopfFile {
            dim: t.dim(),
            field: t.field.descriptor(),
            labels: t.labels.clone(),
            mult: cube(t.mult_table()),
            comult: cube(t.comult_table()),
            unit: nums(&t.unit_vector()),
            counit: nums(&t.counit_vector()),
            antipode: t.antipode_table().iter().map(|r| nums(r)).collect(),
        }
    }

    pub fn to_tables(&self) -> Result<HopfTables, CatalogError> {
        let field = Field::parse(&self.field)?;
        if self.labels.len() != self.dim {
            return Err(CatalogError::Format(format!("dim {} but {} labels", self.dim, self.labels.len())));
        }
        let cube = |c: &Vec<Vec<Vec<Num>>>| -> Result<Vec<Vec<Vec<Scalar>>>, CatalogError> {
            c.iter().map(|a| a.iter().map(|b| scalars(b, field)).collect()).collect()
        };
        let antipode = self.antipode.iter().map(|r| scalars(r, field)).collect::<Result<Vec<_>, _>>()?;
        Ok(HopfTables::from_tables(
            field,
            self.labels.clone(),
            &cube(&self.mult)?,
            &scalars(&self.unit, field)?,
            &cube(&self.comult)?,
            &scalars(&self.counit, field)?,
            &antipode,
        )?)
    }
}

pub fn save(h: &FiniteHopfAlgebra) -> Vec<u8> {
    save_tables(h.tables())
}

pub fn save_tables(t: &HopfTables) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(&HopfFile::from_tables(t)).expect("tables serialize");
    out.push(b'\n');
    out
}

/// Parse and re-verify every axiom.
pub fn load(bytes: &[u8]) -> Result<FiniteHopfAlgebra, CatalogError> {
    let file: HopfFile = serde_json::from_slice(bytes)?;
    Ok(FiniteHopfAlgebra::new(file.to_tables()?)?)
}
