//! Text, JSON and LaTeX renderings of push-forward results.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::SparsePoly;
use crate::charclasses::{CharPoly, SchurExpansion};
use crate::error::{Error, Result};
use crate::gysin::PushforwardResult;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(Error::Contract(format!(
                "unknown format {other:?} (text, json, latex)"
            ))),
        }
    }
}

/// Which representation of a class to print.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputBasis {
    Chern,
    #[default]
    Segre,
    Schur,
    All,
}

impl FromStr for OutputBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "chern" => Ok(OutputBasis::Chern),
            "segre" => Ok(OutputBasis::Segre),
            "schur" => Ok(OutputBasis::Schur),
            "all" => Ok(OutputBasis::All),
            other => Err(Error::Contract(format!(
                "unknown basis {other:?} (chern, segre, schur, all)"
            ))),
        }
    }
}

impl fmt::Display for OutputBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputBasis::Chern => "chern",
            OutputBasis::Segre => "segre",
            OutputBasis::Schur => "schur",
            OutputBasis::All => "all",
        })
    }
}

#[derive(Serialize)]
pub struct TermJson {
    pub monomial: String,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct PolyJson {
    pub polynomial: String,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn new(p: &SparsePoly) -> Self {
        PolyJson {
            polynomial: p.to_string(),
            terms: p
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| TermJson {
                    monomial: p.format_monomial(m),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SchurTermJson {
    pub partition: Vec<u32>,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct SchurJson {
    pub terms: Vec<SchurTermJson>,
    pub positive: bool,
}

impl SchurJson {
    pub fn new(e: &SchurExpansion) -> Self {
        SchurJson {
            terms: e
                .terms()
                .iter()
                .map(|(p, c)| SchurTermJson {
                    partition: p.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
            positive: e.is_positive(),
        }
    }
}

#[derive(Serialize)]
struct SingleJson<'a, T: Serialize> {
    schema: u32,
    rank: u32,
    degree: u32,
    basis: &'a str,
    #[serde(flatten)]
    body: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<&'a str>,
}

#[derive(Serialize)]
struct AllJson<'a> {
    schema: u32,
    rank: u32,
    degree: u32,
    segre: PolyJson,
    chern: PolyJson,
    schur: SchurJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<&'a str>,
}

/// A class in all three bases, optionally tagged with the formula that
/// produced it.
pub struct ClassView<'a> {
    pub rank: u32,
    pub degree: u32,
    pub segre: &'a CharPoly,
    pub chern: &'a CharPoly,
    pub schur: &'a SchurExpansion,
    pub provenance: Option<&'a str>,
}

impl<'a> From<&'a PushforwardResult> for ClassView<'a> {
    fn from(r: &'a PushforwardResult) -> Self {
        ClassView {
            rank: r.rank,
            degree: r.degree(),
            segre: &r.segre,
            chern: &r.chern,
            schur: &r.schur,
            provenance: Some(r.provenance.as_str()),
        }
    }
}

/// Renders a class; the output ends with a newline.
pub fn render_class(view: &ClassView<'_>, basis: OutputBasis, format: Format) -> String {
    let mut out = match format {
        Format::Text => match basis {
            OutputBasis::Chern => view.chern.to_string(),
            OutputBasis::Segre => view.segre.to_string(),
            OutputBasis::Schur => view.schur.to_string(),
            OutputBasis::All => format!(
                "segre: {}\nchern: {}\nschur: {}\npositive: {}",
                view.segre,
                view.chern,
                view.schur,
                view.schur.is_positive()
            ),
        },
        Format::Latex => match basis {
            OutputBasis::Chern => view.chern.poly().to_latex(),
            OutputBasis::Segre => view.segre.poly().to_latex(),
            OutputBasis::Schur => view.schur.to_latex(),
            OutputBasis::All => format!(
                "{} = {} = {}",
                view.segre.poly().to_latex(),
                view.chern.poly().to_latex(),
                view.schur.to_latex()
            ),
        },
        Format::Json => {
            let single = |name: &'static str, body: PolyJson| {
                serde_json::to_string(&SingleJson {
                    schema: SCHEMA,
                    rank: view.rank,
                    degree: view.degree,
                    basis: name,
                    body,
                    provenance: view.provenance,
                })
            };
            match basis {
                OutputBasis::Chern => single("chern", PolyJson::new(view.chern.poly())),
                OutputBasis::Segre => single("segre", PolyJson::new(view.segre.poly())),
                OutputBasis::Schur => serde_json::to_string(&SingleJson {
                    schema: SCHEMA,
                    rank: view.rank,
                    degree: view.degree,
                    basis: "schur",
                    body: SchurJson::new(view.schur),
                    provenance: view.provenance,
                }),
                OutputBasis::All => serde_json::to_string(&AllJson {
                    schema: SCHEMA,
                    rank: view.rank,
                    degree: view.degree,
                    segre: PolyJson::new(view.segre.poly()),
                    chern: PolyJson::new(view.chern.poly()),
                    schur: SchurJson::new(view.schur),
                    provenance: view.provenance,
                }),
            }
            .expect("plain data serializes")
        }
    };
    out.push('\n');
    out
}
