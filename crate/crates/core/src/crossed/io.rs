//! JSON form of a free crossed complex.
//!
//! ```json
//! {
//!   "name": "F(C3)",
//!   "maxdim": 4,
//!   "group": {"kind": "cyclic", "modulus": 3},
//!   "dim1": [{"gen": "x1", "phi": "t"}],
//!   "dim2": [{"gen": "x2", "boundary": "x1 x1 x1"}],
//!   "dim3": [{"gen": "x3", "boundary": "x2 . x2^-1^{x1}"}],
//!   "higher": [{"dim": 4, "gens": [{"gen": "x4", "boundary": "x3 * (1 1 + 1 t + 1 t^2)"}]}]
//! }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::complex::CrossedComplex;
use super::dim2::Dim2Elem;
use super::module::ModuleElem;
use crate::error::{Error, Result};
use crate::groups::{Group, GroupDesc};
use crate::words::Gen;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub name: String,
    pub maxdim: usize,
    pub group: GroupDesc,
    pub dim1: Vec<Dim1Entry>,
    pub dim2: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim3: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub higher: Vec<Stratum>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tensor_factors: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dim1Entry {
    pub gen: String,
    pub phi: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub gen: String,
    pub boundary: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub dim: usize,
    pub gens: Vec<Entry>,
}

impl CrossedComplex {
    pub fn to_doc(&self) -> ComplexDoc {
        let g = self.group();
        let s = self.strata();
        let entry = |x: &Gen, b: String| Entry {
            gen: x.to_string(),
            boundary: b,
        };
        ComplexDoc {
            name: self.name().to_string(),
            maxdim: self.maxdim(),
            group: g.descriptor(),
            dim1: s
                .dim1()
                .map(|(x, e)| Dim1Entry {
                    gen: x.to_string(),
                    phi: g.format_elem(e),
                })
                .collect(),
            dim2: s.dim2().map(|(x, w)| entry(x, w.to_string())).collect(),
            dim3: (self.maxdim() >= 3)
                .then(|| s.dim3().map(|(x, c)| entry(x, c.to_string())).collect()),
            higher: (4..=self.maxdim())
                .map(|n| Stratum {
                    dim: n,
                    gens: s.module(n).map(|(x, m)| entry(x, m.format(g))).collect(),
                })
                .collect(),
            tensor_factors: self
                .tensor_factors()
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        }
    }

    pub fn from_doc(doc: &ComplexDoc) -> Result<Self> {
        let group = Group::from_descriptor(&doc.group)?;
        let dim1 = doc
            .dim1
            .iter()
            .map(|e| Ok((Gen::new(&e.gen), group.parse_elem(&e.phi)?)))
            .collect::<Result<Vec<_>>>()?;
        let dim2 = doc
            .dim2
            .iter()
            .map(|e| Ok((Gen::new(&e.gen), e.boundary.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        let mut cx = CrossedComplex::new(doc.name.clone(), group.clone(), dim1, dim2)?;
        if doc.maxdim < 2 {
            return Err(Error::Dimension("maxdim must be at least 2".into()));
        }
        if doc.maxdim >= 3 {
            let d3 = doc
                .dim3
                .as_ref()
                .ok_or_else(|| Error::InvalidComplex("missing dim3".into()))?;
            let gens = d3
                .iter()
                .map(|e| Ok((Gen::new(&e.gen), e.boundary.parse::<Dim2Elem>()?)))
                .collect::<Result<Vec<_>>>()?;
            cx.push_dim3(gens)?;
        } else if doc.dim3.is_some() {
            return Err(Error::InvalidComplex("dim3 present but maxdim is 2".into()));
        }
        let mut higher: Vec<&Stratum> = doc.higher.iter().collect();
        higher.sort_by_key(|s| s.dim);
        for (k, st) in higher.iter().enumerate() {
            if st.dim != 4 + k {
                return Err(Error::InvalidComplex(format!("unexpected stratum {}", st.dim)));
            }
            let gens = st
                .gens
                .iter()
                .map(|e| Ok((Gen::new(&e.gen), ModuleElem::parse(&e.boundary, &group)?)))
                .collect::<Result<Vec<_>>>()?;
            cx.push_dim(gens)?;
        }
        if cx.maxdim() != doc.maxdim {
            return Err(Error::InvalidComplex(format!(
                "maxdim {} but strata reach {}",
                doc.maxdim,
                cx.maxdim()
            )));
        }
        cx.set_tensor_factors(
            doc.tensor_factors
                .iter()
                .map(|(k, v)| (Gen::new(k), v.clone()))
                .collect(),
        );
        Ok(cx)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("complex documents serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: ComplexDoc =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_doc(&doc)
    }
}
