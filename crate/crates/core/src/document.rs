//! JSON documents: manifolds, kernels, disc data, double-point lists and
//! session files. Words and ring elements are embedded as strings in the
//! text syntax of [`crate::text`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::disc::{ManifoldModel, SrData, SrDisc};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::invariant::Verdict;
use crate::kernel::KernelSpec;
use crate::pairing::{DoublePoint, DoublePointList};
use crate::presets::PresetId;
use crate::text::{parse_ringexpr, parse_word};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum KernelJson {
    Preset { preset: String },
    Generators { generators: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldJson {
    pub group: GroupSpec,
    pub dax_kernel: KernelJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedWordJson {
    pub sign: i64,
    pub word: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscJson {
    #[serde(default)]
    pub double_tubes: Vec<String>,
    #[serde(default)]
    pub sr_discs: Vec<SignedWordJson>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsJson {
    pub points: Vec<SignedWordJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ManifoldRef {
    Preset(String),
    Model(ManifoldJson),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum QueryJson {
    Invariant { disc: String },
    Compare { discs: [String; 2] },
    Reduce { element: String },
    Normalize { disc: String },
    Pairing { points: Vec<SignedWordJson> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionJson {
    pub manifold: ManifoldRef,
    #[serde(default)]
    pub discs: BTreeMap<String, DiscJson>,
    #[serde(default)]
    pub queries: Vec<QueryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub outcome: crate::invariant::Outcome,
    pub certificate: String,
    pub rule: crate::invariant::Rule,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            outcome: v.outcome,
            certificate: v.certificate.clone(),
            rule: v.rule,
        }
    }
}

/// Parse JSON text, mapping syntax errors to a byte offset.
pub fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let offset = line_col_to_offset(text, e.line(), e.column());
        match e.classify() {
            serde_json::error::Category::Data => Error::validation("document", e.to_string()),
            _ => Error::parse(offset, e.to_string()),
        }
    })
}

fn line_col_to_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let line_start: usize = text
        .split_inclusive('\n')
        .take(line - 1)
        .map(str::len)
        .sum();
    (line_start + column.saturating_sub(1)).min(text.len())
}

fn sign_from_json(sign: i64, path: &str) -> Result<i8> {
    match sign {
        1 => Ok(1),
        -1 => Ok(-1),
        _ => Err(Error::validation(
            path,
            format!("sign must be 1 or -1, got {sign}"),
        )),
    }
}

fn word_at(text: &str, spec: &GroupSpec, path: &str) -> Result<GroupElement> {
    parse_word(text, spec).map_err(|e| e.within(path))
}

impl KernelJson {
    pub fn to_kernel(&self, spec: &GroupSpec) -> Result<KernelSpec> {
        match self {
            KernelJson::Preset { preset } => match preset.as_str() {
                "trivial" => Ok(KernelSpec::Trivial),
                "inverse_pairs" => Ok(KernelSpec::InversePairs),
                other => Err(Error::validation(
                    "dax_kernel.preset",
                    format!("unknown kernel preset {other:?}"),
                )),
            },
            KernelJson::Generators { generators } => {
                let gens = generators
                    .iter()
                    .enumerate()
                    .map(|(i, g)| {
                        parse_ringexpr(g, spec)
                            .map_err(|e| e.within(&format!("dax_kernel.generators[{i}]")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let k = KernelSpec::ExplicitList(gens);
                k.check(spec)?;
                Ok(k)
            }
        }
    }

    pub fn from_kernel(k: &KernelSpec, spec: &GroupSpec) -> Self {
        match k {
            KernelSpec::Trivial => KernelJson::Preset {
                preset: "trivial".into(),
            },
            KernelSpec::InversePairs => KernelJson::Preset {
                preset: "inverse_pairs".into(),
            },
            KernelSpec::ExplicitList(gens) => KernelJson::Generators {
                generators: gens
                    .iter()
                    .map(|g| spec.display_ring(g).to_string())
                    .collect(),
            },
        }
    }
}

impl ManifoldJson {
    pub fn to_model(&self) -> Result<ManifoldModel> {
        self.group.validate()?;
        let kernel = self.dax_kernel.to_kernel(&self.group)?;
        ManifoldModel::new(
            self.group.clone(),
            kernel,
            self.label.clone().unwrap_or_else(|| "custom".to_string()),
        )
    }

    pub fn from_model(m: &ManifoldModel) -> Self {
        ManifoldJson {
            group: m.group.clone(),
            dax_kernel: KernelJson::from_kernel(&m.kernel, &m.group),
            label: Some(m.label.clone()),
        }
    }
}

impl ManifoldRef {
    pub fn to_model(&self) -> Result<ManifoldModel> {
        match self {
            ManifoldRef::Preset(id) => Ok(id.parse::<PresetId>()?.instantiate()),
            ManifoldRef::Model(m) => m.to_model(),
        }
    }
}

impl DiscJson {
    /// Parse the words; signs must be ±1. Data constraints are left to
    /// [`crate::disc::validate`].
    pub fn to_data(&self, spec: &GroupSpec) -> Result<SrData> {
        let double_tubes = self
            .double_tubes
            .iter()
            .enumerate()
            .map(|(i, w)| word_at(w, spec, &format!("double_tubes[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let sr_discs = self
            .sr_discs
            .iter()
            .enumerate()
            .map(|(j, s)| {
                let path = format!("sr_discs[{j}]");
                let sign = sign_from_json(s.sign, &format!("{path}.sign"))?;
                Ok(SrDisc::new(
                    sign,
                    word_at(&s.word, spec, &format!("{path}.word"))?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SrData {
            double_tubes,
            sr_discs,
        })
    }

    pub fn from_data(d: &SrData, spec: &GroupSpec) -> Self {
        DiscJson {
            double_tubes: d
                .double_tubes
                .iter()
                .map(|l| spec.display_word(l).to_string())
                .collect(),
            sr_discs: d
                .sr_discs
                .iter()
                .map(|s| SignedWordJson {
                    sign: s.sign.into(),
                    word: spec.display_word(&s.element).to_string(),
                })
                .collect(),
        }
    }
}

pub fn points_to_list(points: &[SignedWordJson], spec: &GroupSpec) -> Result<DoublePointList> {
    points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let path = format!("points[{i}]");
            let sign = sign_from_json(p.sign, &format!("{path}.sign"))?;
            Ok(DoublePoint::new(
                sign,
                word_at(&p.word, spec, &format!("{path}.word"))?,
            ))
        })
        .collect::<Result<Vec<_>>>()
        .map(DoublePointList::new)
}

pub fn list_to_points(list: &DoublePointList, spec: &GroupSpec) -> PointsJson {
    PointsJson {
        points: list
            .points
            .iter()
            .map(|p| SignedWordJson {
                sign: p.sign.into(),
                word: spec.display_word(&p.loop_element).to_string(),
            })
            .collect(),
    }
}

pub fn parse_disc(text: &str, spec: &GroupSpec) -> Result<SrData> {
    from_json::<DiscJson>(text)?.to_data(spec)
}

pub fn serialize_disc(d: &SrData, spec: &GroupSpec) -> String {
    serde_json::to_string(&DiscJson::from_data(d, spec)).expect("plain data serializes")
}

pub fn parse_manifold(text: &str) -> Result<ManifoldModel> {
    from_json::<ManifoldJson>(text)?.to_model()
}
