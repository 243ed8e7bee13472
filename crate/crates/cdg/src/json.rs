//! Serde mirror types for the core data model, plus the report schema.
//!
//! The JSON shapes here are the stable interchange format used by
//! `cdg classify --json`, `cdg report --json`, and the knowledge-base
//! file payloads.

use crate::format;
use cdg_core::construct::{DegreeSet, FieldCertificate};
use cdg_core::graph::CanonicalKey;
use cdg_core::rules::{RuleId, RuleWitness, WitnessData};
use cdg_core::verdict::{
    Certificate, JoinFactor, Justification, JustificationStep, Source, StepBody, StepTag, Verdict,
    VerdictRecord,
};
use cdg_core::{ClassificationReport, VertexSet};
use serde::{Deserialize, Serialize};

/// A conversion failure while reading serialized records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvertError(pub String);

impl std::fmt::Display for ConvertError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConvertError {}

fn err(msg: impl Into<String>) -> ConvertError {
    ConvertError(msg.into())
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WitnessDto {
    PalfyTriple {
        vertices: [u8; 3],
    },
    OddCycle {
        vertices: Vec<u8>,
    },
    ComponentSizes {
        small: u8,
        large: u8,
    },
    NonCompleteComponent {
        component: Vec<u8>,
        missing: [u8; 2],
    },
    TooManyComponents {
        count: u8,
        representatives: Vec<u8>,
    },
    DegreeTwoPair {
        vertices: [u8; 2],
    },
    JoinFactors {
        factors: Vec<String>,
    },
    None,
}

impl WitnessDto {
    pub fn from_core(w: &WitnessData) -> WitnessDto {
        match w {
            WitnessData::PalfyTriple(a, b, c) => WitnessDto::PalfyTriple {
                vertices: [*a, *b, *c],
            },
            WitnessData::OddCycle(vs) => WitnessDto::OddCycle {
                vertices: vs.clone(),
            },
            WitnessData::ComponentSizes { small, large } => WitnessDto::ComponentSizes {
                small: *small,
                large: *large,
            },
            WitnessData::NonCompleteComponent { component, missing } => {
                WitnessDto::NonCompleteComponent {
                    component: component.iter().collect(),
                    missing: [missing.0, missing.1],
                }
            }
            WitnessData::TooManyComponents {
                count,
                representatives,
            } => WitnessDto::TooManyComponents {
                count: *count,
                representatives: representatives.clone(),
            },
            WitnessData::DegreeTwoPair(a, b) => WitnessDto::DegreeTwoPair { vertices: [*a, *b] },
            WitnessData::Factors(keys) => WitnessDto::JoinFactors {
                factors: keys.iter().map(|k| k.hex()).collect(),
            },
            WitnessData::Empty => WitnessDto::None,
        }
    }

    pub fn to_core(&self) -> Result<WitnessData, ConvertError> {
        Ok(match self {
            WitnessDto::PalfyTriple { vertices } => {
                WitnessData::PalfyTriple(vertices[0], vertices[1], vertices[2])
            }
            WitnessDto::OddCycle { vertices } => WitnessData::OddCycle(vertices.clone()),
            WitnessDto::ComponentSizes { small, large } => WitnessData::ComponentSizes {
                small: *small,
                large: *large,
            },
            WitnessDto::NonCompleteComponent { component, missing } => {
                WitnessData::NonCompleteComponent {
                    component: VertexSet::from_labels(component)
                        .map_err(|e| err(format!("bad component: {e}")))?,
                    missing: (missing[0], missing[1]),
                }
            }
            WitnessDto::TooManyComponents {
                count,
                representatives,
            } => WitnessData::TooManyComponents {
                count: *count,
                representatives: representatives.clone(),
            },
            WitnessDto::DegreeTwoPair { vertices } => {
                WitnessData::DegreeTwoPair(vertices[0], vertices[1])
            }
            WitnessDto::JoinFactors { factors } => WitnessData::Factors(
                factors
                    .iter()
                    .map(|h| CanonicalKey::from_hex(h).map_err(|e| err(format!("bad key: {e}"))))
                    .collect::<Result<_, _>>()?,
            ),
            WitnessDto::None => WitnessData::Empty,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct JoinFactorDto {
    pub key: String,
    pub record: RecordDto,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum CertificateDto {
    Join {
        factors: Vec<JoinFactorDto>,
    },
    Field {
        q: u64,
        exponent: u32,
        degrees: Vec<u64>,
    },
    Literature {
        citation: String,
    },
}

impl CertificateDto {
    pub fn from_core(c: &Certificate) -> CertificateDto {
        match c {
            Certificate::Join { factors } => CertificateDto::Join {
                factors: factors
                    .iter()
                    .map(|f| JoinFactorDto {
                        key: f.key.hex(),
                        record: RecordDto::from_core(&f.record),
                    })
                    .collect(),
            },
            Certificate::Field(fc) => CertificateDto::Field {
                q: fc.q,
                exponent: fc.exponent,
                degrees: fc.degrees.iter().collect(),
            },
            Certificate::Literature { citation } => CertificateDto::Literature {
                citation: citation.clone(),
            },
        }
    }

    pub fn to_core(&self) -> Result<Certificate, ConvertError> {
        Ok(match self {
            CertificateDto::Join { factors } => Certificate::Join {
                factors: factors
                    .iter()
                    .map(|f| {
                        Ok(JoinFactor {
                            key: CanonicalKey::from_hex(&f.key)
                                .map_err(|e| err(format!("bad factor key: {e}")))?,
                            record: f.record.to_core()?,
                        })
                    })
                    .collect::<Result<_, ConvertError>>()?,
            },
            CertificateDto::Field {
                q,
                exponent,
                degrees,
            } => Certificate::Field(FieldCertificate {
                q: *q,
                exponent: *exponent,
                degrees: DegreeSet::new(degrees.iter().copied()),
            }),
            CertificateDto::Literature { citation } => Certificate::Literature {
                citation: citation.clone(),
            },
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct StepDto {
    pub rule: String,
    pub tag: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl StepDto {
    pub fn from_core(s: &JustificationStep) -> StepDto {
        let mut dto = StepDto {
            rule: s.rule.as_str().to_string(),
            tag: s.tag.as_str().to_string(),
            witness: None,
            certificate: None,
            citation: None,
            note: None,
        };
        match &s.body {
            StepBody::Witness(w) => dto.witness = Some(WitnessDto::from_core(&w.data)),
            StepBody::Certificate(c) => dto.certificate = Some(CertificateDto::from_core(c)),
            StepBody::Citation(c) => dto.citation = Some(c.clone()),
            StepBody::Note(n) => dto.note = Some(n.clone()),
        }
        dto
    }

    pub fn to_core(&self) -> Result<JustificationStep, ConvertError> {
        let rule =
            RuleId::from_str(&self.rule).ok_or_else(|| err(format!("bad rule {:?}", self.rule)))?;
        let tag =
            StepTag::from_str(&self.tag).ok_or_else(|| err(format!("bad tag {:?}", self.tag)))?;
        let bodies = usize::from(self.witness.is_some())
            + usize::from(self.certificate.is_some())
            + usize::from(self.citation.is_some())
            + usize::from(self.note.is_some());
        if bodies != 1 {
            return Err(err(
                "step must carry exactly one of witness/certificate/citation/note",
            ));
        }
        let body = if let Some(w) = &self.witness {
            StepBody::Witness(RuleWitness {
                rule,
                data: w.to_core()?,
            })
        } else if let Some(c) = &self.certificate {
            StepBody::Certificate(c.to_core()?)
        } else if let Some(c) = &self.citation {
            StepBody::Citation(c.clone())
        } else {
            StepBody::Note(self.note.clone().expect("checked above"))
        };
        Ok(JustificationStep { rule, tag, body })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RecordDto {
    pub verdict: String,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDto>,
    pub justification: Vec<StepDto>,
}

impl RecordDto {
    pub fn from_core(r: &VerdictRecord) -> RecordDto {
        RecordDto {
            verdict: r.verdict.as_str().to_string(),
            source: r.source.as_str().to_string(),
            certificate: r.certificate.as_ref().map(CertificateDto::from_core),
            justification: r
                .justification
                .steps
                .iter()
                .map(StepDto::from_core)
                .collect(),
        }
    }

    pub fn to_core(&self) -> Result<VerdictRecord, ConvertError> {
        let verdict = Verdict::from_str(&self.verdict)
            .ok_or_else(|| err(format!("bad verdict {:?}", self.verdict)))?;
        let source = Source::from_str(&self.source)
            .ok_or_else(|| err(format!("bad source {:?}", self.source)))?;
        Ok(VerdictRecord {
            verdict,
            source,
            certificate: self.certificate.as_ref().map(|c| c.to_core()).transpose()?,
            justification: Justification {
                steps: self
                    .justification
                    .iter()
                    .map(StepDto::to_core)
                    .collect::<Result<_, _>>()?,
            },
        })
    }
}

/// One classified graph in a report.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphEntryDto {
    pub key: String,
    pub cdg1: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDto>,
    pub justification: Vec<StepDto>,
}

impl GraphEntryDto {
    pub fn new(key: &CanonicalKey, record: &VerdictRecord) -> GraphEntryDto {
        GraphEntryDto::for_graph(&key.to_graph(), record)
    }

    /// Entry for a graph in the caller's labeling; witness labels in
    /// `record` are expected to refer to `g`'s vertices.
    pub fn for_graph(g: &cdg_core::Graph, record: &VerdictRecord) -> GraphEntryDto {
        GraphEntryDto {
            key: g.canonical_form().hex(),
            cdg1: format::emit_inline(g),
            verdict: record.verdict.as_str().to_string(),
            certificate: record.certificate.as_ref().map(CertificateDto::from_core),
            justification: record
                .justification
                .steps
                .iter()
                .map(StepDto::from_core)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PipelineDto {
    pub connected: usize,
    pub palfy: usize,
    pub post_diameter: usize,
    pub joins: usize,
    pub eliminated: usize,
    pub unknown: usize,
}

/// The full report schema.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportDto {
    pub n: u8,
    pub pipeline_counts: PipelineDto,
    pub graphs: Vec<GraphEntryDto>,
}

impl ReportDto {
    pub fn from_core(report: &ClassificationReport) -> ReportDto {
        ReportDto {
            n: report.n,
            pipeline_counts: PipelineDto {
                connected: report.pipeline.connected,
                palfy: report.pipeline.palfy,
                post_diameter: report.pipeline.post_diameter,
                joins: report.pipeline.joins,
                eliminated: report.pipeline.eliminated,
                unknown: report.pipeline.unknown,
            },
            graphs: report
                .per_graph
                .iter()
                .map(|(k, r)| GraphEntryDto::new(k, r))
                .collect(),
        }
    }
}
