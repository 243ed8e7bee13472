//! Verdicts, occurrence certificates, and justification traces.

use crate::construct::FieldCertificate;
use crate::graph::CanonicalKey;
use crate::rules::{RuleId, RuleWitness};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Whether a graph occurs as the prime character degree graph of some
/// solvable group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Occurs,
    DoesNotOccur,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Occurs => "OCCURS",
            Verdict::DoesNotOccur => "DOES_NOT_OCCUR",
            Verdict::Unknown => "UNKNOWN",
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn from_str(s: &str) -> Option<Verdict> {
        Some(match s {
            "OCCURS" => Verdict::Occurs,
            "DOES_NOT_OCCUR" => Verdict::DoesNotOccur,
            "UNKNOWN" => Verdict::Unknown,
            _ => return None,
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a record came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Seeded,
    DerivedByClassifier,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Seeded => "SEEDED",
            Source::DerivedByClassifier => "DERIVED_BY_CLASSIFIER",
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn from_str(s: &str) -> Option<Source> {
        Some(match s {
            "SEEDED" => Source::Seeded,
            "DERIVED_BY_CLASSIFIER" => Source::DerivedByClassifier,
            _ => return None,
        })
    }
}

/// One factor of a join certificate: its identity plus the record that
/// certifies it occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinFactor {
    pub key: CanonicalKey,
    pub record: VerdictRecord,
}

/// Machine-checkable evidence that a graph occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The graph is the join of these factors, each of which occurs.
    Join { factors: Vec<JoinFactor> },
    /// A field-action degree set whose prime graph is the graph.
    Field(FieldCertificate),
    /// A literature result, recorded as free text.
    Literature { citation: String },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Join { factors } => {
                write!(f, "JOIN(")?;
                for (i, fac) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", fac.key)?;
                }
                write!(f, ")")
            }
            Certificate::Field(c) => write!(f, "{c}"),
            Certificate::Literature { citation } => write!(f, "LITERATURE({citation})"),
        }
    }
}

/// How a justification step bears on the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepTag {
    Eliminates,
    Certifies,
    Inconclusive,
}

impl StepTag {
    pub fn as_str(self) -> &'static str {
        match self {
            StepTag::Eliminates => "ELIMINATES",
            StepTag::Certifies => "CERTIFIES",
            StepTag::Inconclusive => "INCONCLUSIVE",
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn from_str(s: &str) -> Option<StepTag> {
        Some(match s {
            "ELIMINATES" => StepTag::Eliminates,
            "CERTIFIES" => StepTag::Certifies,
            "INCONCLUSIVE" => StepTag::Inconclusive,
            _ => return None,
        })
    }
}

/// Payload of a justification step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepBody {
    Witness(RuleWitness),
    Certificate(Certificate),
    Citation(String),
    Note(String),
}

/// One entry of a justification trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JustificationStep {
    pub rule: RuleId,
    pub tag: StepTag,
    pub body: StepBody,
}

impl JustificationStep {
    pub fn witness(rule: RuleId, tag: StepTag, w: RuleWitness) -> Self {
        JustificationStep {
            rule,
            tag,
            body: StepBody::Witness(w),
        }
    }

    pub fn note(rule: RuleId, tag: StepTag, text: impl Into<String>) -> Self {
        JustificationStep {
            rule,
            tag,
            body: StepBody::Note(text.into()),
        }
    }

    pub fn citation(rule: RuleId, tag: StepTag, text: impl Into<String>) -> Self {
        JustificationStep {
            rule,
            tag,
            body: StepBody::Citation(text.into()),
        }
    }
}

impl fmt::Display for JustificationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: ", self.rule, self.tag.as_str())?;
        match &self.body {
            StepBody::Witness(w) => write!(f, "{}", w.data),
            StepBody::Certificate(c) => write!(f, "{c}"),
            StepBody::Citation(s) => write!(f, "[{s}]"),
            StepBody::Note(s) => f.write_str(s),
        }
    }
}

/// Ordered trace of the rule applications behind a verdict. The final
/// step's tag matches the verdict: `Eliminates` for `DoesNotOccur`,
/// `Certifies` for `Occurs`, and every step `Inconclusive` for `Unknown`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Justification {
    pub steps: Vec<JustificationStep>,
}

impl Justification {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            writeln!(f, "  {}. {step}", i + 1)?;
        }
        Ok(())
    }
}

/// A verdict with its evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictRecord {
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    pub justification: Justification,
    pub source: Source,
}

/// Violations of the record invariants, reported by constructors and the
/// knowledge-base loader.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecordError {
    OccursWithoutCertificate,
    EliminationWithoutJustification,
    TagMismatch { verdict: Verdict },
}

impl fmt::Display for RecordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordError::OccursWithoutCertificate => {
                write!(f, "OCCURS verdict requires a certificate")
            }
            RecordError::EliminationWithoutJustification => {
                write!(
                    f,
                    "DOES_NOT_OCCUR verdict requires a nonempty justification"
                )
            }
            RecordError::TagMismatch { verdict } => {
                write!(
                    f,
                    "final justification tag does not match verdict {verdict}"
                )
            }
        }
    }
}

impl core::error::Error for RecordError {}

impl VerdictRecord {
    /// Builds a record, enforcing the verdict/certificate/justification
    /// invariants.
    pub fn new(
        verdict: Verdict,
        certificate: Option<Certificate>,
        justification: Justification,
        source: Source,
    ) -> Result<VerdictRecord, RecordError> {
        let r = VerdictRecord {
            verdict,
            certificate,
            justification,
            source,
        };
        r.check_invariants()?;
        Ok(r)
    }

    pub fn check_invariants(&self) -> Result<(), RecordError> {
        match self.verdict {
            Verdict::Occurs => {
                if self.certificate.is_none() {
                    return Err(RecordError::OccursWithoutCertificate);
                }
            }
            Verdict::DoesNotOccur => {
                if self.justification.is_empty() {
                    return Err(RecordError::EliminationWithoutJustification);
                }
            }
            Verdict::Unknown => {}
        }
        let expected_last = match self.verdict {
            Verdict::Occurs => StepTag::Certifies,
            Verdict::DoesNotOccur => StepTag::Eliminates,
            Verdict::Unknown => StepTag::Inconclusive,
        };
        if let Some(last) = self.justification.steps.last() {
            if last.tag != expected_last {
                return Err(RecordError::TagMismatch {
                    verdict: self.verdict,
                });
            }
        }
        if self.verdict == Verdict::Unknown
            && self
                .justification
                .steps
                .iter()
                .any(|s| s.tag != StepTag::Inconclusive)
        {
            return Err(RecordError::TagMismatch {
                verdict: self.verdict,
            });
        }
        Ok(())
    }
}
