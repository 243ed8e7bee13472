//! The verdict engine: a fixed rule chain with memoization by canonical
//! form and full justification traces.
//!
//! Chain order: knowledge base, disconnected shape (with a field
//! certificate search), the degree-two family, odd complement cycles, the
//! diameter-three table, then join decomposition with recursive factor
//! classification. `Unknown` is the fallback, never an error. Elimination
//! rules run before occurrence construction so a non-occurrence always
//! carries the cheapest witness; the order cannot change verdicts, only
//! traces.

use crate::construct::{self, validate_field_certificate};
use crate::enumerate::{enumerate_graphs, EnumerateError};
use crate::graph::{CanonicalKey, Diameter, Graph, VertexSet};
use crate::kb::KnowledgeBase;
use crate::rules::{self, Diam3Outcome, RuleId, ShapeOutcome, WitnessData};
use crate::verdict::{
    Certificate, JoinFactor, Justification, JustificationStep, Source, StepBody, StepTag, Verdict,
    VerdictRecord,
};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

/// Named milestone counts for one full classification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineCounts {
    /// Connected isomorphism classes.
    pub connected: usize,
    /// Connected classes passing the triple condition.
    pub palfy: usize,
    /// Of those, classes with diameter other than three (the diameter rule
    /// settles every diameter-three class at this size).
    pub post_diameter: usize,
    /// Post-diameter classes certified to occur (all via joins).
    pub joins: usize,
    /// Post-diameter classes eliminated.
    pub eliminated: usize,
    /// Post-diameter classes left open.
    pub unknown: usize,
}

/// Outcome of classifying a whole universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: u8,
    pub occurs: usize,
    pub does_not_occur: usize,
    pub unknown: usize,
    pub pipeline: PipelineCounts,
    /// One entry per isomorphism class, in canonical key order.
    pub per_graph: Vec<(CanonicalKey, VerdictRecord)>,
}

impl ClassificationReport {
    pub fn total(&self) -> usize {
        self.per_graph.len()
    }
}

/// The classifier: an immutable seed knowledge base plus an overlay of
/// derived verdicts. Reruns from the same seed reproduce the overlay
/// exactly.
pub struct Classifier<'a> {
    kb: &'a KnowledgeBase,
    overlay: BTreeMap<CanonicalKey, VerdictRecord>,
}

impl<'a> Classifier<'a> {
    pub fn new(kb: &'a KnowledgeBase) -> Classifier<'a> {
        Classifier {
            kb,
            overlay: BTreeMap::new(),
        }
    }

    pub fn seed(&self) -> &KnowledgeBase {
        self.kb
    }

    pub fn overlay(&self) -> &BTreeMap<CanonicalKey, VerdictRecord> {
        &self.overlay
    }

    /// Seed layer first, then derived overlay.
    pub fn lookup(&self, key: &CanonicalKey) -> Option<&VerdictRecord> {
        self.kb.lookup(key).or_else(|| self.overlay.get(key))
    }

    /// Classifies a graph. Witness labels in the returned trace refer to
    /// the vertices of `g` itself.
    pub fn classify(&mut self, g: &Graph) -> VerdictRecord {
        let (key, perm) = g.canonical_form_with_perm();
        let record = self.classify_key(key);
        // perm maps g's 0-based indices to representative indices; invert
        // it to pull witness labels back onto g.
        let n = g.vertex_count() as usize;
        let mut inv = [0u8; 8];
        for (i, &p) in perm[..n].iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        translate_record(&record, &inv)
    }

    /// Classifies by canonical key; traces refer to the representative
    /// graph's labels.
    pub fn classify_key(&mut self, key: CanonicalKey) -> VerdictRecord {
        if let Some(rec) = self.kb.lookup(&key) {
            return rec.clone();
        }
        if let Some(rec) = self.overlay.get(&key) {
            return rec.clone();
        }
        let g = key.to_graph();
        let record = if g.is_connected() {
            self.classify_connected(&g)
        } else {
            self.classify_disconnected(&g)
        };
        debug_assert!(record.check_invariants().is_ok());
        self.overlay.insert(key, record.clone());
        record
    }

    /// Renders the full trace for a graph.
    pub fn explain(&mut self, g: &Graph) -> Justification {
        self.classify(g).justification
    }

    fn classify_disconnected(&mut self, g: &Graph) -> VerdictRecord {
        match rules::disconnected_shape(g).expect("graph is disconnected") {
            ShapeOutcome::Eliminated(w) => {
                eliminated(JustificationStep::witness(w.rule, StepTag::Eliminates, w))
            }
            ShapeOutcome::Inconclusive { small, large } => {
                let mut steps = alloc::vec![JustificationStep::note(
                    RuleId::DisconnectedShape,
                    StepTag::Inconclusive,
                    format!(
                        "two complete components of sizes ({small},{large}); the size inequality holds"
                    ),
                )];
                match construct::search_field_certificate(small, large)
                    .expect("sizes are within range")
                {
                    Some(cert) if validate_field_certificate(&cert, g) => {
                        let certificate = Certificate::Field(cert);
                        steps.push(JustificationStep {
                            rule: RuleId::FieldSearch,
                            tag: StepTag::Certifies,
                            body: StepBody::Certificate(certificate.clone()),
                        });
                        occurs(certificate, steps)
                    }
                    _ => {
                        steps.push(JustificationStep::note(
                            RuleId::FieldSearch,
                            StepTag::Inconclusive,
                            "no field certificate within the search budget",
                        ));
                        unknown(steps)
                    }
                }
            }
        }
    }

    fn classify_connected(&mut self, g: &Graph) -> VerdictRecord {
        if let Some(w) = rules::bissler_family(g) {
            return eliminated(JustificationStep::witness(w.rule, StepTag::Eliminates, w));
        }
        if let Some(w) = rules::complement_odd_cycle(g) {
            return eliminated(JustificationStep::witness(w.rule, StepTag::Eliminates, w));
        }
        match rules::diameter_three_rule(g).expect("graph is connected") {
            Diam3Outcome::Occurs { citation } => {
                let certificate = Certificate::Literature {
                    citation: citation.into(),
                };
                let step = JustificationStep {
                    rule: RuleId::Diam3,
                    tag: StepTag::Certifies,
                    body: StepBody::Certificate(certificate.clone()),
                };
                return occurs(certificate, alloc::vec![step]);
            }
            Diam3Outcome::Eliminated { witness, citation } => {
                let mut steps = alloc::vec![JustificationStep::witness(
                    witness.rule,
                    StepTag::Eliminates,
                    witness
                )];
                steps.insert(
                    0,
                    JustificationStep::citation(RuleId::Diam3, StepTag::Inconclusive, citation),
                );
                // Keep the eliminating step last; the citation step records
                // which settled case applied.
                return VerdictRecord {
                    verdict: Verdict::DoesNotOccur,
                    certificate: None,
                    justification: Justification { steps },
                    source: Source::DerivedByClassifier,
                };
            }
            Diam3Outcome::NotApplicable => {}
        }
        self.classify_by_join(g)
    }

    /// Tries to certify `g` as a join of occurring factors. Groupings of
    /// the complement's components are tried finest-first; a grouping
    /// certifies when every factor classifies as occurring.
    fn classify_by_join(&mut self, g: &Graph) -> VerdictRecord {
        let components = match rules::join_components(g) {
            Some(c) => c,
            None => {
                let step = JustificationStep::note(
                    RuleId::Join,
                    StepTag::Inconclusive,
                    "complement is connected; no join decomposition",
                );
                return unknown(alloc::vec![step]);
            }
        };
        let finest_keys: Vec<CanonicalKey> = components
            .iter()
            .map(|&c| g.induced_subgraph(c).expect("nonempty").canonical_form())
            .collect();
        for grouping in partitions(components.len()) {
            if grouping.block_count < 2 {
                continue;
            }
            let mut blocks: Vec<VertexSet> = alloc::vec![VertexSet::EMPTY; grouping.block_count];
            for (i, &b) in grouping.assignment.iter().enumerate() {
                blocks[b] = blocks[b].union(components[i]);
            }
            let mut factors = Vec::with_capacity(blocks.len());
            let mut all_occur = true;
            for block in &blocks {
                let factor = g.induced_subgraph(*block).expect("nonempty block");
                let key = factor.canonical_form();
                let record = self.classify_key(key);
                if record.verdict != Verdict::Occurs {
                    all_occur = false;
                    break;
                }
                factors.push(JoinFactor { key, record });
            }
            if all_occur {
                let certificate = Certificate::Join { factors };
                let step = JustificationStep {
                    rule: RuleId::Join,
                    tag: StepTag::Certifies,
                    body: StepBody::Certificate(certificate.clone()),
                };
                return occurs(certificate, alloc::vec![step]);
            }
        }
        let step = JustificationStep {
            rule: RuleId::Join,
            tag: StepTag::Inconclusive,
            body: StepBody::Witness(rules::RuleWitness {
                rule: RuleId::Join,
                data: WitnessData::Factors(finest_keys),
            }),
        };
        let note = JustificationStep::note(
            RuleId::Join,
            StepTag::Inconclusive,
            "no grouping of the join factors certifies occurrence",
        );
        unknown(alloc::vec![step, note])
    }

    /// Classifies every isomorphism class on `n` vertices and tallies the
    /// milestone counts.
    pub fn classify_all(&mut self, n: u8) -> Result<ClassificationReport, EnumerateError> {
        let universe = enumerate_graphs(n, false)?;
        let mut per_graph = Vec::with_capacity(universe.len());
        let mut occurs_count = 0usize;
        let mut dno_count = 0usize;
        let mut unknown_count = 0usize;
        let mut pipeline = PipelineCounts {
            connected: 0,
            palfy: 0,
            post_diameter: 0,
            joins: 0,
            eliminated: 0,
            unknown: 0,
        };
        for g in universe.iter() {
            let key = g.canonical_form();
            let record = self.classify_key(key);
            match record.verdict {
                Verdict::Occurs => occurs_count += 1,
                Verdict::DoesNotOccur => dno_count += 1,
                Verdict::Unknown => unknown_count += 1,
            }
            if g.is_connected() {
                pipeline.connected += 1;
                if rules::satisfies_palfy(g).is_ok() {
                    pipeline.palfy += 1;
                    if g.diameter() != Diameter::Finite(3) {
                        pipeline.post_diameter += 1;
                        match record.verdict {
                            Verdict::Occurs => pipeline.joins += 1,
                            Verdict::DoesNotOccur => pipeline.eliminated += 1,
                            Verdict::Unknown => pipeline.unknown += 1,
                        }
                    }
                }
            }
            per_graph.push((key, record));
        }
        Ok(ClassificationReport {
            n,
            occurs: occurs_count,
            does_not_occur: dno_count,
            unknown: unknown_count,
            pipeline,
            per_graph,
        })
    }
}

fn eliminated(step: JustificationStep) -> VerdictRecord {
    VerdictRecord {
        verdict: Verdict::DoesNotOccur,
        certificate: None,
        justification: Justification {
            steps: alloc::vec![step],
        },
        source: Source::DerivedByClassifier,
    }
}

fn occurs(certificate: Certificate, steps: Vec<JustificationStep>) -> VerdictRecord {
    VerdictRecord {
        verdict: Verdict::Occurs,
        certificate: Some(certificate),
        justification: Justification { steps },
        source: Source::DerivedByClassifier,
    }
}

fn unknown(steps: Vec<JustificationStep>) -> VerdictRecord {
    VerdictRecord {
        verdict: Verdict::Unknown,
        certificate: None,
        justification: Justification { steps },
        source: Source::DerivedByClassifier,
    }
}

fn translate_record(record: &VerdictRecord, inv: &[u8; 8]) -> VerdictRecord {
    let map = |v: u8| inv[(v - 1) as usize] + 1;
    let steps = record
        .justification
        .steps
        .iter()
        .map(|s| match &s.body {
            StepBody::Witness(w) => JustificationStep {
                rule: s.rule,
                tag: s.tag,
                body: StepBody::Witness(rules::RuleWitness {
                    rule: w.rule,
                    data: w.data.map_labels(map),
                }),
            },
            _ => s.clone(),
        })
        .collect();
    VerdictRecord {
        verdict: record.verdict,
        certificate: record.certificate.clone(),
        justification: Justification { steps },
        source: record.source,
    }
}

/// A set partition of `0..k` as a restricted growth string.
struct Partition {
    assignment: Vec<usize>,
    block_count: usize,
}

/// All set partitions of `0..k`, finest first (descending block count),
/// then in growth-string order. Deterministic.
fn partitions(k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rgs = alloc::vec![0usize; k];
    collect_partitions(k, 1, &mut rgs, &mut out);
    out.sort_by(|a, b| {
        b.block_count
            .cmp(&a.block_count)
            .then_with(|| a.assignment.cmp(&b.assignment))
    });
    out
}

fn collect_partitions(k: usize, pos: usize, rgs: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if pos == k {
        let block_count = rgs.iter().copied().max().unwrap_or(0) + 1;
        out.push(Partition {
            assignment: rgs.clone(),
            block_count,
        });
        return;
    }
    let ceiling = rgs[..pos].iter().copied().max().unwrap_or(0) + 1;
    for b in 0..=ceiling {
        rgs[pos] = b;
        collect_partitions(k, pos + 1, rgs, out);
    }
    rgs[pos] = 0;
}
