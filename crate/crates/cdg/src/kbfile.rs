//! Knowledge-base file format: one record per line,
//! `<canonical-key-hex> <verdict> <payload-json>`, UTF-8, `#` comments.
//! Loading validates every record invariant and rejects duplicates; the
//! store/load round trip is the identity.

use crate::json::RecordDto;
use cdg_core::graph::CanonicalKey;
use cdg_core::kb::KnowledgeBase;
use cdg_core::verdict::Verdict;
use std::path::Path;

/// Load failures, with the offending line number where applicable.
#[derive(Debug)]
pub enum KbFileError {
    Io(std::io::Error),
    Parse {
        line: usize,
        message: String,
    },
    DuplicateKey {
        line: usize,
        key: String,
    },
    Invariant {
        line: usize,
        key: String,
        message: String,
    },
}

impl std::fmt::Display for KbFileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KbFileError::Io(e) => write!(f, "{e}"),
            KbFileError::Parse { line, message } => write!(f, "line {line}: {message}"),
            KbFileError::DuplicateKey { line, key } => {
                write!(f, "line {line}: duplicate key {key}")
            }
            KbFileError::Invariant { line, key, message } => {
                write!(
                    f,
                    "line {line}: record for {key} violates an invariant: {message}"
                )
            }
        }
    }
}

impl std::error::Error for KbFileError {}

impl From<std::io::Error> for KbFileError {
    fn from(e: std::io::Error) -> Self {
        KbFileError::Io(e)
    }
}

/// Renders a knowledge base in the line format, keys ascending.
pub fn store(kb: &KnowledgeBase) -> String {
    let mut out = String::from("# knowledge base: <canonical-key-hex> <verdict> <payload-json>\n");
    for (key, record) in kb.iter() {
        let payload = serde_json::to_string(&RecordDto::from_core(record))
            .expect("records serialize cleanly");
        out.push_str(&format!(
            "{} {} {}\n",
            key.hex(),
            record.verdict.as_str(),
            payload
        ));
    }
    out
}

pub fn store_to_path(kb: &KnowledgeBase, path: &Path) -> Result<(), KbFileError> {
    std::fs::write(path, store(kb))?;
    Ok(())
}

/// Parses the line format, enforcing key validity, verdict consistency,
/// record invariants, and key uniqueness.
pub fn parse(text: &str) -> Result<KnowledgeBase, KbFileError> {
    let mut kb = KnowledgeBase::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.splitn(3, ' ');
        let (key_text, verdict_text, payload) = match (parts.next(), parts.next(), parts.next()) {
            (Some(k), Some(v), Some(p)) => (k, v, p),
            _ => {
                return Err(KbFileError::Parse {
                    line: line_no,
                    message: "expected <key> <verdict> <json>".into(),
                })
            }
        };
        let key = CanonicalKey::from_hex(key_text).map_err(|e| KbFileError::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let verdict = Verdict::from_str(verdict_text).ok_or_else(|| KbFileError::Parse {
            line: line_no,
            message: format!("unknown verdict {verdict_text:?}"),
        })?;
        let dto: RecordDto = serde_json::from_str(payload).map_err(|e| KbFileError::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let record = dto.to_core().map_err(|e| KbFileError::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        if record.verdict != verdict {
            return Err(KbFileError::Parse {
                line: line_no,
                message: format!(
                    "verdict column says {verdict} but the payload says {}",
                    record.verdict
                ),
            });
        }
        kb.insert(key, record).map_err(|e| match e {
            cdg_core::kb::KbError::DuplicateKey(k) => KbFileError::DuplicateKey {
                line: line_no,
                key: k.hex(),
            },
            cdg_core::kb::KbError::Record { key, error } => KbFileError::Invariant {
                line: line_no,
                key: key.hex(),
                message: error.to_string(),
            },
        })?;
    }
    Ok(kb)
}

pub fn load_path(path: &Path) -> Result<KnowledgeBase, KbFileError> {
    let text = std::fs::read_to_string(path)?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cdg_core::kb;

    #[test]
    fn seed_roundtrip_is_identity() {
        let seed = kb::seed();
        let text = store(&seed);
        let back = parse(&text).unwrap();
        assert_eq!(back, seed);
    }

    #[test]
    fn duplicate_keys_are_rejected() {
        let seed = kb::seed();
        let text = store(&seed);
        let line = text.lines().nth(1).unwrap();
        let doubled = format!("{text}{line}\n");
        match parse(&doubled) {
            Err(KbFileError::DuplicateKey { .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn occurs_without_certificate_is_rejected() {
        let line = r#"0100000000 OCCURS {"verdict":"OCCURS","source":"SEEDED","justification":[]}"#;
        match parse(line) {
            Err(KbFileError::Invariant { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_lines_report_their_number() {
        let text = "# comment\n\nnot-a-key OCCURS {}\n";
        match parse(text) {
            Err(KbFileError::Parse { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        let mismatch =
            r#"0100000000 OCCURS {"verdict":"UNKNOWN","source":"SEEDED","justification":[]}"#;
        match parse(mismatch) {
            Err(KbFileError::Parse { line: 1, message }) => {
                assert!(message.contains("payload"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
