//! JSON envelope for hunt reports.
//!
//! Every report is `{"body": ..., "header": ..., "schema_version": N}` with
//! object keys sorted at every level. The header holds the wall-clock
//! timestamp and the generator name; the body is a pure function of the
//! arguments and seed.

use serde::Serialize;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Name recorded in the header for seeded runs.
pub const RNG_ALGORITHM: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

#[derive(Debug, Clone, Serialize)]
pub struct RngInfo {
    pub algorithm: &'static str,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Header {
    pub generated_at: String,
    pub tool: String,
    pub rng: Option<RngInfo>,
}

impl Header {
    pub fn now(seed: Option<u64>) -> Header {
        Header {
            generated_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            tool: format!("bitableau {}", env!("CARGO_PKG_VERSION")),
            rng: seed.map(|seed| RngInfo {
                algorithm: RNG_ALGORITHM,
                seed,
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report<B> {
    pub schema_version: u32,
    pub header: Header,
    pub body: B,
}

impl<B: Serialize> Report<B> {
    pub fn new(body: B, seed: Option<u64>) -> Report<B> {
        Report {
            schema_version: SCHEMA_VERSION,
            header: Header::now(seed),
            body,
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        to_sorted_json(self)
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_sorted_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    // serde_json's Map is a BTreeMap without the preserve_order feature
    let tree = serde_json::to_value(value).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut text =
        serde_json::to_string_pretty(&tree).map_err(|e| CliError::Usage(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

/// The report with its header removed, for byte comparisons between runs.
pub fn body_bytes(report_json: &str) -> Result<String, CliError> {
    let mut tree: serde_json::Value =
        serde_json::from_str(report_json).map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(map) = tree.as_object_mut() {
        map.remove("header");
    }
    to_sorted_json(&tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Body {
        zeta: u32,
        alpha: Vec<u32>,
    }

    #[test]
    fn keys_are_sorted() {
        let r = Report::new(
            Body {
                zeta: 1,
                alpha: vec![2],
            },
            Some(7),
        );
        let text = r.to_json().unwrap();
        let body = text.find("\"body\"").unwrap();
        let header = text.find("\"header\"").unwrap();
        let version = text.find("\"schema_version\"").unwrap();
        assert!(body < header && header < version);
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"zeta\"").unwrap());
        assert!(text.contains("\"seed\": 7"));
    }

    #[test]
    fn body_ignores_header() {
        let a = Report::new(
            Body {
                zeta: 1,
                alpha: vec![],
            },
            None,
        );
        let mut b = Report::new(
            Body {
                zeta: 1,
                alpha: vec![],
            },
            None,
        );
        b.header.generated_at = "1970-01-01T00:00:00Z".into();
        assert_eq!(
            body_bytes(&a.to_json().unwrap()).unwrap(),
            body_bytes(&b.to_json().unwrap()).unwrap()
        );
    }
}
