//! Replay of golden cases stored as JSON files.
//!
//! A golden file holds `{"cases": [...]}`; each case carries a `kind` tag,
//! a `name`, and graphs as edge-list text. Files are read in name order.

use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};

use bitableau_core::{
    build_restricted_vab, build_vab, canonical_form_exhaustive, find_k_clique, iso_check_ib,
    iso_check_vab, iso_exhaustive, leading_clique_check, parse_edge_list, standardize_vab,
    CliqueVerdict, Graph, IsoVerdict, OracleConfig, RestrictedVab,
};
use serde::Deserialize;

use crate::commands::{CliqueMethod, IsoMethod, EXIT_NO, EXIT_YES};
use crate::error::CliError;

/// The cases shipped with the crate.
pub const DEFAULT_GOLDEN_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/golden");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenFile {
    pub cases: Vec<Case>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoExpect {
    Isomorphic,
    NotIsomorphic,
    Inconclusive,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Case {
    /// Greedy standard form rows.
    StandardizeVab {
        name: String,
        graph: String,
        rows: Vec<Vec<usize>>,
    },
    /// The tableau after transpositions applied in list order.
    ActVab {
        name: String,
        graph: String,
        transpositions: Vec<(usize, usize)>,
        rows: Vec<Vec<usize>>,
    },
    /// Maximum-key form over all relabelings.
    OracleCanonical {
        name: String,
        graph: String,
        rows: Vec<Vec<usize>>,
    },
    Iso {
        name: String,
        graph: String,
        other: String,
        method: String,
        expect: IsoExpect,
    },
    /// `witness: null` expects no clique.
    Clique {
        name: String,
        graph: String,
        k: usize,
        method: String,
        witness: Option<Vec<usize>>,
    },
    /// Greedy and oracle standard forms of two graphs both differ.
    DistinctStandardForms {
        name: String,
        graph: String,
        other: String,
    },
    /// Leading clique block present after one transposition.
    LeadingClique {
        name: String,
        graph: String,
        k: usize,
        transposition: (usize, usize),
        expect: bool,
    },
}

impl Case {
    pub fn name(&self) -> &str {
        match self {
            Case::StandardizeVab { name, .. }
            | Case::ActVab { name, .. }
            | Case::OracleCanonical { name, .. }
            | Case::Iso { name, .. }
            | Case::Clique { name, .. }
            | Case::DistinctStandardForms { name, .. }
            | Case::LeadingClique { name, .. } => name,
        }
    }
}

fn graph(text: &str) -> Result<Graph, String> {
    parse_edge_list(text).map_err(|e| format!("bad graph: {e}"))
}

fn expect_rows(found: &[Vec<usize>], wanted: &[Vec<usize>]) -> Result<(), String> {
    if found == wanted {
        Ok(())
    } else {
        Err(format!("rows {found:?}, expected {wanted:?}"))
    }
}

fn iso_method(s: &str) -> Result<IsoMethod, String> {
    match s {
        "vab" => Ok(IsoMethod::Vab),
        "ib" => Ok(IsoMethod::Ib),
        "oracle" => Ok(IsoMethod::Oracle),
        other => Err(format!("unknown iso method {other:?}")),
    }
}

fn clique_method(s: &str) -> Result<CliqueMethod, String> {
    match s {
        "restricted" => Ok(CliqueMethod::Restricted),
        "oracle" => Ok(CliqueMethod::Oracle),
        other => Err(format!("unknown clique method {other:?}")),
    }
}

/// Checks one case; `Err` carries the mismatch.
pub fn check_case(case: &Case, oracle: &OracleConfig) -> Result<(), String> {
    let core = |e: bitableau_core::Error| e.to_string();
    match case {
        Case::StandardizeVab { graph: g, rows, .. } => {
            expect_rows(standardize_vab(&graph(g)?).tableau.rows(), rows)
        }
        Case::ActVab {
            graph: g,
            transpositions,
            rows,
            ..
        } => {
            let mut t = build_vab(&graph(g)?);
            for &(i, j) in transpositions {
                t = t.act_transposition(i, j).map_err(core)?;
            }
            expect_rows(t.rows(), rows)
        }
        Case::OracleCanonical { graph: g, rows, .. } => expect_rows(
            canonical_form_exhaustive(&graph(g)?, oracle)
                .map_err(core)?
                .tableau
                .rows(),
            rows,
        ),
        Case::Iso {
            graph: g,
            other,
            method,
            expect,
            ..
        } => {
            let (g, h) = (graph(g)?, graph(other)?);
            let verdict = match iso_method(method)? {
                IsoMethod::Vab => iso_check_vab(&g, &h, false).map_err(core)?,
                IsoMethod::Ib => {
                    iso_check_ib(&g.label_edges(), &h.label_edges(), false).map_err(core)?
                }
                IsoMethod::Oracle => match iso_exhaustive(&g, &h, oracle).map_err(core)? {
                    Some(w) => IsoVerdict::Isomorphic(w),
                    None => IsoVerdict::NotIsomorphic(bitableau_core::NonIsoReason::Exhaustive),
                },
            };
            let got = match &verdict {
                IsoVerdict::Isomorphic(w) => {
                    if g.relabel(w).map_err(core)? != h {
                        return Err(format!("witness {w} does not map the graphs"));
                    }
                    IsoExpect::Isomorphic
                }
                IsoVerdict::NotIsomorphic(_) => IsoExpect::NotIsomorphic,
                IsoVerdict::Inconclusive => IsoExpect::Inconclusive,
            };
            if got == *expect {
                Ok(())
            } else {
                Err(format!("verdict {got:?}, expected {expect:?}"))
            }
        }
        Case::Clique {
            graph: g,
            k,
            method,
            witness,
            ..
        } => {
            let g = graph(g)?;
            let got = match clique_method(method)? {
                CliqueMethod::Restricted => match find_k_clique(&g, *k).map_err(core)? {
                    CliqueVerdict::Found(w) => Some(w),
                    CliqueVerdict::NotFound => None,
                    CliqueVerdict::Inconclusive => {
                        return Err("restricted search was inconclusive".into())
                    }
                },
                CliqueMethod::Oracle => {
                    bitableau_core::clique_exhaustive(&g, *k, oracle).map_err(core)?
                }
            };
            if got == *witness {
                Ok(())
            } else {
                Err(format!("witness {got:?}, expected {witness:?}"))
            }
        }
        Case::DistinctStandardForms {
            graph: g, other, ..
        } => {
            let (g, h) = (graph(g)?, graph(other)?);
            if standardize_vab(&g).tableau == standardize_vab(&h).tableau {
                return Err("greedy standard forms coincide".into());
            }
            let cg = canonical_form_exhaustive(&g, oracle).map_err(core)?;
            let ch = canonical_form_exhaustive(&h, oracle).map_err(core)?;
            if cg.tableau == ch.tableau {
                return Err("oracle standard forms coincide".into());
            }
            Ok(())
        }
        Case::LeadingClique {
            graph: g,
            k,
            transposition: (i, j),
            expect,
            ..
        } => {
            let g = graph(g)?;
            let before = build_restricted_vab(&g, *k).map_err(core)?;
            let moved = before.vab().act_transposition(*i, *j).map_err(core)?;
            let after = RestrictedVab::new(moved, *k).map_err(core)?;
            let got = leading_clique_check(&after);
            if got == *expect {
                Ok(())
            } else {
                Err(format!("leading block check {got}, expected {expect}"))
            }
        }
    }
}

/// Runs every case under `dir`. Returns the printed summary and exit code:
/// 0 when all pass, 1 when any case or file fails. A missing directory or
/// one without golden files is an error.
pub fn selftest(dir: &Path, oracle: &OracleConfig) -> Result<(String, i32), CliError> {
    let entries = fs::read_dir(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(CliError::Golden(format!(
            "no *.json files in {}",
            dir.display()
        )));
    }

    let mut out = String::new();
    let (mut passed, mut failed) = (0, 0);
    for path in &files {
        let file = path.file_name().unwrap_or_default().to_string_lossy();
        let parsed = fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|text| serde_json::from_str::<GoldenFile>(&text).map_err(|e| e.to_string()));
        let golden = match parsed {
            Ok(g) if !g.cases.is_empty() => g,
            Ok(_) => {
                failed += 1;
                writeln!(out, "FAIL {file}: no cases").unwrap();
                continue;
            }
            Err(e) => {
                failed += 1;
                writeln!(out, "FAIL {file}: unreadable golden file: {e}").unwrap();
                continue;
            }
        };
        for case in &golden.cases {
            match check_case(case, oracle) {
                Ok(()) => {
                    passed += 1;
                    writeln!(out, "PASS {file}: {}", case.name()).unwrap();
                }
                Err(e) => {
                    failed += 1;
                    writeln!(out, "FAIL {file}: {}: {e}", case.name()).unwrap();
                }
            }
        }
    }
    writeln!(out, "{passed} passed, {failed} failed").unwrap();
    Ok((out, if failed == 0 { EXIT_YES } else { EXIT_NO }))
}
