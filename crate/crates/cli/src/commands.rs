//! The single-graph subcommands. Each returns the text to print and the exit
//! code; `main` only does I/O.

use std::fmt::Write;

use bitableau_core::{
    canonical_form_exhaustive, clique_exhaustive, find_k_clique_traced, iso_check_ib,
    iso_check_vab, iso_exhaustive, render_trace, standardize_ib, standardize_vab, CliqueVerdict,
    Graph, IsoVerdict, NonIsoReason, OracleConfig,
};
use clap::ValueEnum;

use crate::error::CliError;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IsoMethod {
    Vab,
    Ib,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliqueMethod {
    Restricted,
    Oracle,
}

fn push_tableau(out: &mut String, tableau: &impl std::fmt::Display) {
    let text = tableau.to_string();
    if !text.is_empty() {
        out.push_str(&text);
        out.push('\n');
    }
}

fn push_trace(out: &mut String, trace: &str) {
    out.push_str("trace:\n");
    out.push_str(trace);
}

/// Prints the tableau, then the permutation(s) in cycle notation, then the
/// trace when asked.
pub fn canonize(
    g: &Graph,
    method: IsoMethod,
    trace: bool,
    oracle: &OracleConfig,
) -> Result<Outcome, CliError> {
    let mut out = String::new();
    match method {
        IsoMethod::Vab => {
            let r = standardize_vab(g);
            push_tableau(&mut out, &r.tableau);
            writeln!(out, "permutation: {}", r.vertex_perm).unwrap();
            if !r.within_budget() {
                writeln!(
                    out,
                    "note: {} transpositions exceed the budget of {}",
                    r.steps,
                    bitableau_core::step_budget(g.p())
                )
                .unwrap();
            }
            if trace {
                push_trace(&mut out, &render_trace(&r.trace));
            }
        }
        IsoMethod::Ib => {
            let r = standardize_ib(&g.label_edges());
            push_tableau(&mut out, &r.tableau);
            writeln!(out, "permutation: {}", r.vertex_perm).unwrap();
            if let Some(tau) = &r.edge_perm {
                writeln!(out, "edge permutation: {tau}").unwrap();
            }
            if trace {
                push_trace(&mut out, &render_trace(&r.trace));
            }
        }
        IsoMethod::Oracle => {
            let c = canonical_form_exhaustive(g, oracle)?;
            push_tableau(&mut out, &c.tableau);
            writeln!(out, "permutation: {}", c.witness).unwrap();
        }
    }
    Ok(Outcome {
        stdout: out,
        exit: EXIT_YES,
    })
}

pub fn iso(
    g: &Graph,
    h: &Graph,
    method: IsoMethod,
    early_exit: bool,
    oracle: &OracleConfig,
) -> Result<Outcome, CliError> {
    let verdict = match method {
        IsoMethod::Vab => iso_check_vab(g, h, early_exit)?,
        IsoMethod::Ib => iso_check_ib(&g.label_edges(), &h.label_edges(), early_exit)?,
        IsoMethod::Oracle => match iso_exhaustive(g, h, oracle)? {
            Some(sigma) => IsoVerdict::Isomorphic(sigma),
            None => IsoVerdict::NotIsomorphic(NonIsoReason::Exhaustive),
        },
    };
    Ok(render_iso(&verdict))
}

pub fn render_iso(verdict: &IsoVerdict) -> Outcome {
    match verdict {
        IsoVerdict::Isomorphic(w) => Outcome {
            stdout: format!("isomorphic\nwitness: {w}\n"),
            exit: EXIT_YES,
        },
        IsoVerdict::NotIsomorphic(reason) => Outcome {
            stdout: format!("not isomorphic ({reason})\n"),
            exit: EXIT_NO,
        },
        IsoVerdict::Inconclusive => Outcome {
            stdout: "inconclusive (greedy standard forms differ)\n".into(),
            exit: EXIT_INCONCLUSIVE,
        },
    }
}

/// Sorted, space-separated vertex labels.
pub fn render_witness(vertices: &[usize]) -> String {
    vertices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn clique(
    g: &Graph,
    k: usize,
    method: CliqueMethod,
    trace: bool,
    oracle: &OracleConfig,
) -> Result<Outcome, CliError> {
    if k < 2 || k > g.p() {
        return Err(bitableau_core::Error::InvalidCliqueSize { k, p: g.p() }.into());
    }
    let outcome = match method {
        CliqueMethod::Restricted => {
            let (verdict, run) = find_k_clique_traced(g, k)?;
            let mut out = match &verdict {
                CliqueVerdict::Found(w) => format!("found\n{}\n", render_witness(w)),
                CliqueVerdict::NotFound => {
                    "not found (fewer than k vertices of degree >= k-1)\n".to_string()
                }
                CliqueVerdict::Inconclusive => {
                    "inconclusive (no leading clique block after restricted standardization)\n"
                        .to_string()
                }
            };
            if trace {
                push_tableau(&mut out, &run.tableau);
                push_trace(&mut out, &render_trace(&run.trace));
            }
            let exit = match verdict {
                CliqueVerdict::Found(_) => EXIT_YES,
                CliqueVerdict::NotFound => EXIT_NO,
                CliqueVerdict::Inconclusive => EXIT_INCONCLUSIVE,
            };
            Outcome { stdout: out, exit }
        }
        CliqueMethod::Oracle => match clique_exhaustive(g, k, oracle)? {
            Some(w) => Outcome {
                stdout: format!("found\n{}\n", render_witness(&w)),
                exit: EXIT_YES,
            },
            None => Outcome {
                stdout: "not found\n".into(),
                exit: EXIT_NO,
            },
        },
    };
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bitableau_core::parse_edge_list;

    #[test]
    fn canonize_k3() {
        let out = canonize(
            &Graph::complete(3),
            IsoMethod::Vab,
            false,
            &OracleConfig::default(),
        )
        .unwrap();
        assert_eq!(out.stdout, "1 | 2 3\n2 | 1 3\n3 | 1 2\npermutation: ()\n");
    }

    #[test]
    fn canonize_trace() {
        let tree = parse_edge_list("7 6\n1 7\n2 4\n2 6\n2 7\n3 6\n4 5").unwrap();
        let out = canonize(&tree, IsoMethod::Vab, true, &OracleConfig::default()).unwrap();
        assert!(out.stdout.contains("trace:\ndegree-sort\n"));
    }

    #[test]
    fn iso_exit_codes() {
        let cfg = OracleConfig::default();
        let k3 = Graph::complete(3);
        let p3 = Graph::path(3);
        assert_eq!(iso(&k3, &k3, IsoMethod::Vab, false, &cfg).unwrap().exit, 0);
        assert_eq!(iso(&k3, &p3, IsoMethod::Vab, false, &cfg).unwrap().exit, 1);
        assert_eq!(
            iso(&k3, &p3, IsoMethod::Oracle, false, &cfg).unwrap().exit,
            1
        );
        assert_eq!(render_iso(&IsoVerdict::Inconclusive).exit, 2);
    }

    #[test]
    fn clique_output() {
        let cfg = OracleConfig::default();
        let out = clique(
            &Graph::complete(4),
            4,
            CliqueMethod::Restricted,
            false,
            &cfg,
        )
        .unwrap();
        assert_eq!(out.stdout, "found\n1 2 3 4\n");
        let out = clique(&Graph::cycle(5), 3, CliqueMethod::Oracle, false, &cfg).unwrap();
        assert_eq!((out.stdout.as_str(), out.exit), ("not found\n", 1));
        assert!(clique(&Graph::path(3), 4, CliqueMethod::Oracle, false, &cfg).is_err());
    }
}
