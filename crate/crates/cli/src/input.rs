use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use bitableau_core::{parse_edge_list, parse_graph6, Graph};
use clap::ValueEnum;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

/// Reads a file, or stdin when `path` is `None` or `-`.
pub fn read_source(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdin>"),
                    source,
                })?;
            Ok(buf)
        }
    }
}

/// Parses one graph. graph6 input uses the first non-empty line.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph, CliError> {
    let graph = match format {
        Format::Edgelist => parse_edge_list(text)?,
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("");
            parse_graph6(line)?
        }
    };
    Ok(graph)
}

pub fn load_graph(path: Option<&Path>, format: Format) -> Result<Graph, CliError> {
    let text = read_source(path)?;
    parse_graph(&text, format)
}
