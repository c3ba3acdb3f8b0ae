use std::collections::HashSet;
use std::io::{BufRead, BufReader, Read, Write};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Field {
    Pattern,
    Numeric,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Symmetry {
    Symmetric,
    General,
}

fn parse_header(line: &str) -> Result<(Field, Symmetry)> {
    let tokens: Vec<String> = line
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" {
        return Err(Error::parse(
            1,
            "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'",
        ));
    }
    if tokens[1] != "matrix" || tokens[2] != "coordinate" {
        return Err(Error::parse(
            1,
            format!(
                "unsupported object/format '{} {}', only 'matrix coordinate' is accepted",
                tokens[1], tokens[2]
            ),
        ));
    }
    let field = match tokens[3].as_str() {
        "pattern" => Field::Pattern,
        "real" | "integer" => Field::Numeric,
        other => return Err(Error::parse(1, format!("unsupported field '{other}'"))),
    };
    let symmetry = match tokens[4].as_str() {
        "symmetric" => Symmetry::Symmetric,
        "general" => Symmetry::General,
        other => return Err(Error::parse(1, format!("unsupported symmetry '{other}'"))),
    };
    Ok((field, symmetry))
}

fn parse_index(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| {
        Error::parse(
            line,
            format!("{what} '{tok}' is not a non-negative integer"),
        )
    })
}

/// Reads a Matrix Market coordinate file as a graph.
///
/// Values of `real`/`integer` files are discarded; every stored entry
/// becomes an edge. `general` files must have a symmetric pattern.
pub fn load_matrix_market<R: Read>(source: R) -> Result<Graph> {
    let reader = BufReader::new(source);
    let mut lines = reader.lines().enumerate();

    let (field, symmetry) = match lines.next() {
        Some((_, line)) => parse_header(&line?)?,
        None => return Err(Error::parse(1, "empty input")),
    };

    let mut size: Option<(usize, usize)> = None;
    let mut entries: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match size {
            None => {
                if tokens.len() != 3 {
                    return Err(Error::parse(lineno, "size line must be 'rows cols nnz'"));
                }
                let rows = parse_index(tokens[0], lineno, "row count")?;
                let cols = parse_index(tokens[1], lineno, "column count")?;
                let nnz = parse_index(tokens[2], lineno, "entry count")?;
                if rows != cols {
                    return Err(Error::parse(
                        lineno,
                        format!("matrix is {rows}x{cols}; an adjacency matrix must be square"),
                    ));
                }
                entries.reserve(nnz);
                size = Some((rows, nnz));
            }
            Some((n, _)) => {
                let expected = if field == Field::Pattern { 2 } else { 3 };
                if tokens.len() < expected {
                    return Err(Error::parse(
                        lineno,
                        format!("expected {expected} tokens per entry"),
                    ));
                }
                let i = parse_index(tokens[0], lineno, "row index")?;
                let j = parse_index(tokens[1], lineno, "column index")?;
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(Error::parse(
                        lineno,
                        format!("entry ({i}, {j}) outside 1..={n}"),
                    ));
                }
                if field == Field::Numeric && tokens[2].parse::<f64>().is_err() {
                    return Err(Error::parse(
                        lineno,
                        format!("value '{}' is not numeric", tokens[2]),
                    ));
                }
                entries.push((i - 1, j - 1, lineno));
            }
        }
    }

    let (n, nnz) = size.ok_or_else(|| Error::parse(1, "missing size line"))?;
    if entries.len() != nnz {
        return Err(Error::invalid(format!(
            "size line declares {nnz} entries but {} were read",
            entries.len()
        )));
    }

    if symmetry == Symmetry::General {
        let present: HashSet<(usize, usize)> = entries.iter().map(|&(i, j, _)| (i, j)).collect();
        if let Some(&(i, j, lineno)) = entries
            .iter()
            .find(|&&(i, j, _)| i != j && !present.contains(&(j, i)))
        {
            return Err(Error::parse(
                lineno,
                format!(
                    "pattern is not symmetric: entry ({}, {}) has no mirror ({}, {})",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                ),
            ));
        }
    }

    Graph::from_edges(n, entries.into_iter().map(|(i, j, _)| (i, j)))
}

/// Reads whitespace-separated `u v` pairs; `#` starts a comment line.
///
/// The node count is one past the largest id seen. `base` is 0 or 1.
pub fn load_edge_list<R: Read>(source: R, base: usize) -> Result<Graph> {
    load_edges_impl(source, base, None)
}

/// Like [`load_edge_list`] with a declared node count; ids beyond it are
/// rejected and trailing isolated nodes are kept.
pub fn load_edge_list_sized<R: Read>(source: R, base: usize, n: usize) -> Result<Graph> {
    load_edges_impl(source, base, Some(n))
}

fn load_edges_impl<R: Read>(source: R, base: usize, declared: Option<usize>) -> Result<Graph> {
    if base > 1 {
        return Err(Error::invalid(format!(
            "index base must be 0 or 1, got {base}"
        )));
    }
    let reader = BufReader::new(source);
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
            return Err(Error::parse(lineno, "expected two node ids"));
        };
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip([a, b]) {
            let raw = parse_index(tok, lineno, "node id")?;
            if raw < base {
                return Err(Error::parse(
                    lineno,
                    format!("node id {raw} is below index base {base}"),
                ));
            }
            let id = raw - base;
            if let Some(n) = declared {
                if id >= n {
                    return Err(Error::parse(
                        lineno,
                        format!("node id {raw} outside declared range of {n} nodes"),
                    ));
                }
            }
            *slot = id;
        }
        max_id = Some(max_id.map_or(ids[0].max(ids[1]), |m| m.max(ids[0]).max(ids[1])));
        edges.push((ids[0], ids[1]));
    }
    let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Graph::from_edges(n, edges)
}

/// Writes the canonical dump: one `u v` line per edge, 0-based, `u <= v`,
/// sorted.
pub fn write_canonical<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mm(body: &str) -> Result<Graph> {
        load_matrix_market(body.as_bytes())
    }

    #[test]
    fn symmetric_pattern_path() {
        let g =
            mm("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n3 2\n").unwrap();
        assert_eq!((g.num_nodes(), g.num_edges()), (3, 2));
        assert_eq!(g.degrees().degrees, vec![1, 2, 1]);
    }

    #[test]
    fn loop_sets_flag() {
        let g = mm("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 3\n2 1\n2 2\n3 2\n")
            .unwrap();
        assert!(g.has_loops());
        assert_eq!(g.num_edges(), 3);
    }

    #[test]
    fn real_values_binarized() {
        let g =
            mm("%%MatrixMarket matrix coordinate real general\n% c\n2 2 2\n1 2 0.5\n2 1 -3e2\n")
                .unwrap();
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn rejects_asymmetric_general() {
        let err = mm("%%MatrixMarket matrix coordinate pattern general\n3 3 3\n1 2\n2 1\n2 3\n")
            .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 5"), "{msg}");
        assert!(msg.contains("(2, 3)"), "{msg}");
    }

    #[test]
    fn rejects_bad_header_and_shape() {
        assert!(mm("%%MatrixMarket matrix array real general\n2 2\n").is_err());
        assert!(mm("%%MatrixMarket matrix coordinate complex general\n2 2 0\n").is_err());
        assert!(mm("%%MatrixMarket matrix coordinate pattern symmetric\n2 3 0\n").is_err());
        assert!(mm("not a header\n").is_err());
        assert!(mm("%%MatrixMarket matrix coordinate pattern symmetric\n2 2 2\n1 2\n").is_err());
        assert!(mm("%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n3 1\n").is_err());
    }

    #[test]
    fn edge_list_bases() {
        let a = load_edge_list("0 1\n1 2".as_bytes(), 0).unwrap();
        let b = load_edge_list("# header\n1 2\n\n2 3\n".as_bytes(), 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.degrees().degrees, vec![1, 2, 1]);
    }

    #[test]
    fn edge_list_dedup() {
        let g = load_edge_list("0 1\n0 1\n1 0".as_bytes(), 0).unwrap();
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert!(load_edge_list("0 x\n".as_bytes(), 0).is_err());
        assert!(load_edge_list("0 1\n".as_bytes(), 1).is_err());
        assert!(load_edge_list("0\n".as_bytes(), 0).is_err());
        assert!(load_edge_list_sized("0 5\n".as_bytes(), 0, 5).is_err());
        let g = load_edge_list_sized("0 1\n".as_bytes(), 0, 4).unwrap();
        assert_eq!(g.num_nodes(), 4);
    }

    #[test]
    fn canonical_dump() {
        let g = Graph::from_edges(4, [(2, 1), (0, 3), (3, 3)]).unwrap();
        let mut buf = Vec::new();
        write_canonical(&g, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "0 3\n1 2\n3 3\n");
    }
}
