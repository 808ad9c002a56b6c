//! `.gr` text format and forbidden-family files.
//!
//! A graph file starts with `p hd <n> <m>` followed by `m` lines `u v` with 1-based
//! endpoints. Lines starting with `c` are comments. A family file is a sequence of such
//! blocks separated by lines containing `---`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        match header {
            None => {
                if fields.len() != 4 || fields[0] != "p" || fields[1] != "hd" {
                    return Err(err("expected `p hd <n> <m>`"));
                }
                let n = fields[2].parse().map_err(|_| err("bad vertex count"))?;
                let m = fields[3].parse().map_err(|_| err("bad edge count"))?;
                header = Some((n, m));
            }
            Some((n, _)) => {
                if fields.len() != 2 {
                    return Err(err("expected `u v`"));
                }
                let u: usize = fields[0].parse().map_err(|_| err("bad endpoint"))?;
                let v: usize = fields[1].parse().map_err(|_| err("bad endpoint"))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err("endpoint out of range"));
                }
                edges.push((u - 1, v - 1));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Parse("missing `p hd` header".into()))?;
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges).map_err(|e| Error::Parse(e.to_string()))
}

pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p hd {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_family(text: &str) -> Result<Vec<Graph>> {
    let mut blocks = vec![String::new()];
    for line in text.lines() {
        if line.trim() == "---" {
            blocks.push(String::new());
        } else {
            let last = blocks.last_mut().unwrap();
            last.push_str(line);
            last.push('\n');
        }
    }
    blocks
        .iter()
        .filter(|b| b.lines().any(|l| !l.trim().is_empty() && !l.trim_start().starts_with('c')))
        .map(|b| parse_gr(b))
        .collect()
}

pub fn write_family(family: &[Graph]) -> String {
    family.iter().map(write_gr).collect::<Vec<_>>().join("---\n")
}

/// Solution block: `SOLUTION <problem> <size>` then sorted 1-based ids.
pub fn write_solution(problem: &str, set: &[usize]) -> String {
    let mut ids: Vec<usize> = set.iter().map(|v| v + 1).collect();
    ids.sort_unstable();
    let mut out = format!("SOLUTION {problem} {}\n", ids.len());
    for v in ids {
        out.push_str(&format!("{v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_gr("c triangle\np hd 3 3\n1 2\nc inline\n2 3\n3 1\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_gr("p hd 2 1\n").is_err());
        assert!(parse_gr("p hd 2 1\n1 3\n").is_err());
        assert!(parse_gr("p td 2 0\n").is_err());
        assert!(parse_gr("1 2\n").is_err());
        assert!(parse_gr("p hd 2 2\n1 2\n2 1\n").is_err());
    }

    #[test]
    fn writer_sorts_edges() {
        let g = Graph::new(3, &[(2, 1), (0, 2)]).unwrap();
        assert_eq!(write_gr(&g), "p hd 3 2\n1 3\n2 3\n");
        assert_eq!(parse_gr(&write_gr(&g)).unwrap(), g);
    }

    #[test]
    fn family_blocks() {
        let fam = vec![Graph::complete(3), Graph::path(4)];
        assert_eq!(parse_family(&write_family(&fam)).unwrap(), fam);
    }

    #[test]
    fn solution_block() {
        assert_eq!(write_solution("oct", &[4, 0]), "SOLUTION oct 2\n1\n5\n");
    }
}
