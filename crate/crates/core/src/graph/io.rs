//! Plain-text edge lists: optional `c` comment lines, a `p <order> <edges>`
//! header, then one `<u> <v>` pair per line.

use std::io::{BufRead, Write};

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn write_edge_list<W: Write>(&self, mut out: W, comment: Option<&str>) -> Result<()> {
        if let Some(comment) = comment {
            for line in comment.lines() {
                writeln!(out, "c {line}")?;
            }
        }
        writeln!(out, "p {} {}", self.order(), self.edge_count())?;
        for &(u, v) in self.edges() {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn to_edge_list(&self, comment: Option<&str>) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf, comment)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("edge lists are ASCII")
    }

    pub fn read_edge_list<R: BufRead>(input: R) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, line) in input.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            let parse_err = |msg: &str| Error::Parse {
                line: lineno,
                msg: msg.to_string(),
            };
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match header {
                None => {
                    if fields.len() != 3 || fields[0] != "p" {
                        return Err(parse_err("expected `p <order> <edge_count>`"));
                    }
                    let order = fields[1].parse().map_err(|_| parse_err("bad order"))?;
                    let count = fields[2].parse().map_err(|_| parse_err("bad edge count"))?;
                    header = Some((order, count));
                }
                Some(_) => {
                    if fields.len() != 2 {
                        return Err(parse_err("expected `<u> <v>`"));
                    }
                    let u = fields[0].parse().map_err(|_| parse_err("bad vertex id"))?;
                    let v = fields[1].parse().map_err(|_| parse_err("bad vertex id"))?;
                    edges.push((u, v));
                }
            }
        }
        let (order, count) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing `p` header".into(),
        })?;
        if edges.len() != count {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header announces {count} edges, found {}", edges.len()),
            });
        }
        Graph::new(order, edges)
    }
}
