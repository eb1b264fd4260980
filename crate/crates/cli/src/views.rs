//! JSON documents with vertices written as digit strings.

use serde::{Deserialize, Serialize};

use bh_extra::connectivity::{CutKind, CutWitness};
use bh_extra::extremal::{Certification, Construction, LabelledWitness, SubgraphWitness};
use bh_extra::hypercube::BhVertex;
use bh_extra::pipeline::{Condition, LambdaValue, PipelineReport, Verdict};
use bh_extra::{Error, Result, Vertex};

pub fn digits(id: Vertex, n: usize) -> BhVertex {
    BhVertex::from_id(id, n).expect("solver ids are in range")
}

pub fn ids(vertices: &[BhVertex], n: usize) -> Result<Vec<Vertex>> {
    vertices
        .iter()
        .map(|v| {
            if v.dimension() == n {
                Ok(v.id())
            } else {
                Err(Error::InvalidVertex(format!("{v} has {} digits, expected {n}", v.dimension())))
            }
        })
        .collect()
}

/// A subgraph witness file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub n: usize,
    pub g: usize,
    pub vertices: Vec<BhVertex>,
    pub edges: usize,
    pub certification: Certification,
    pub construction: Construction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<usize>,
}

impl WitnessFile {
    pub fn new(n: usize, w: &SubgraphWitness, construction: Construction, upper_bound: Option<usize>) -> Self {
        WitnessFile {
            n,
            g: w.g(),
            vertices: w.vertices.iter().map(|&v| digits(v, n)).collect(),
            edges: w.induced_edge_count,
            certification: w.certification,
            construction,
            upper_bound,
        }
    }

    pub fn labelled(n: usize, w: &LabelledWitness) -> Self {
        WitnessFile::new(n, &w.witness, w.construction, None)
    }

    pub fn to_witness(&self) -> Result<SubgraphWitness> {
        Ok(SubgraphWitness {
            vertices: ids(&self.vertices, self.n)?,
            induced_edge_count: self.edges,
            certification: self.certification,
        })
    }
}

/// A cut witness file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutFile {
    pub n: usize,
    pub g: usize,
    pub certifies: CutKind,
    pub side_u: Vec<BhVertex>,
    pub cut_edges: Vec<(BhVertex, BhVertex)>,
    pub cut_size: usize,
    pub min_component_u: usize,
    pub min_component_ubar: usize,
}

impl CutFile {
    pub fn new(n: usize, c: &CutWitness) -> Self {
        CutFile {
            n,
            g: c.g,
            certifies: c.certifies,
            side_u: c.side_u.iter().map(|&v| digits(v, n)).collect(),
            cut_edges: c.cut_edges.iter().map(|&(u, v)| (digits(u, n), digits(v, n))).collect(),
            cut_size: c.cut_size,
            min_component_u: c.min_component_u,
            min_component_ubar: c.min_component_ubar,
        }
    }

    pub fn to_witness(&self) -> Result<CutWitness> {
        let edges: Vec<BhVertex> = self
            .cut_edges
            .iter()
            .flat_map(|(u, v)| [u.clone(), v.clone()])
            .collect();
        let flat = ids(&edges, self.n)?;
        Ok(CutWitness {
            side_u: ids(&self.side_u, self.n)?,
            cut_edges: flat.chunks(2).map(|p| (p[0], p[1])).collect(),
            cut_size: self.cut_size,
            min_component_u: self.min_component_u,
            min_component_ubar: self.min_component_ubar,
            certifies: self.certifies,
            g: self.g,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaDoc {
    pub n: usize,
    pub g: usize,
    pub method: String,
    /// Set when the value is a single certified integer.
    pub value: Option<i64>,
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub contingent: bool,
    pub witness: Option<CutFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineDoc {
    pub n: usize,
    pub g: usize,
    pub cond_order: bool,
    pub cond_degree: Condition,
    pub eg_lower: usize,
    pub eg_upper: Option<usize>,
    pub eg_witness: Option<WitnessFile>,
    pub lambda_value: Option<LambdaValue>,
    pub contingent_on_cond_degree: bool,
    pub cut_certificate: Option<CutFile>,
    pub conjecture_value: i64,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

impl PipelineDoc {
    pub fn new(r: &PipelineReport) -> Self {
        PipelineDoc {
            n: r.n,
            g: r.g,
            cond_order: r.cond_order,
            cond_degree: r.cond_degree,
            eg_lower: r.eg_lower,
            eg_upper: r.eg_upper,
            eg_witness: r.eg_witness.as_ref().map(|w| WitnessFile::labelled(r.n, w)),
            lambda_value: r.lambda_value,
            contingent_on_cond_degree: r.contingent_on_cond_degree,
            cut_certificate: r.cut_certificate.as_ref().map(|c| CutFile::new(r.n, c)),
            conjecture_value: r.conjecture_value,
            verdict: r.verdict,
            reasons: r.reasons.clone(),
        }
    }
}

/// Left-aligned two-column table.
pub fn key_values(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

/// Table with a header row; columns padded to their widest cell.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for row in rows {
        out.push_str(&line(row.clone()));
    }
    out
}

pub fn vertex_list(vs: &[BhVertex]) -> String {
    vs.iter().map(|v| format!("({v})")).collect::<Vec<_>>().join(" ")
}
