use serde::{Deserialize, Serialize};

use super::{
    construct_dense_witness, construct_k2_star, eg_exact, eg_paired_search, Certification, Construction,
    SubgraphWitness,
};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hypercube::{build_bh, BhImplicit};

/// A witness labelled with the construction that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledWitness {
    pub construction: Construction,
    pub witness: SubgraphWitness,
}

/// Bounds on `e_g(BH_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgBounds {
    pub n: usize,
    pub g: usize,
    pub lower: usize,
    /// `None` when no upper bound could be computed within budget.
    pub upper: Option<usize>,
    /// Every witness tried; the first one attains `lower`.
    pub witnesses: Vec<LabelledWitness>,
}

impl EgBounds {
    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }

    pub fn best(&self) -> &LabelledWitness {
        &self.witnesses[0]
    }
}

/// Combines the explicit constructions, the paired search and (for small
/// `n`) the exact solver. For `2 <= g <= 8`, wherever the exact solver
/// runs, the bounds must close at `2g - 2`; anything else is an error.
pub fn eg_bounds(n: usize, g: usize, budget: &Budget) -> Result<EgBounds> {
    let bh = BhImplicit::new(n)?;
    if g + 1 > bh.order() {
        return Err(Error::OutOfRange(format!(
            "g + 1 = {} exceeds the order of BH_{n}",
            g + 1
        )));
    }
    let mut witnesses = Vec::new();
    if g >= 2 && g - 1 <= 2 * n {
        witnesses.push(LabelledWitness {
            construction: Construction::K2Star,
            witness: construct_k2_star(n, g)?,
        });
    }
    if n >= 3 && g >= 9 && g < 2 * n {
        let dense = construct_dense_witness(n, g)?;
        witnesses.push(LabelledWitness {
            construction: dense.construction,
            witness: dense.witness,
        });
    }
    witnesses.push(LabelledWitness {
        construction: Construction::PairedSearch,
        witness: eg_paired_search(n, g, budget)?,
    });

    let mut upper = None;
    if bh.order() <= budget.exact_order_limit {
        let graph = build_bh(n, bh.order())?;
        let exact = eg_exact(&graph, g, budget)?;
        upper = exact.upper_bound;
        witnesses.push(LabelledWitness {
            construction: Construction::ExactSearch,
            witness: exact.witness,
        });
    }

    // Stable sort: larger count first, earlier entry wins ties.
    witnesses.sort_by(|a, b| b.witness.induced_edge_count.cmp(&a.witness.induced_edge_count));
    let lower = witnesses[0].witness.induced_edge_count;
    if let Some(u) = upper {
        if u < lower {
            return Err(Error::Internal(format!(
                "e_g bounds crossed for n={n}, g={g}: lower {lower} > upper {u}"
            )));
        }
        if u == lower {
            for w in &mut witnesses {
                if w.witness.induced_edge_count == u {
                    w.witness.certification = Certification::Exact;
                }
            }
        }
    }
    if (2..=8).contains(&g) && upper.is_some() && (lower != 2 * g - 2 || upper != Some(lower)) {
        return Err(Error::Internal(format!(
            "e_{g}(BH_{n}) bounds [{lower}, {}] differ from 2g - 2 = {}",
            upper.map_or("?".to_string(), |u| u.to_string()),
            2 * g - 2
        )));
    }
    Ok(EgBounds {
        n,
        g,
        lower,
        upper,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_bounds_on_small_cubes() {
        let b = Budget::default();
        let r = eg_bounds(2, 3, &b).unwrap();
        assert_eq!((r.lower, r.upper), (4, Some(4)));
        let r = eg_bounds(3, 2, &b).unwrap();
        assert_eq!((r.lower, r.upper), (2, Some(2)));
        assert_eq!(r.best().witness.certification, Certification::Exact);
    }

    #[test]
    fn open_bounds_for_large_cubes() {
        let r = eg_bounds(5, 9, &Budget::default()).unwrap();
        assert!(r.lower >= 17);
        assert_eq!(r.upper, None);
        assert_eq!(r.best().witness.certification, Certification::LowerBound);
    }
}
