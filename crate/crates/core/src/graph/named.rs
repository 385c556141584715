use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{invalid, Error, Result};

const MAX_HYPERCUBE_DIM: usize = 16;

/// Named graph families with a fixed canonical vertex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `K_n`.
    Complete,
    /// `O_n`, no edges.
    Empty,
    /// `P_n`: `0 - 1 - ... - (n-1)`.
    Path,
    /// `C_n` for `n >= 3`: the path plus the edge `(n-1, 0)`.
    Cycle,
    /// `Q_d` on `2^d` vertices in binary counting order; edges join words at
    /// Hamming distance one.
    Hypercube,
    /// The complement of `nK_2` on `2n` vertices. Vertex `i` and `i + n` are
    /// antipodal (non-adjacent); every other pair is adjacent.
    CocktailParty,
    /// `nK_2` on `2n` vertices with edges `(i, i + n)`.
    Matching,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::Empty,
        Family::Path,
        Family::Cycle,
        Family::Hypercube,
        Family::CocktailParty,
        Family::Matching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Hypercube => "hypercube",
            Family::CocktailParty => "cocktail_party",
            Family::Matching => "matching",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "complete" | "k" => Family::Complete,
            "empty" | "o" => Family::Empty,
            "path" | "p" => Family::Path,
            "cycle" | "c" => Family::Cycle,
            "hypercube" | "cube" | "q" => Family::Hypercube,
            "cocktail_party" | "cocktail-party" | "cocktail" | "cp" => Family::CocktailParty,
            "matching" | "m" => Family::Matching,
            other => return invalid(format!("unknown graph family {other:?}")),
        })
    }
}

pub fn build_named(family: Family, size: usize) -> Result<Graph> {
    if size == 0 {
        return invalid(format!("{family} needs a size parameter >= 1"));
    }
    let g = match family {
        Family::Complete => {
            let n = size;
            Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))?
        }
        Family::Empty => Graph::new(size),
        Family::Path => Graph::from_edges(size, (1..size).map(|v| (v - 1, v)))?,
        Family::Cycle => {
            if size < 3 {
                return invalid(format!("cycle needs at least 3 vertices, got {size}"));
            }
            Graph::from_edges(size, (0..size).map(|v| (v, (v + 1) % size)))?
        }
        Family::Hypercube => {
            if size > MAX_HYPERCUBE_DIM {
                return invalid(format!(
                    "hypercube dimension {size} exceeds {MAX_HYPERCUBE_DIM}"
                ));
            }
            let n = 1usize << size;
            Graph::from_edges(
                n,
                (0..n).flat_map(|x| {
                    (0..size)
                        .map(move |b| (x, x ^ (1 << b)))
                        .filter(|&(x, y)| x < y)
                }),
            )?
        }
        Family::CocktailParty => {
            let n = 2 * size;
            Graph::from_edges(
                n,
                (0..n).flat_map(move |u| {
                    ((u + 1)..n)
                        .filter(move |&v| v != u + size)
                        .map(move |v| (u, v))
                }),
            )?
        }
        Family::Matching => Graph::from_edges(2 * size, (0..size).map(|i| (i, i + size)))?,
    };
    Ok(g)
}
