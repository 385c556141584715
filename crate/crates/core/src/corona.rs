//! The inhomogeneous corona `G ∘ (H_1, ..., H_n)`.
//!
//! Every satellite must have the same order `m >= 1`. Vertex `(u, w)` of the
//! corona, with `u` a vertex of `G` and `w in 0..=m`, sits at flat index
//! `u * (m + 1) + w`: the hub `(u, 0)` first, then the `m` vertices of `H_u`.
//! Base vertices are 0-based here, as everywhere else in the crate.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{parse_graph_spec, Graph, SymmetricMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoronaVertex {
    /// Vertex of the base graph `G`.
    pub base: usize,
    /// `0` for the hub, `w >= 1` for vertex `w - 1` of the satellite.
    pub offset: usize,
}

impl CoronaVertex {
    pub fn hub(base: usize) -> Self {
        Self { base, offset: 0 }
    }

    pub fn label(self) -> String {
        format!("({},{})", self.base, self.offset)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoronaGraph {
    base: Graph,
    satellites: Vec<Graph>,
    m: usize,
    flat: Graph,
}

fn satellite_order(g: &Graph, hs: &[Graph]) -> Result<usize> {
    if g.n() == 0 {
        return invalid("corona needs a base graph with at least one vertex");
    }
    if hs.len() != g.n() {
        return invalid(format!(
            "base graph has {} vertices but {} satellites were given",
            g.n(),
            hs.len()
        ));
    }
    let m = hs[0].n();
    if let Some((i, h)) = hs.iter().enumerate().find(|(_, h)| h.n() != m) {
        return invalid(format!(
            "satellites must share one order: satellite 0 has {m} vertices, satellite {i} has {}",
            h.n()
        ));
    }
    if m == 0 {
        return invalid("satellites must have at least one vertex");
    }
    Ok(m)
}

impl CoronaGraph {
    pub fn new(g: &Graph, hs: &[Graph]) -> Result<Self> {
        let m = satellite_order(g, hs)?;
        let block = m + 1;
        let mut flat = Graph::new(g.n() * block);
        for (a, b) in g.edges() {
            flat.add_edge(a * block, b * block)?;
        }
        for (l, h) in hs.iter().enumerate() {
            let hub = l * block;
            for w in 1..=m {
                flat.add_edge(hub, hub + w)?;
            }
            for (x, y) in h.edges() {
                flat.add_edge(hub + 1 + x, hub + 1 + y)?;
            }
        }
        for idx in 0..flat.n() {
            let label = CoronaVertex {
                base: idx / block,
                offset: idx % block,
            }
            .label();
            flat.set_label(idx, label)?;
        }
        Ok(Self {
            base: g.unlabeled(),
            satellites: hs.iter().map(Graph::unlabeled).collect(),
            m,
            flat,
        })
    }

    /// `G ∘ H` with the same satellite at every base vertex.
    pub fn homogeneous(g: &Graph, h: &Graph) -> Result<Self> {
        Self::new(g, &vec![h.clone(); g.n()])
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn satellites(&self) -> &[Graph] {
        &self.satellites
    }

    /// Common satellite order.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The corona as a plain labeled graph.
    pub fn flat(&self) -> &Graph {
        &self.flat
    }

    pub fn index(&self, v: CoronaVertex) -> usize {
        debug_assert!(v.base < self.base.n() && v.offset <= self.m);
        v.base * (self.m + 1) + v.offset
    }

    pub fn hub(&self, base: usize) -> usize {
        self.index(CoronaVertex::hub(base))
    }

    pub fn vertex(&self, index: usize) -> CoronaVertex {
        CoronaVertex {
            base: index / (self.m + 1),
            offset: index % (self.m + 1),
        }
    }

    pub fn laplacian_blocks(&self) -> SymmetricMatrix {
        assemble_blocks(&self.base, &self.satellites, self.m)
    }
}

pub fn corona(g: &Graph, hs: &[Graph]) -> Result<CoronaGraph> {
    CoronaGraph::new(g, hs)
}

/// Assembles `(L(G) + mI) ⊗ |0><0| + Σ_l |l><l| ⊗ [[0, -1ᵀ], [-1, L(H_l) + I]]`
/// directly from the factor Laplacians, in the flat index order.
pub fn corona_laplacian_blocks(g: &Graph, hs: &[Graph]) -> Result<SymmetricMatrix> {
    let m = satellite_order(g, hs)?;
    Ok(assemble_blocks(g, hs, m))
}

fn assemble_blocks(g: &Graph, hs: &[Graph], m: usize) -> SymmetricMatrix {
    let block = m + 1;
    let mut out = SymmetricMatrix::zeros(g.n() * block);
    let lg = g.laplacian();
    for a in 0..g.n() {
        for b in a..g.n() {
            let shift = if a == b { m as f64 } else { 0.0 };
            out.set(a * block, b * block, lg.get(a, b) + shift);
        }
    }
    for (l, h) in hs.iter().enumerate() {
        let hub = l * block;
        let lh = h.laplacian();
        for x in 0..m {
            out.set(hub, hub + 1 + x, -1.0);
            for y in x..m {
                let shift = if x == y { 1.0 } else { 0.0 };
                out.set(hub + 1 + x, hub + 1 + y, lh.get(x, y) + shift);
            }
        }
    }
    out
}

/// Parses a satellite descriptor for a base graph on `n` vertices.
///
/// A single graph spec (`k1`, `empty:6`, `path:3`, `@file.json`, ...) is
/// repeated at every base vertex; a comma-separated list fills the slots in
/// order and must have exactly `n` entries.
pub fn parse_satellite_spec(spec: &str, n: usize) -> Result<Vec<Graph>> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let graphs = parts
        .iter()
        .map(|p| parse_graph_spec(p))
        .collect::<Result<Vec<_>>>()?;
    match graphs.len() {
        1 => Ok(vec![graphs[0].clone(); n]),
        k if k == n => Ok(graphs),
        k => invalid(format!(
            "{k} satellites given for a base graph on {n} vertices"
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, Family};

    fn k(n: usize) -> Graph {
        build_named(Family::Complete, n).unwrap()
    }

    fn o(n: usize) -> Graph {
        build_named(Family::Empty, n).unwrap()
    }

    #[test]
    fn k2_corona_k1_is_p4_in_path_order() {
        let c = corona(&k(2), &[k(1), k(1)]).unwrap();
        // (0,1)-(0,0)-(1,0)-(1,1) -> flat 1-0-2-3
        let flat = c.flat();
        assert_eq!(flat.n(), 4);
        assert_eq!(
            flat.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (2, 3)]
        );
        assert_eq!(flat.label(3), Some("(1,1)"));
    }

    #[test]
    fn double_star_shape() {
        let c = corona(&k(2), &[o(6), o(6)]).unwrap();
        let degrees = c.flat().degrees();
        assert_eq!(c.flat().n(), 14);
        assert_eq!(c.flat().edge_count(), 13);
        assert_eq!(degrees, vec![7, 1, 1, 1, 1, 1, 1, 7, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn block_assembly_matches_flat_laplacian() {
        let g = build_named(Family::Path, 3).unwrap();
        let hs = vec![o(2), k(2), o(2)];
        let c = corona(&g, &hs).unwrap();
        assert_eq!(
            corona_laplacian_blocks(&g, &hs).unwrap(),
            c.flat().laplacian()
        );
        let p4 = corona(&k(2), &[k(1), k(1)]).unwrap();
        assert_eq!(p4.laplacian_blocks(), p4.flat().laplacian());
    }

    #[test]
    fn double_star_diagonal() {
        let l = corona_laplacian_blocks(&k(2), &[o(6), o(6)]).unwrap();
        let diag: Vec<f64> = (0..14).map(|i| l.get(i, i)).collect();
        assert_eq!(
            diag,
            vec![7., 1., 1., 1., 1., 1., 1., 7., 1., 1., 1., 1., 1., 1.]
        );
    }

    #[test]
    fn hub_degree_is_base_degree_plus_m() {
        let g = build_named(Family::Hypercube, 2).unwrap();
        let hs = vec![o(3), build_named(Family::Path, 3).unwrap(), k(3), o(3)];
        let c = corona(&g, &hs).unwrap();
        let deg = c.flat().degrees();
        for u in 0..4 {
            assert_eq!(deg[c.hub(u)], 2 + 3);
            let hdeg = hs[u].degrees();
            for w in 1..=3 {
                let idx = c.index(CoronaVertex { base: u, offset: w });
                assert_eq!(deg[idx], hdeg[w - 1] + 1);
                assert_eq!(c.vertex(idx), CoronaVertex { base: u, offset: w });
            }
        }
    }

    #[test]
    fn rejects_bad_satellites() {
        assert!(corona(&k(2), &[k(1)]).is_err());
        assert!(corona(&k(2), &[k(1), k(2)]).is_err());
        assert!(corona(&k(2), &[Graph::new(0), Graph::new(0)]).is_err());
        assert!(corona(&Graph::new(0), &[]).is_err());
    }

    #[test]
    fn homogeneous_matches_repeated_list() {
        let g = build_named(Family::Cycle, 4).unwrap();
        let h = build_named(Family::Path, 2).unwrap();
        assert_eq!(
            CoronaGraph::homogeneous(&g, &h).unwrap(),
            corona(&g, &vec![h.clone(); 4]).unwrap()
        );
    }

    #[test]
    fn satellite_spec_broadcast_and_list() {
        let hs = parse_satellite_spec("empty:6", 2).unwrap();
        assert_eq!(hs, vec![o(6), o(6)]);
        let hs = parse_satellite_spec("k1", 3).unwrap();
        assert_eq!(hs.len(), 3);
        let hs = parse_satellite_spec("path:3, complete:3", 2).unwrap();
        assert_eq!(hs[1], k(3));
        assert!(parse_satellite_spec("k1,k1", 3).is_err());
    }
}
