#![allow(dead_code)]

use coronawalk::graph::{build_named, Family, Graph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_connected<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Connected base on `n_range` vertices and `n` random satellites of one
/// common order drawn from `1..=m_max`.
pub fn random_corona<R: Rng>(
    rng: &mut R,
    n_range: std::ops::RangeInclusive<usize>,
    m_max: usize,
) -> (Graph, Vec<Graph>) {
    let n = rng.gen_range(n_range);
    let g = random_connected(rng, n);
    let m = rng.gen_range(1..=m_max);
    let hs = (0..n)
        .map(|_| {
            let p = rng.gen_range(0.0..1.0);
            random_graph(rng, m, p)
        })
        .collect();
    (g, hs)
}

pub fn named(f: Family, k: usize) -> Graph {
    build_named(f, k).unwrap()
}

pub fn fig2_satellites() -> Vec<Graph> {
    vec![
        named(Family::Empty, 3),
        named(Family::Path, 3),
        Graph::from_edges(3, [(0, 1)]).unwrap(),
        named(Family::Complete, 3),
    ]
}

#[derive(Deserialize)]
pub struct Entry {
    pub ell: u64,
    pub fidelity: f64,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub pair: Option<[usize; 2]>,
}

#[derive(Deserialize)]
pub struct Group {
    pub target: f64,
    pub entries: Vec<Entry>,
}

#[derive(Deserialize)]
pub struct PgstBounds {
    pub double_star: Group,
    pub hypercube_shifted: Group,
    pub cocktail: Group,
}

pub fn pgst_bounds() -> PgstBounds {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/pgst_bounds.json"
    );
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}
