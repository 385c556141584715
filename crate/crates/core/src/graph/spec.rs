use super::{build_named, Family, Graph};
use crate::error::{invalid, Result};

/// Parses a graph descriptor.
///
/// Accepted forms:
/// - `family:size`, e.g. `empty:6`, `cocktail_party:3`
/// - short names `k2`, `o6`, `p3`, `c5`, `q3`, `cp3`, `m2`
/// - `@path/to/graph.json`, or any path ending in `.json`
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        return Graph::read_file(path);
    }
    if spec.ends_with(".json") {
        return Graph::read_file(spec);
    }
    let (name, size) = match spec.split_once(':') {
        Some((name, size)) => (name, size),
        None => {
            let split = spec
                .find(|c: char| c.is_ascii_digit())
                .unwrap_or(spec.len());
            spec.split_at(split)
        }
    };
    if name.is_empty() || size.is_empty() {
        return invalid(format!("cannot parse graph spec {spec:?}"));
    }
    let family: Family = name.parse()?;
    let size: usize = size
        .parse()
        .map_err(|_| crate::Error::InvalidArgument(format!("bad size in graph spec {spec:?}")))?;
    build_named(family, size)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_and_long_forms_agree() {
        let pairs = [
            ("k1", "complete:1"),
            ("k2", "complete:2"),
            ("o6", "empty:6"),
            ("p3", "path:3"),
            ("q3", "hypercube:3"),
            ("cp3", "cocktail_party:3"),
            ("c5", "cycle:5"),
        ];
        for (a, b) in pairs {
            assert_eq!(
                parse_graph_spec(a).unwrap(),
                parse_graph_spec(b).unwrap(),
                "{a}"
            );
        }
        assert_eq!(parse_graph_spec("q3").unwrap().n(), 8);
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "k", "7", "zz3", "path:x", "k0"] {
            assert!(parse_graph_spec(s).is_err(), "{s:?}");
        }
    }

    #[test]
    fn reads_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.json");
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        g.write_file(&path).unwrap();
        let at = format!("@{}", path.display());
        assert_eq!(parse_graph_spec(&at).unwrap(), g);
        assert_eq!(parse_graph_spec(path.to_str().unwrap()).unwrap(), g);
    }
}
