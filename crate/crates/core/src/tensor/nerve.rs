use crate::error::Result;
use crate::groups::GraphSpec;

/// Simplices of the clique complex of `graph`: every non-empty vertex set
/// spanning a complete subgraph, each listed in vertex order. Simplices come
/// by dimension, then lexicographically by vertex index.
pub fn nerve_cliques(graph: &GraphSpec) -> Result<Vec<Vec<String>>> {
    let adj = graph.adjacency()?;
    let n = graph.vertices.len();
    let mut layer: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut out = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for s in &layer {
            let last = *s.last().expect("simplices are non-empty");
            for v in last + 1..n {
                if s.iter().all(|&u| adj[u][v]) {
                    let mut t = s.clone();
                    t.push(v);
                    next.push(t);
                }
            }
        }
        out.extend(
            layer
                .into_iter()
                .map(|s| s.into_iter().map(|v| graph.vertices[v].clone()).collect()),
        );
        layer = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn square_and_triangle() {
        let square = GraphSpec::new(
            names(&["A", "B", "C", "D"]),
            vec![
                ("A".into(), "B".into()),
                ("B".into(), "C".into()),
                ("C".into(), "D".into()),
                ("A".into(), "D".into()),
            ],
        )
        .unwrap();
        let s = nerve_cliques(&square).unwrap();
        assert_eq!(s.iter().filter(|c| c.len() == 1).count(), 4);
        assert_eq!(s.iter().filter(|c| c.len() == 2).count(), 4);
        assert!(s.iter().all(|c| c.len() <= 2));
        let k3 = GraphSpec::complete(names(&["A", "B", "C"]));
        assert_eq!(nerve_cliques(&k3).unwrap().len(), 7);
        let empty = GraphSpec::new(names(&["A", "B"]), vec![]).unwrap();
        assert_eq!(nerve_cliques(&empty).unwrap(), vec![names(&["A"]), names(&["B"])]);
    }
}
