use serde::Serialize;

use super::{is_k_connected, separates};
use crate::error::{Error, Result};
use crate::graph::{edge, verify_separation, Edge, Graph, Path, Separation, Vertex, VertexSet};

/// Which edit of an edge keeps a 3-connected graph 3-connected, or an
/// endpoint of degree 3 when neither does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HalinOutcome {
    ContractionPreserves,
    DeletionPreserves,
    DegreeThreeEndpoint(Vertex),
}

fn require_edge(g: &Graph, (u, v): Edge) -> Result<()> {
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::NotAnEdge { u, v })
    }
}

fn require_3_connected(g: &Graph) -> Result<()> {
    if is_k_connected(g, 3) {
        Ok(())
    } else {
        Err(Error::input("graph is not 3-connected"))
    }
}

pub fn halin_deg3_endpoint(g: &Graph, e: Edge) -> Result<HalinOutcome> {
    require_3_connected(g)?;
    require_edge(g, e)?;
    let (u, v) = e;
    if is_k_connected(&g.contract_edge(u, v)?, 3) {
        return Ok(HalinOutcome::ContractionPreserves);
    }
    if is_k_connected(&g.delete_edge(u, v)?, 3) {
        return Ok(HalinOutcome::DeletionPreserves);
    }
    [u, v]
        .into_iter()
        .find(|&x| g.degree(x) == 3)
        .map(HalinOutcome::DegreeThreeEndpoint)
        .ok_or_else(|| Error::internal(format!("edge {u}-{v} has no degree-3 endpoint although neither edit keeps 3-connectivity")))
}

/// The lexicographically smallest edge at `v` whose contraction keeps the
/// graph 3-connected.
pub fn halin_edge_at_degree3(g: &Graph, v: Vertex) -> Result<Edge> {
    if !g.has_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    if g.vertex_count() < 5 {
        return Err(Error::input("graph has fewer than 5 vertices"));
    }
    require_3_connected(g)?;
    if g.degree(v) != 3 {
        return Err(Error::input(format!("vertex {v} has degree {}, not 3", g.degree(v))));
    }
    let mut incident: Vec<Edge> = g.neighbors(v).map(|w| edge(v, w)).collect();
    incident.sort_unstable();
    for (a, b) in incident {
        if is_k_connected(&g.contract_edge(a, b)?, 3) {
            return Ok((a, b));
        }
    }
    Err(Error::internal(format!("no contractible edge at degree-3 vertex {v}")))
}

/// A nontrivial separation of order 3 with both ends of `e` in the
/// separator, for an edge whose contraction destroys 3-connectivity.
pub fn critical_contraction_separation(g: &Graph, e: Edge) -> Result<Separation> {
    require_edge(g, e)?;
    if g.vertex_count() < 5 {
        return Err(Error::input("graph has fewer than 5 vertices"));
    }
    require_3_connected(g)?;
    let (u, v) = e;
    if is_k_connected(&g.contract_edge(u, v)?, 3) {
        return Err(Error::input(format!("contracting {u}-{v} keeps the graph 3-connected")));
    }
    for w in g.vertices().filter(|&w| w != u && w != v) {
        let x = VertexSet::from([u, v, w]);
        if separates(g, &x) {
            let rest = g.delete_vertices(&x)?;
            let side = rest.components().into_iter().next().expect("disconnected graph has components");
            let a1: VertexSet = side.union(&x).copied().collect();
            let a2: VertexSet = g.vertices().filter(|y| !side.contains(y)).collect();
            let sep = Separation::new(a1, a2);
            if !(verify_separation(g, &sep) && sep.order() == 3 && !sep.is_trivial(g)) {
                return Err(Error::internal("constructed separation failed verification"));
            }
            return Ok(sep);
        }
    }
    Err(Error::internal(format!("no separating triple contains {u} and {v}")))
}

/// An edge of the fan path `p` whose contraction keeps `g` 3-connected.
///
/// The chosen edge `v_i v_{i+1}` is one where the sets of `z`-neighbors seen
/// strictly before and strictly after the position do not change between `i`
/// and `i + 1`.
pub fn contractible_edge_on_fan_path(g: &Graph, p: &Path, z: &VertexSet) -> Result<Edge> {
    require_3_connected(g)?;
    if !p.is_valid_in(g) {
        return Err(Error::input("p is not a path in g"));
    }
    if !p.is_induced_in(g) {
        return Err(Error::input("p is not an induced path"));
    }
    if let Some(x) = z.iter().find(|x| !g.has_vertex(**x)) {
        return Err(Error::UnknownVertex(*x));
    }
    if let Some(x) = p.vertices().iter().find(|x| z.contains(x)) {
        return Err(Error::input(format!("z meets the path at {x}")));
    }
    let on_path = p.vertex_set();
    for &x in p.interior() {
        if let Some(y) = g.neighbors(x).find(|y| !on_path.contains(y) && !z.contains(y)) {
            return Err(Error::input(format!("internal path vertex {x} has neighbor {y} outside the path and z")));
        }
    }
    let len = p.len();
    if len < 2 * z.len() + 3 {
        return Err(Error::input(format!("path length {len} is below 2|z| + 3 = {}", 2 * z.len() + 3)));
    }
    let vs = p.vertices();
    let zn: Vec<VertexSet> = vs.iter().map(|&x| g.neighbors(x).filter(|y| z.contains(y)).collect()).collect();
    let before = |i: usize| -> VertexSet { zn[..i].iter().flatten().copied().collect() };
    let after = |i: usize| -> VertexSet { zn[i + 1..].iter().flatten().copied().collect() };
    let i = (1..=len - 2)
        .find(|&i| before(i) == before(i + 1) && after(i) == after(i + 1))
        .ok_or_else(|| Error::internal("no stable position on the fan path"))?;
    let e = edge(vs[i], vs[i + 1]);
    if !is_k_connected(&g.contract_edge(e.0, e.1)?, 3) {
        return Err(Error::internal(format!("contracting {}-{} broke 3-connectivity", e.0, e.1)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel(rim: Vertex) -> Graph {
        // hub 0, rim 1..=rim
        let mut es: Vec<(Vertex, Vertex)> = (1..=rim).map(|i| (0, i)).collect();
        es.extend((1..=rim).map(|i| (i, i % rim + 1)));
        Graph::from_edges(rim as usize + 1, es).unwrap()
    }

    fn prism() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    fn complete(n: Vertex) -> Graph {
        Graph::from_edges(n as usize, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn degree_three_edge_in_wheel_and_prism() {
        let w = wheel(5);
        for v in 1..=5 {
            let e = halin_edge_at_degree3(&w, v).unwrap();
            assert!(e.0 == v || e.1 == v);
            assert!(is_k_connected(&w.contract_edge(e.0, e.1).unwrap(), 3));
        }
        let p = prism();
        for v in 0..6 {
            let e = halin_edge_at_degree3(&p, v).unwrap();
            // compare with the smallest contractible incident edge
            let mut inc: Vec<Edge> = p.neighbors(v).map(|w| edge(v, w)).collect();
            inc.sort();
            let first = inc.into_iter().find(|e| is_k_connected(&p.contract_edge(e.0, e.1).unwrap(), 3));
            assert_eq!(Some(e), first);
        }
        assert!(matches!(halin_edge_at_degree3(&complete(4), 0), Err(Error::Input(_))));
    }

    #[test]
    fn deg3_endpoint_dichotomy() {
        for (u, v) in complete(4).edges() {
            assert!(matches!(halin_deg3_endpoint(&complete(4), (u, v)).unwrap(), HalinOutcome::DegreeThreeEndpoint(_)));
        }
        for (u, v) in complete(5).edges() {
            assert_ne!(
                std::mem::discriminant(&halin_deg3_endpoint(&complete(5), (u, v)).unwrap()),
                std::mem::discriminant(&HalinOutcome::DegreeThreeEndpoint(0))
            );
        }
        let p = prism();
        for (u, v) in p.edges() {
            let c = is_k_connected(&p.contract_edge(u, v).unwrap(), 3);
            let d = is_k_connected(&p.delete_edge(u, v).unwrap(), 3);
            match halin_deg3_endpoint(&p, (u, v)).unwrap() {
                HalinOutcome::ContractionPreserves => assert!(c),
                HalinOutcome::DeletionPreserves => assert!(!c && d),
                HalinOutcome::DegreeThreeEndpoint(x) => assert!(!c && !d && p.degree(x) == 3),
            }
        }
    }

    #[test]
    fn critical_separation_in_prism() {
        // contracting a triangle edge of the prism leaves a vertex of degree 2
        let p = prism();
        let sep = critical_contraction_separation(&p, (0, 1)).unwrap();
        assert!(verify_separation(&p, &sep));
        assert_eq!(sep.order(), 3);
        assert!(sep.separator().contains(&0) && sep.separator().contains(&1));
        assert!(matches!(critical_contraction_separation(&complete(5), (0, 1)), Err(Error::Input(_))));
    }

    #[test]
    fn fan_path_in_wheel() {
        let w = wheel(7);
        let p = Path(vec![1, 2, 3, 4, 5, 6]);
        let z = VertexSet::from([0]);
        let e = contractible_edge_on_fan_path(&w, &p, &z).unwrap();
        assert!(p.edges().any(|f| f == e));
        assert!(is_k_connected(&w.contract_edge(e.0, e.1).unwrap(), 3));
        let short = Path(vec![1, 2, 3, 4, 5]);
        assert!(matches!(contractible_edge_on_fan_path(&w, &short, &z), Err(Error::Input(_))));
    }
}
