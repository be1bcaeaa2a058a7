use super::Graph;
use crate::bitset::VertexSet;

/// Recognizes a `k`-tree (`k >= 1`) by peeling simplicial vertices of
/// degree `k` until a `(k+1)`-clique remains.
pub fn ktree_recognize(g: &Graph) -> Option<usize> {
    let n = g.n();
    if g.is_complete() {
        return (n >= 2).then_some(n - 1);
    }
    let k = g.min_degree();
    if k == 0 {
        return None;
    }
    let mut alive = g.vertices();
    while alive.len() > k + 1 {
        let peel = alive.iter().find(|&v| {
            let nb = g.neighbors(v) & alive;
            nb.len() == k && g.is_clique(nb)
        })?;
        alive.remove(peel);
    }
    (alive.len() == k + 1 && g.is_clique(alive)).then_some(k)
}

/// A `k`-tree that is a `(k+1)`-clique or has exactly two vertices of degree `k`.
pub fn is_linear_ktree(g: &Graph, k: usize) -> bool {
    if ktree_recognize(g) != Some(k) {
        return false;
    }
    g.is_complete() || degree_k_vertices(g, k).len() == 2
}

pub(crate) fn degree_k_vertices(g: &Graph, k: usize) -> VertexSet {
    (0..g.n()).filter(|&v| g.degree(v) == k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::figures;

    #[test]
    fn fig4_is_a_linear_3_tree() {
        let g = figures::fig4();
        assert_eq!(ktree_recognize(&g), Some(3));
        assert!(is_linear_ktree(&g, 3));
        assert!(!is_linear_ktree(&g, 2));
        assert_eq!(degree_k_vertices(&g, 3), VertexSet::from_labels(&[1, 6]));
    }

    #[test]
    fn cliques() {
        assert_eq!(ktree_recognize(&Graph::complete(4)), Some(3));
        assert!(is_linear_ktree(&Graph::complete(4), 3));
        assert_eq!(ktree_recognize(&Graph::complete(1)), None);
        assert_eq!(ktree_recognize(&Graph::complete(2)), Some(1));
    }

    #[test]
    fn non_ktrees() {
        // C4: every simplicial-elimination attempt fails
        assert_eq!(ktree_recognize(&Graph::cycle(4)), None);
        assert_eq!(ktree_recognize(&figures::fig7_h()), None);
        assert_eq!(ktree_recognize(&Graph::empty(3)), None);
        // a tree is a 1-tree; a star is not linear, a path is
        assert_eq!(ktree_recognize(&Graph::path(5)), Some(1));
        assert!(is_linear_ktree(&Graph::path(5), 1));
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(ktree_recognize(&star), Some(1));
        assert!(!is_linear_ktree(&star, 1));
    }
}
