//! Non-commuting graphs, their adjacency and Laplacian matrices, and
//! complete-multipartite detection.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matrix::IntMatrix;

/// Simple undirected graph stored as dense bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    /// Group element index of each vertex.
    labels: Vec<usize>,
    names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub labels: Vec<String>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            labels: (0..n).collect(),
            names: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    /// Graph from a symmetric 0/1 matrix with zero diagonal.
    pub fn from_adjacency(a: &IntMatrix) -> Result<Self> {
        if let Some((row, col)) = a.asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        let mut g = Graph::empty(a.dim());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                match (a[(i, j)], i == j) {
                    (0, _) => {}
                    (1, false) => g.set(i, j),
                    _ => {
                        return Err(Error::InvalidArgument(format!(
                            "adjacency entry ({i},{j}) = {} is not a simple-graph entry",
                            a[(i, j)]
                        )))
                    }
                }
            }
        }
        Ok(g)
    }

    /// `K_{n₁,…,n_p}` with parts laid out consecutively.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let part: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat(i).take(s)).collect();
        let mut g = Graph::empty(part.len());
        for i in 0..part.len() {
            for j in 0..part.len() {
                if part[i] != part[j] {
                    g.set(i, j);
                }
            }
        }
        g
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.bits[i * self.words..(i + 1) * self.words].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    pub fn adjacency(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| i64::from(self.adjacent(i, j)))
    }

    /// `L = D − A`.
    pub fn laplacian(&self) -> IntMatrix {
        let deg = self.degrees();
        IntMatrix::from_fn(self.n, |i, j| if i == j { deg[i] as i64 } else { -i64::from(self.adjacent(i, j)) })
    }

    /// Induced subgraph on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.adjacent(i, j) {
                    g.set(a, b);
                }
            }
        }
        g.labels = keep.iter().map(|&i| self.labels[i]).collect();
        g.names = keep.iter().map(|&i| self.names[i].clone()).collect();
        g
    }

    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&i| self.degree(i) > 0).collect();
        self.induced(&keep)
    }

    /// Part sizes (non-increasing) if the graph is complete multipartite.
    ///
    /// Non-adjacency classes come from union-find over non-adjacent pairs;
    /// the graph qualifies iff every class is independent and every cross
    /// pair is an edge.
    pub fn is_complete_multipartite(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return None;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.adjacent(i, j) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let root: Vec<usize> = (0..self.n).map(|i| find(&mut parent, i)).collect();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if (root[i] == root[j]) == self.adjacent(i, j) {
                    return None;
                }
            }
        }
        let mut counts = std::collections::BTreeMap::<usize, usize>::new();
        for r in root {
            *counts.entry(r).or_default() += 1;
        }
        let mut sizes: Vec<usize> = counts.into_values().collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(sizes)
    }

    pub fn edges(&self) -> Vec<[usize; 2]> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.adjacent(i, j) {
                    out.push([i, j]);
                }
            }
        }
        out
    }

    /// One `u v` line per edge, 0-indexed, `u < v`.
    pub fn to_edge_list(&self) -> String {
        self.edges().iter().map(|[u, v]| format!("{u} {v}\n")).collect()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { vertices: self.n, edges: self.edges(), labels: self.names.clone() }
    }
}

/// Γ(G): vertices are the non-central elements in element order, joined
/// when they do not commute. Abelian groups give the null graph.
pub fn noncommuting_graph(g: &FiniteGroup) -> Graph {
    let keep: Vec<usize> = g.elements().filter(|&x| !g.is_central(x)).collect();
    build(g, keep)
}

/// A⁰(G): the non-commuting relation on all of G, central elements isolated.
pub fn augmented_adjacency(g: &FiniteGroup) -> Graph {
    build(g, g.elements().collect())
}

fn build(g: &FiniteGroup, vertices: Vec<usize>) -> Graph {
    let mut graph = Graph::empty(vertices.len());
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if !g.commutes(vertices[a], vertices[b]) {
                graph.set(a, b);
                graph.set(b, a);
            }
        }
    }
    graph.names = vertices.iter().map(|&x| g.element_name(x)).collect();
    graph.labels = vertices;
    graph
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_dihedral, make_gl2};

    #[test]
    fn dihedral_counts() {
        let d6 = noncommuting_graph(&make_dihedral(3).unwrap());
        assert_eq!((d6.vertex_count(), d6.edge_count()), (5, 9));
        let d8 = noncommuting_graph(&make_dihedral(4).unwrap());
        assert_eq!((d8.vertex_count(), d8.edge_count()), (6, 12));
        assert_eq!(d8.is_complete_multipartite(), Some(vec![2, 2, 2]));
        let d10 = noncommuting_graph(&make_dihedral(5).unwrap());
        assert_eq!(d10.is_complete_multipartite(), Some(vec![4, 1, 1, 1, 1, 1]));
        assert_eq!(d10.degree_sequence(), [vec![8; 5], vec![5; 4]].concat());
    }

    #[test]
    fn d12_degrees() {
        let g = noncommuting_graph(&make_dihedral(6).unwrap());
        assert_eq!(g.degree_sequence(), [vec![8; 6], vec![6; 4]].concat());
    }

    #[test]
    fn abelian_is_null() {
        let g = noncommuting_graph(&make_cyclic(4).unwrap());
        assert!(g.is_null());
        assert_eq!(g.edge_count(), 0);
        assert!(g.degree_sequence().is_empty());
        let a0 = augmented_adjacency(&make_cyclic(4).unwrap());
        assert_eq!(a0.adjacency(), IntMatrix::zeros(4));
    }

    #[test]
    fn gl2_3_parts() {
        let g = noncommuting_graph(&make_gl2(3, None).unwrap());
        assert_eq!(g.vertex_count(), 46);
        let parts = g.is_complete_multipartite().unwrap();
        assert_eq!(parts, [vec![6; 3], vec![4; 4], vec![2; 6]].concat());
    }

    #[test]
    fn augmented_strips_to_graph() {
        let grp = make_dihedral(4).unwrap();
        let a0 = augmented_adjacency(&grp);
        assert_eq!(a0.vertex_count(), 8);
        assert_eq!(a0.without_isolated(), noncommuting_graph(&grp));
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = noncommuting_graph(&make_dihedral(5).unwrap());
        let l = g.laplacian();
        assert!((0..l.dim()).all(|i| l.row(i).iter().sum::<i64>() == 0));
    }

    #[test]
    fn adjacency_roundtrip_and_export() {
        let g = Graph::complete_multipartite(&[2, 1]);
        assert_eq!(Graph::from_adjacency(&g.adjacency()).unwrap().edges(), g.edges());
        assert_eq!(g.to_edge_list(), "0 2\n1 2\n");
        assert_eq!(g.is_complete_multipartite(), Some(vec![2, 1]));
        let bad = IntMatrix::from_rows(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert!(Graph::from_adjacency(&bad).is_err());
        let path = IntMatrix::from_rows(vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(Graph::from_adjacency(&path).unwrap().is_complete_multipartite(), Some(vec![2, 1]));
        let p4 = IntMatrix::from_rows(vec![
            vec![0, 1, 0, 0],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 0],
        ])
        .unwrap();
        assert_eq!(Graph::from_adjacency(&p4).unwrap().is_complete_multipartite(), None);
    }
}
