//! Rotation-map representation of two-way-labelled regular digraphs.
//!
//! An `M`-regular digraph on `[N]` together with a two-way labelling is a
//! bijection `Rot: [N] x [M] -> [N] x [M]`, where `Rot(u, k) = (v, l)` means
//! the `k`-th edge leaving `u` is the `l`-th edge entering `v`. Multi-edges
//! and self-loops are first-class: everything downstream treats the edge set
//! as a multiset.
//!
//! Indices are 0-based in the API. The `.rot` file format and all CLI output
//! are 1-based (see [`crate::io`]).

use crate::error::{Error, Result};

/// A two-way-labelled regular digraph, stored as its rotation map.
///
/// Immutable after construction, so graphs can be shared freely across
/// product constructions and concurrent experiment trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledDigraph {
    n_vertices: usize,
    degree: usize,
    /// `rot[u * degree + k] = v * degree + l` encodes `Rot(u, k) = (v, l)`.
    rot: Vec<usize>,
}

impl LabelledDigraph {
    /// Builds a graph from an explicit table of `((u, k), (v, l))` entries.
    ///
    /// The table must cover every `(u, k)` exactly once and the images must
    /// form a permutation of `[n] x [m]`.
    pub fn from_rotation_table(
        n: usize,
        m: usize,
        table: &[((usize, usize), (usize, usize))],
    ) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidArgument(
                "graph needs at least one vertex and degree 1".into(),
            ));
        }
        let size = n * m;
        if table.len() != size {
            // With a wrong entry count some (u, k) is necessarily missing or
            // duplicated; report the first uncovered slot below if possible.
            if table.len() < size {
                let mut seen = vec![false; size];
                for &((u, k), _) in table {
                    if u < n && k < m {
                        seen[u * m + k] = true;
                    }
                }
                if let Some(idx) = seen.iter().position(|s| !s) {
                    return Err(Error::IncompleteTable {
                        u: idx / m + 1,
                        k: idx % m + 1,
                    });
                }
            }
            return Err(Error::IncompleteTable { u: 1, k: 1 });
        }
        let mut rot = vec![usize::MAX; size];
        for &((u, k), (v, l)) in table {
            if u >= n || k >= m {
                return Err(Error::OutOfRange {
                    vertex: u + 1,
                    label: k + 1,
                    n,
                    m,
                });
            }
            if rot[u * m + k] != usize::MAX {
                return Err(Error::IncompleteTable { u: u + 1, k: k + 1 });
            }
            if v >= n || l >= m {
                return Err(Error::NotABijection { v: v + 1, l: l + 1 });
            }
            rot[u * m + k] = v * m + l;
        }
        Self::from_encoded(n, m, rot)
    }

    /// Builds a graph from the already-encoded rotation array
    /// (`rot[u * m + k] = v * m + l`), validating bijectivity.
    pub(crate) fn from_encoded(n: usize, m: usize, rot: Vec<usize>) -> Result<Self> {
        let size = n * m;
        debug_assert_eq!(rot.len(), size);
        let mut image_seen = vec![false; size];
        for &enc in &rot {
            if enc >= size {
                return Err(Error::NotABijection {
                    v: enc / m + 1,
                    l: enc % m + 1,
                });
            }
            if image_seen[enc] {
                return Err(Error::NotABijection {
                    v: enc / m + 1,
                    l: enc % m + 1,
                });
            }
            image_seen[enc] = true;
        }
        Ok(Self {
            n_vertices: n,
            degree: m,
            rot,
        })
    }

    /// The trivial 1-regular graph on `[m]` with one self-loop per vertex:
    /// `Rot(k, 0) = (k, 0)` for all `k`. Its transition matrix is the
    /// identity.
    pub fn trivial(m: usize) -> Self {
        assert!(m >= 1, "trivial graph needs at least one vertex");
        Self {
            n_vertices: m,
            degree: 1,
            rot: (0..m).collect(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The image of `(u, k)` under the rotation map.
    pub fn rot_of(&self, u: usize, k: usize) -> Result<(usize, usize)> {
        if u >= self.n_vertices || k >= self.degree {
            return Err(Error::OutOfRange {
                vertex: u + 1,
                label: k + 1,
                n: self.n_vertices,
                m: self.degree,
            });
        }
        Ok(self.rot_unchecked(u, k))
    }

    /// `rot_of` without bounds checks beyond the slice's own.
    #[inline]
    pub(crate) fn rot_unchecked(&self, u: usize, k: usize) -> (usize, usize) {
        let enc = self.rot[u * self.degree + k];
        (enc / self.degree, enc % self.degree)
    }

    /// Projects the rotation map onto its edge multiset: one `(u, v)` pair
    /// per `(u, k)` slot, in row-major slot order.
    pub fn edge_multiset(&self) -> EdgeMultiset {
        let mut edges = Vec::with_capacity(self.n_vertices * self.degree);
        for u in 0..self.n_vertices {
            for k in 0..self.degree {
                let (v, _) = self.rot_unchecked(u, k);
                edges.push((u, v));
            }
        }
        EdgeMultiset {
            n_vertices: self.n_vertices,
            edges,
        }
    }
}

/// An edge multiset of an (intended) regular digraph. Multiplicity and
/// self-loops allowed; `(u, v)` pairs are kept in generation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMultiset {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeMultiset {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::OutOfRange {
                    vertex: u.max(v) + 1,
                    label: 1,
                    n: n_vertices,
                    m: 1,
                });
            }
        }
        Ok(Self { n_vertices, edges })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Checks that every vertex has out-degree and in-degree exactly `m`.
    pub fn validate_regular(&self, m: usize) -> Result<()> {
        let mut out_deg = vec![0usize; self.n_vertices];
        let mut in_deg = vec![0usize; self.n_vertices];
        for &(u, v) in &self.edges {
            out_deg[u] += 1;
            in_deg[v] += 1;
        }
        for v in 0..self.n_vertices {
            if out_deg[v] != m || in_deg[v] != m {
                return Err(Error::NotRegular {
                    vertex: v + 1,
                    degree: m,
                    out_degree: out_deg[v],
                    in_degree: in_deg[v],
                });
            }
        }
        Ok(())
    }

    /// Edges sorted lexicographically, for multiset comparison.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Multiset equality, ignoring generation order.
    pub fn multiset_eq(&self, other: &EdgeMultiset) -> bool {
        self.n_vertices == other.n_vertices && self.sorted_edges() == other.sorted_edges()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_self_loop() {
        let g = LabelledDigraph::from_rotation_table(1, 1, &[((0, 0), (0, 0))]).unwrap();
        assert_eq!(g.rot_of(0, 0).unwrap(), (0, 0));
        assert_eq!(g.n_vertices(), 1);
        assert_eq!(g.degree(), 1);
    }

    #[test]
    fn directed_two_cycle() {
        let g = LabelledDigraph::from_rotation_table(2, 1, &[((0, 0), (1, 0)), ((1, 0), (0, 0))])
            .unwrap();
        assert_eq!(g.rot_of(0, 0).unwrap(), (1, 0));
        assert_eq!(g.rot_of(1, 0).unwrap(), (0, 0));
    }

    #[test]
    fn repeated_image_is_rejected() {
        let err = LabelledDigraph::from_rotation_table(2, 1, &[((0, 0), (1, 0)), ((1, 0), (1, 0))])
            .unwrap_err();
        assert!(matches!(err, Error::NotABijection { v: 2, l: 1 }));
    }

    #[test]
    fn out_of_range_image_is_rejected() {
        let err = LabelledDigraph::from_rotation_table(2, 1, &[((0, 0), (2, 0)), ((1, 0), (0, 0))])
            .unwrap_err();
        assert!(matches!(err, Error::NotABijection { .. }));
    }

    #[test]
    fn missing_slot_is_rejected() {
        let err = LabelledDigraph::from_rotation_table(2, 1, &[((0, 0), (1, 0))]).unwrap_err();
        assert!(matches!(err, Error::IncompleteTable { u: 2, k: 1 }));
    }

    #[test]
    fn duplicate_slot_is_rejected() {
        let err = LabelledDigraph::from_rotation_table(2, 1, &[((0, 0), (1, 0)), ((0, 0), (0, 0))])
            .unwrap_err();
        assert!(matches!(err, Error::IncompleteTable { u: 1, k: 1 }));
    }

    #[test]
    fn trivial_graph_fixes_every_pair() {
        let g = LabelledDigraph::trivial(3);
        for k in 0..3 {
            assert_eq!(g.rot_of(k, 0).unwrap(), (k, 0));
        }
        assert_eq!(g.rot_of(1, 0).unwrap(), (1, 0));
    }

    #[test]
    fn rot_of_range_errors() {
        let g = LabelledDigraph::trivial(3);
        assert!(matches!(g.rot_of(3, 0), Err(Error::OutOfRange { .. })));
        assert!(matches!(g.rot_of(0, 1), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn rotation_map_is_a_permutation() {
        // Exhaustive image counting over all (u, k).
        let g = LabelledDigraph::from_rotation_table(
            2,
            2,
            &[
                ((0, 0), (0, 1)),
                ((0, 1), (1, 0)),
                ((1, 0), (1, 1)),
                ((1, 1), (0, 0)),
            ],
        )
        .unwrap();
        let mut seen = vec![false; 4];
        for u in 0..2 {
            for k in 0..2 {
                let (v, l) = g.rot_of(u, k).unwrap();
                assert!(!seen[v * 2 + l]);
                seen[v * 2 + l] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn edge_multiset_of_trivial_and_cycle() {
        assert_eq!(
            LabelledDigraph::trivial(2).edge_multiset().sorted_edges(),
            vec![(0, 0), (1, 1)]
        );
        let cyc = LabelledDigraph::from_rotation_table(2, 1, &[((0, 0), (1, 0)), ((1, 0), (0, 0))])
            .unwrap();
        assert_eq!(cyc.edge_multiset().sorted_edges(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn edge_multiset_degrees_match_graph_degree() {
        let g = LabelledDigraph::from_rotation_table(
            2,
            2,
            &[
                ((0, 0), (0, 1)),
                ((0, 1), (1, 0)),
                ((1, 0), (1, 1)),
                ((1, 1), (0, 0)),
            ],
        )
        .unwrap();
        g.edge_multiset().validate_regular(g.degree()).unwrap();
    }

    #[test]
    fn regularity_violation_is_reported() {
        let e = EdgeMultiset::new(2, vec![(0, 0), (0, 1)]).unwrap();
        let err = e.validate_regular(1).unwrap_err();
        assert!(matches!(
            err,
            Error::NotRegular {
                vertex: 1,
                out_degree: 2,
                ..
            }
        ));
    }
}
