//! Vertex-Cover-derived hard instances for the dimension problem.
//!
//! For a connected graph the derived 0/1 tropical system has one column per
//! vertex plus a leading all-zero column and one row per edge with zeros
//! exactly at the edge's endpoints; the zero vector solves it and its
//! projective dimension there is `n - min_vertex_cover`. A min-plus variant
//! shifts the first column on the left and the vertex block on the right.

use crate::error::{Error, Result};
use crate::extint::Finite;
use crate::scalar::Scalar;
use crate::system::{Domain, Relation, TropicalSystem, TwoSidedSystem};

/// Simple undirected graph: no self-loops, no duplicate edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Invalid("edge endpoint out of range".into()));
            }
            if u == v {
                return Err(Error::Invalid("self-loops are not allowed".into()));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::Invalid("duplicate edge".into()));
            }
            normalized.push(e);
        }
        Ok(Self { n, edges: normalized })
    }

    pub fn nvertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); self.n];
        for (u, v) in &self.edges {
            adj[*u].push(*v);
            adj[*v].push(*u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }
}

/// Exact minimum vertex cover by subset enumeration (`n ≤ 20`).
pub fn min_vertex_cover(g: &Graph) -> Result<usize> {
    if g.n > 20 {
        return Err(Error::Budget("vertex cover enumeration capped at 20 vertices".into()));
    }
    let mut best = g.n;
    for mask in 0u32..(1 << g.n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if g.edges
            .iter()
            .all(|(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
        {
            best = size;
        }
    }
    Ok(best)
}

/// The `m × (n+1)` 0/1 system: leading zero column, then `(e, v) = 0` iff
/// `v` is an endpoint of `e`. Every row has exactly three zeros.
pub fn vc_to_tropical<I: Scalar>(g: &Graph) -> Result<TropicalSystem<I>> {
    if !g.is_connected() {
        return Err(Error::Invalid("graph must be connected".into()));
    }
    if g.edges.is_empty() {
        return Err(Error::Invalid("graph must have at least one edge".into()));
    }
    let rows: Vec<Vec<I>> = g
        .edges
        .iter()
        .map(|(u, v)| {
            let mut row = vec![I::one(); g.n + 1];
            row[0] = I::zero();
            row[u + 1] = I::zero();
            row[v + 1] = I::zero();
            row
        })
        .collect();
    TropicalSystem::new(
        rows.into_iter()
            .map(|r| r.into_iter().map(Finite).collect())
            .collect(),
        Domain::Int,
    )
}

/// The min-plus equality variant: `(a0 + 1, A') ⊙ x = (a0, A' + 1) ⊙ x`
/// built from the tropical construction `A = (a0, A')`.
pub fn vc_to_minplus<I: Scalar>(g: &Graph) -> Result<TwoSidedSystem<I>> {
    let a = vc_to_tropical::<I>(g)?;
    let one = I::one();
    let lhs: Vec<Vec<_>> = a
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(j, e)| if j == 0 { e.plus(&one) } else { e.clone() })
                .collect()
        })
        .collect();
    let rhs: Vec<Vec<_>> = a
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(j, e)| if j == 0 { e.clone() } else { e.plus(&one) })
                .collect()
        })
        .collect();
    TwoSidedSystem::new(lhs, rhs, Relation::Eq, Domain::Int)
}
