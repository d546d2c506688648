//! Mean payoff games on bipartite weighted digraphs.
//!
//! Player 1 owns vertices `0..n1`, player 2 owns `n1..n1+n2`; the token
//! alternates sides and play is infinite. Player 1 wins when the liminf
//! average edge weight is strictly positive. Both players have optimal
//! positional strategies, so the game value is a rational with denominator
//! at most `|V|`; [`MeanPayoffGame::value_bruteforce`] computes it exactly
//! by strategy enumeration, and [`MeanPayoffGame::decide`] by finite value
//! iteration with a sound interval test around the start vertex's estimate.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::scalar::{from_usize, Scalar};

/// Default vertex cap for exact value computation by strategy enumeration.
pub const BRUTE_FORCE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanPayoffGame<I> {
    n1: usize,
    n2: usize,
    edges: Vec<(usize, usize, I)>,
    start: usize,
}

impl<I: Scalar> MeanPayoffGame<I> {
    /// Validates bipartite alternation, positive out-degrees, and the start
    /// vertex (player 1 moves first).
    pub fn new(n1: usize, n2: usize, edges: Vec<(usize, usize, I)>, start: usize) -> Result<Self> {
        let total = n1 + n2;
        if start >= n1 {
            return Err(Error::Invalid("start vertex must belong to player 1".into()));
        }
        let mut outdeg = vec![0usize; total];
        for (u, v, _) in &edges {
            if *u >= total || *v >= total {
                return Err(Error::Invalid("edge endpoint out of range".into()));
            }
            if (*u < n1) == (*v < n1) {
                return Err(Error::Invalid("edges must alternate between the players".into()));
            }
            outdeg[*u] += 1;
        }
        if outdeg.iter().any(|d| *d == 0) {
            return Err(Error::Invalid("every vertex needs an outgoing edge".into()));
        }
        Ok(Self { n1, n2, edges, start })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn vertices(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn edges(&self) -> &[(usize, usize, I)] {
        &self.edges
    }

    pub fn start(&self) -> usize {
        self.start
    }

    fn owned_by_p1(&self, v: usize) -> bool {
        v < self.n1
    }

    fn out_edges(&self) -> Vec<Vec<(usize, I)>> {
        let mut adj = vec![Vec::new(); self.vertices()];
        for (u, v, w) in &self.edges {
            adj[*u].push((*v, w.clone()));
        }
        adj
    }

    /// Exact game value from the start vertex: the minimax over positional
    /// strategy pairs of the mean weight of the eventually reached cycle.
    pub fn value_bruteforce(&self) -> Result<Ratio<I>> {
        self.value_bruteforce_capped(BRUTE_FORCE_CAP)
    }

    pub fn value_bruteforce_capped(&self, cap: usize) -> Result<Ratio<I>> {
        if self.vertices() > cap {
            return Err(Error::Budget(format!(
                "{} vertices exceed the brute-force cap {cap}",
                self.vertices()
            )));
        }
        let adj = self.out_edges();
        let pairs: u128 = adj.iter().map(|a| a.len() as u128).product();
        if pairs > 10_000_000 {
            return Err(Error::Budget("too many strategy pairs".into()));
        }
        // choice[v] indexes the edge each owner takes from v; both players'
        // choices live in one vector and are enumerated odometer-style, the
        // inner loop re-enumerating player 2 for each player-1 strategy.
        let p1_vertices: Vec<usize> = (0..self.vertices())
            .filter(|&v| self.owned_by_p1(v))
            .collect();
        let p2_vertices: Vec<usize> = (0..self.vertices())
            .filter(|&v| !self.owned_by_p1(v))
            .collect();
        let mut best: Option<Ratio<I>> = None;
        let mut choice = vec![0usize; self.vertices()];
        loop {
            // Player 2 minimizes against the fixed player-1 strategy.
            let mut worst: Option<Ratio<I>> = None;
            loop {
                let mean = self.cycle_mean(&adj, &choice);
                worst = Some(match worst {
                    Some(w) if w <= mean => w,
                    _ => mean,
                });
                if !advance(&mut choice, &p2_vertices, &adj) {
                    break;
                }
            }
            let worst = worst.expect("at least one strategy");
            best = Some(match best {
                Some(b) if b >= worst => b,
                _ => worst,
            });
            if !advance(&mut choice, &p1_vertices, &adj) {
                break;
            }
        }
        Ok(best.expect("at least one strategy"))
    }

    /// Mean weight of the cycle reached from the start under fixed choices.
    fn cycle_mean(&self, adj: &[Vec<(usize, I)>], choice: &[usize]) -> Ratio<I> {
        let mut seen_at = vec![usize::MAX; self.vertices()];
        let mut path: Vec<(usize, I)> = Vec::new(); // (vertex, weight of edge leaving it)
        let mut v = self.start;
        loop {
            if seen_at[v] != usize::MAX {
                let cycle = &path[seen_at[v]..];
                let sum = cycle
                    .iter()
                    .fold(I::zero(), |acc, (_, w)| acc + w.clone());
                return Ratio::new(sum, from_usize::<I>(cycle.len()));
            }
            seen_at[v] = path.len();
            let (next, w) = &adj[v][choice[v]];
            path.push((v, w.clone()));
            v = *next;
        }
    }

    /// Does player 1 win (value strictly positive)?
    ///
    /// Value iteration `ν_k(u) = opt (w + ν_{k-1}(v))`. The classical bound
    /// `|ν_k(start) - k·value| ≤ 2|V|·W` brackets the value; since the value
    /// is a rational with denominator at most `|V|`, the game is won exactly
    /// when the value reaches `1/|V|`, and the bracket separates the two
    /// outcomes after at most `4|V|²·W + 1` rounds (well inside the
    /// `4|V|³·W` horizon that guarantees exact rounding).
    pub fn decide(&self) -> Result<bool> {
        let n = self.vertices();
        let nn = from_usize::<I>(n);
        let w_max = self
            .edges
            .iter()
            .map(|(_, _, w)| w.abs())
            .max()
            .expect("edges nonempty");
        let slack = from_usize::<I>(2) * nn.clone() * w_max.clone();
        let horizon = (from_usize::<I>(4) * nn.clone() * nn.clone() * w_max + I::one() + I::one())
            .to_u64()
            .ok_or_else(|| Error::Budget("value-iteration horizon out of range".into()))?;
        let adj = self.out_edges();
        let mut nu = vec![I::zero(); n];
        let mut next = vec![I::zero(); n];
        for k in 1..=horizon {
            for v in 0..n {
                let mut opt: Option<I> = None;
                for (to, w) in &adj[v] {
                    let cand = w.clone() + nu[*to].clone();
                    opt = Some(match opt {
                        Some(o) => {
                            if self.owned_by_p1(v) {
                                if cand > o { cand } else { o }
                            } else if cand < o {
                                cand
                            } else {
                                o
                            }
                        }
                        None => cand,
                    });
                }
                next[v] = opt.expect("out-degree >= 1");
            }
            std::mem::swap(&mut nu, &mut next);
            let at_start = nu[self.start].clone();
            // value ≥ (ν_k - 2nW)/k > 0 certifies a win,
            // value ≤ (ν_k + 2nW)/k < 1/n certifies a loss.
            if at_start > slack {
                return Ok(true);
            }
            if nn.clone() * (at_start + slack.clone()) < I::from_u64(k).expect("k fits") {
                return Ok(false);
            }
        }
        Err(Error::Internal("value iteration exhausted its horizon".into()))
    }

    /// The complementary game: player roles swap, weights map through
    /// `w ↦ -((N+1)·w - 1)` with `N = |V|` so a value of exactly zero turns
    /// into a strict win, and a fresh start vertex passes the first move to
    /// the (old) first player. `decide` of the result is the negation of
    /// `decide` of the original.
    pub fn negate(&self) -> Self {
        let n = from_usize::<I>(self.vertices());
        let new_n1 = self.n2 + 1;
        let remap = |v: usize| -> usize {
            if v < self.n1 {
                new_n1 + v // player 1 vertices become player 2's
            } else {
                1 + (v - self.n1) // player 2 vertices join the new player 1
            }
        };
        let mut edges: Vec<(usize, usize, I)> = self
            .edges
            .iter()
            .map(|(u, v, w)| {
                let scaled = (n.clone() + I::one()) * w.clone() - I::one();
                (remap(*u), remap(*v), scaled.neg())
            })
            .collect();
        edges.push((0, remap(self.start), I::zero()));
        Self { n1: new_n1, n2: self.n1, edges, start: 0 }
    }
}

/// Odometer step over the strategy choices of the given vertices.
fn advance<I>(choice: &mut [usize], vertices: &[usize], adj: &[Vec<(usize, I)>]) -> bool {
    for &v in vertices.iter().rev() {
        choice[v] += 1;
        if choice[v] < adj[v].len() {
            return true;
        }
        choice[v] = 0;
    }
    false
}

/// Disjoint union behind a fresh alternation pair: a new start (player 1)
/// passes to a new player-2 vertex that can enter any copy. Player 1 wins
/// the combination iff they win every component.
pub fn combine_and<I: Scalar>(games: &[MeanPayoffGame<I>]) -> Result<MeanPayoffGame<I>> {
    if games.is_empty() {
        return Err(Error::Invalid("combine_and needs at least one game".into()));
    }
    let total_n1: usize = 1 + games.iter().map(|g| g.n1).sum::<usize>();
    let total_n2: usize = 1 + games.iter().map(|g| g.n2).sum::<usize>();
    let s2 = total_n1; // first vertex of the player-2 side
    let mut edges: Vec<(usize, usize, I)> = vec![(0, s2, I::zero())];
    let mut off1 = 1usize;
    let mut off2 = total_n1 + 1;
    for g in games {
        let remap = |v: usize| -> usize {
            if v < g.n1 {
                off1 + v
            } else {
                off2 + (v - g.n1)
            }
        };
        edges.push((s2, remap(g.start), I::zero()));
        for (u, v, w) in &g.edges {
            edges.push((remap(*u), remap(*v), w.clone()));
        }
        off1 += g.n1;
        off2 += g.n2;
    }
    MeanPayoffGame::new(total_n1, total_n2, edges, 0)
}
