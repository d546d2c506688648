//! Eliminating `+∞` from tropical systems: a `Z∞` system is solvable iff one
//! of `n` derived finite systems is, and a witness of the derived system maps
//! back to a `Z∞` witness by a closure over "reachable" columns.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::extint::{ExtInt, Finite, Inf};
use crate::scalar::{from_usize, Scalar};
use crate::system::{Domain, TropicalSystem};

use super::solve_tropical;

/// Derived constants: entries of the canonical matrix are at most `m - 1`.
struct InfConstants<I> {
    alpha: I,
    beta: I,
    gamma: I,
}

fn constants<I: Scalar>(a: &TropicalSystem<I>) -> InfConstants<I> {
    let m = a.max_finite().unwrap_or_else(I::zero) + I::one();
    let beta = from_usize::<I>(100) * m.clone() * from_usize::<I>(a.ncols());
    InfConstants {
        alpha: beta.clone() + beta.clone(),
        gamma: beta.clone() + beta.clone() + beta.clone(),
        beta,
    }
}

fn check_canonical<I: Scalar>(a: &TropicalSystem<I>) -> Result<()> {
    if a.rows().iter().any(|r| r.iter().all(|e| e.is_inf())) {
        return Err(Error::Invalid("all-infinite row; canonicalize first".into()));
    }
    for j in 0..a.ncols() {
        if a.rows().iter().all(|r| r[j].is_inf()) {
            return Err(Error::Invalid("all-infinite column; canonicalize first".into()));
        }
    }
    if a
        .rows()
        .iter()
        .flatten()
        .any(|e| e.finite().map_or(false, |v| v.is_negative()))
    {
        return Err(Error::Invalid("negative entry; normalize first".into()));
    }
    Ok(())
}

/// The finite `(m+n-1) × (2n-1)` system `A_i`: left block is `A` with `∞`
/// replaced by `α` and column `i` removed, right block is the full
/// `∞ → α` substitution; the bottom rows tie each left column to the right
/// column `i` through a `-β` / `0` pair, with `γ` padding elsewhere.
///
/// `A` is solvable over `Z∞` iff some `A_i` is solvable over `Z`.
pub fn inf_elimination<I: Scalar>(
    a: &TropicalSystem<I>,
    i: usize,
) -> Result<TropicalSystem<I>> {
    check_canonical(a)?;
    let n = a.ncols();
    if i >= n {
        return Err(Error::Invalid("eliminated column out of range".into()));
    }
    let InfConstants { alpha, beta, gamma } = constants(a);
    let subst = |e: &ExtInt<I>| -> I {
        e.finite().cloned().unwrap_or_else(|| alpha.clone())
    };
    let mut rows: Vec<Vec<ExtInt<I>>> = Vec::with_capacity(a.nrows() + n - 1);
    for row in a.rows() {
        let mut out = Vec::with_capacity(2 * n - 1);
        for (j, e) in row.iter().enumerate() {
            if j != i {
                out.push(Finite(subst(e)));
            }
        }
        out.extend(row.iter().map(|e| Finite(subst(e))));
        rows.push(out);
    }
    let y_cols: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    for (r, _) in y_cols.iter().enumerate() {
        let mut out = Vec::with_capacity(2 * n - 1);
        for t in 0..n - 1 {
            out.push(Finite(if t == r { beta.clone().neg() } else { gamma.clone() }));
        }
        for c in 0..n {
            out.push(Finite(if c == i { I::zero() } else { gamma.clone() }));
        }
        rows.push(out);
    }
    TropicalSystem::new(rows, Domain::Int)
}

/// Maps a witness `(y, z)` of `A_i` back to a `Z∞` witness of `A`.
///
/// Starting from the column with the smallest `z`-coordinate, the closure
/// adds, for every finite entry `(r, l)` of `A` with `l` already in the set,
/// the `z`-part columns where row `r` of `A_i + (y,z)` attains its minimum.
/// Coordinates outside the closure become `∞`. The result is verified before
/// being returned.
pub fn reconstruct_inf_solution<I: Scalar>(
    a: &TropicalSystem<I>,
    i: usize,
    yz: &[I],
) -> Result<Vec<ExtInt<I>>> {
    check_canonical(a)?;
    let n = a.ncols();
    if yz.len() != 2 * n - 1 {
        return Err(Error::Shape("witness length must be 2n-1".into()));
    }
    let InfConstants { alpha, .. } = constants(a);
    let y = &yz[..n - 1];
    let z = &yz[n - 1..];
    let y_cols: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let subst = |e: &ExtInt<I>| -> I {
        e.finite().cloned().unwrap_or_else(|| alpha.clone())
    };

    let j0 = (0..n)
        .min_by_key(|&c| (z[c].clone(), c))
        .expect("n >= 1");
    let mut closure: BTreeSet<usize> = BTreeSet::new();
    let mut stack = vec![j0];
    closure.insert(j0);
    while let Some(l) = stack.pop() {
        for row in a.rows() {
            if row[l].is_inf() {
                continue;
            }
            // Minima of row r of A_i + (y,z); they land in the z-part.
            let mut best: Option<I> = None;
            let mut argmin: Vec<(bool, usize)> = Vec::new();
            let mut consider = |v: I, tag: (bool, usize)| match &best {
                Some(b) if *b < v => {}
                Some(b) if *b == v => argmin.push(tag),
                _ => {
                    best = Some(v);
                    argmin = vec![tag];
                }
            };
            for (t, &col) in y_cols.iter().enumerate() {
                consider(subst(&row[col]) + y[t].clone(), (false, col));
            }
            for (c, zc) in z.iter().enumerate() {
                consider(subst(&row[c]) + zc.clone(), (true, c));
            }
            for (is_z, c) in argmin {
                if is_z && closure.insert(c) {
                    stack.push(c);
                }
            }
        }
    }
    let x: Vec<ExtInt<I>> = (0..n)
        .map(|c| {
            if closure.contains(&c) {
                Finite(z[c].clone())
            } else {
                Inf
            }
        })
        .collect();
    if !a.is_solution(&x)? {
        return Err(Error::Internal("reconstructed vector is not a solution".into()));
    }
    Ok(x)
}

/// Combines finite systems so the result is solvable iff some input is.
///
/// Inputs are row-normalized, padded to a common row count by duplicating
/// their last row (which never changes a solution set), and laid out in
/// block columns with `δ` added off-diagonal. Any `δ` exceeding the largest
/// entry works; the default `(M+1)(N+1)` also clears the witness-coordinate
/// bound of the participating systems.
pub fn combine_or<I: Scalar>(
    systems: &[TropicalSystem<I>],
    delta: Option<I>,
) -> Result<TropicalSystem<I>> {
    if systems.is_empty() {
        return Err(Error::Invalid("combine_or needs at least one system".into()));
    }
    if systems
        .iter()
        .any(|s| s.rows().iter().flatten().any(|e| e.is_inf()))
    {
        return Err(Error::Invalid("combine_or expects finite systems".into()));
    }
    if systems.len() == 1 {
        return Ok(systems[0].clone());
    }
    let normalized: Vec<TropicalSystem<I>> = systems
        .iter()
        .map(|s| s.normalize().0.expect("finite systems keep all rows"))
        .collect();
    let m_rows = normalized.iter().map(|s| s.nrows()).max().expect("nonempty");
    let m_max = normalized
        .iter()
        .filter_map(|s| s.max_finite())
        .max()
        .unwrap_or_else(I::zero);
    let n_total: usize = normalized.iter().map(|s| s.ncols()).sum();
    let delta = delta.unwrap_or_else(|| {
        (m_max + I::one()) * (from_usize::<I>(n_total) + I::one())
    });
    if delta < I::one() {
        return Err(Error::Invalid("delta must be positive".into()));
    }
    let mut rows = Vec::with_capacity(systems.len() * m_rows);
    for (r, _) in normalized.iter().enumerate() {
        for l in 0..m_rows {
            let mut row = Vec::with_capacity(n_total);
            for (c, sys) in normalized.iter().enumerate() {
                let src = sys.row(l.min(sys.nrows() - 1));
                if c == r {
                    row.extend(src.iter().cloned());
                } else {
                    row.extend(src.iter().map(|e| e.plus(&delta)));
                }
            }
            rows.push(row);
        }
    }
    TropicalSystem::new(rows, Domain::Int)
}

/// Full `Z∞` solver: canonicalize (drop `∞` rows; an all-`∞` column makes
/// the system trivially solvable), then try each `A_i` with the finite
/// pipeline and map the first witness back.
pub fn solve_tropical_inf<I: Scalar>(
    a: &TropicalSystem<I>,
) -> Result<Option<Vec<ExtInt<I>>>> {
    let n = a.ncols();
    let (norm, _) = a.normalize();
    let Some(norm) = norm else {
        // No constraining rows at all.
        let x = vec![Finite(I::zero()); n];
        return Ok(a.is_solution(&x)?.then_some(x));
    };
    for j in 0..n {
        if norm.rows().iter().all(|r| r[j].is_inf()) {
            // Column of infinities: put 0 there and ∞ everywhere else; every
            // row then evaluates to ∞.
            let x: Vec<ExtInt<I>> = (0..n)
                .map(|c| if c == j { Finite(I::zero()) } else { Inf })
                .collect();
            if !a.is_solution(&x)? {
                return Err(Error::Internal("trivial witness rejected".into()));
            }
            return Ok(Some(x));
        }
    }
    for i in 0..n {
        let ai = inf_elimination(&norm, i)?;
        if let Some(yz) = solve_tropical(&ai)? {
            let x = reconstruct_inf_solution(&norm, i, &yz)?;
            if !a.is_solution(&x)? {
                return Err(Error::Internal("reconstructed witness rejected".into()));
            }
            return Ok(Some(x));
        }
    }
    Ok(None)
}
