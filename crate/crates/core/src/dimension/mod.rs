//! Prevariety dimension through star tables and block triangular forms.
//!
//! A block triangular form of size `d` is an ordered partition of the
//! (logical) columns into nonempty blocks `C_1..C_d` plus an assignment of
//! every row to a block, such that each row meets its block's star condition
//! and has no stars in later blocks. The largest form at a solution `x` has
//! size `local projective dimension + 1`, computed on the star table of the
//! system shifted by `x` and restricted to `x`'s finite coordinates.
//!
//! The maximal-form search is a dynamic program over column subsets; it is
//! validated against naive enumeration of all partitions (see the acceptance
//! suite), not trusted. Global dimension maximizes the local dimension over
//! canonical representatives of all solutions: ordered value-level
//! assignments with consecutive gaps capped at `M+1`, which realize every
//! reachable star table inside the `(M+1)·n` solution-size bound.

mod rank;
mod vc;

pub use rank::tropical_rank;
pub use vc::{min_vertex_cover, vc_to_minplus, vc_to_tropical, Graph};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::extint::{ExtInt, Finite, Inf};
use crate::scalar::Scalar;
use crate::system::{Domain, Relation, StarTable, SystemRef};

/// Which star condition a form is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BtfKind {
    /// One-sided tables: at least two stars in the own block.
    Tropical,
    /// Joint tables, equalities: at least one star in each part.
    MinPlusEq,
    /// Joint tables, inequalities: a star in the B-part forces one in the
    /// A-part of the same block.
    MinPlusIneq,
}

/// Ordered column blocks plus a per-row block assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTriangularForm {
    pub column_blocks: Vec<Vec<usize>>,
    pub row_assignment: Vec<usize>,
}

impl BlockTriangularForm {
    pub fn size(&self) -> usize {
        self.column_blocks.len()
    }
}

/// A checkable witness that the projective dimension is at least `claimed_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCertificate<I> {
    pub witness: Vec<ExtInt<I>>,
    pub form: BlockTriangularForm,
    pub claimed_k: usize,
}

/// Affine dimension counts the all-ones direction, projective does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Affine,
    Projective,
}

/// Per-row star masks over logical columns (`b` is zero for one-sided
/// tables).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct RowStars {
    a: u32,
    b: u32,
}

impl RowStars {
    fn all(self) -> u32 {
        self.a | self.b
    }
}

fn row_masks(t: &StarTable) -> Result<Vec<RowStars>> {
    let n = t.logical_cols();
    if n == 0 {
        return Err(Error::Shape("star table has no columns".into()));
    }
    if n > 16 {
        return Err(Error::Budget(format!("{n} columns exceed the form-search cap of 16")));
    }
    Ok((0..t.nrows())
        .map(|r| {
            let mut a = 0u32;
            let mut b = 0u32;
            for j in t.part_stars(r, 0) {
                a |= 1 << j;
            }
            if t.part().is_some() {
                for j in t.part_stars(r, 1) {
                    b |= 1 << j;
                }
            }
            RowStars { a, b }
        })
        .collect())
}

fn kind_matches_table(t: &StarTable, kind: BtfKind) -> Result<()> {
    let joint = t.part().is_some();
    let needs_joint = kind != BtfKind::Tropical;
    if joint != needs_joint {
        return Err(Error::Invalid("star table kind does not match form kind".into()));
    }
    Ok(())
}

/// Star condition of one row inside its own block. Rows without any star
/// (all-infinite rows of `Z∞` systems) satisfy every kind; they do not
/// affect the maximal size.
fn block_condition(kind: BtfKind, row: RowStars, block: u32) -> bool {
    if row.all() == 0 {
        return true;
    }
    match kind {
        BtfKind::Tropical => (row.a & block).count_ones() >= 2,
        BtfKind::MinPlusEq => row.a & block != 0 && row.b & block != 0,
        BtfKind::MinPlusIneq => row.b & block == 0 || row.a & block != 0,
    }
}

/// Literal check of both form conditions.
pub fn verify_btf(t: &StarTable, f: &BlockTriangularForm, kind: BtfKind) -> Result<bool> {
    kind_matches_table(t, kind)?;
    let n = t.logical_cols();
    let rows = row_masks(t)?;
    let mut covered = 0u32;
    let mut block_masks = Vec::with_capacity(f.column_blocks.len());
    for block in &f.column_blocks {
        if block.is_empty() {
            return Err(Error::Invalid("empty column block".into()));
        }
        let mut mask = 0u32;
        for &c in block {
            if c >= n {
                return Err(Error::Invalid("block column out of range".into()));
            }
            if covered & (1 << c) != 0 || mask & (1 << c) != 0 {
                return Err(Error::Invalid("column appears in two blocks".into()));
            }
            mask |= 1 << c;
        }
        covered |= mask;
        block_masks.push(mask);
    }
    if covered != (1u32 << n) - 1 {
        return Err(Error::Invalid("blocks must cover every column".into()));
    }
    if f.row_assignment.len() != rows.len() {
        return Err(Error::Invalid("one block index per row required".into()));
    }
    for (r, &i) in f.row_assignment.iter().enumerate() {
        if i >= block_masks.len() {
            return Err(Error::Invalid("row assigned to a nonexistent block".into()));
        }
        if !block_condition(kind, rows[r], block_masks[i]) {
            return Ok(false);
        }
        let later: u32 = block_masks[i + 1..].iter().fold(0, |acc, m| acc | m);
        if rows[r].all() & later != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact maximal form size and one witnessing form (the lexicographically
/// smallest block sequence among the maxima).
///
/// Dynamic program over column subsets: `f(S)` is the best number of blocks
/// partitioning suffix `S`. Choosing the first suffix block `T` constrains
/// exactly the rows whose last star falls in `T`; for the inequality kind a
/// failing row may instead escape to any later block, which exists iff
/// `S ≠ T`.
pub fn max_btf(t: &StarTable, kind: BtfKind) -> Result<(usize, BlockTriangularForm)> {
    kind_matches_table(t, kind)?;
    let n = t.logical_cols();
    let rows = row_masks(t)?;
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let valid = |s: u32, tmask: u32| -> bool {
        rows.iter().all(|row| {
            let sm = row.all();
            if sm == 0 || sm & (s & !tmask) != 0 || sm & tmask == 0 {
                return true;
            }
            block_condition(kind, *row, tmask)
                || (kind == BtfKind::MinPlusIneq && s != tmask)
        })
    };
    let mut best = vec![-1i32; (full as usize) + 1];
    best[0] = 0;
    for s in 1..=full {
        let mut b = -1i32;
        let mut t_sub = s;
        while t_sub != 0 {
            if best[(s & !t_sub) as usize] >= 0 && valid(s, t_sub) {
                b = b.max(best[(s & !t_sub) as usize] + 1);
            }
            t_sub = (t_sub - 1) & s;
        }
        best[s as usize] = b;
    }
    if best[full as usize] < 0 {
        return Err(Error::Invalid("no block triangular form exists for this table".into()));
    }

    // Reconstruct greedily: the lexicographically smallest optimal block
    // first.
    let block_list = |mask: u32| -> Vec<usize> {
        (0..n).filter(|j| mask >> j & 1 == 1).collect()
    };
    let mut blocks: Vec<u32> = Vec::new();
    let mut s = full;
    while s != 0 {
        let mut candidates: Vec<u32> = Vec::new();
        let mut t_sub = s;
        while t_sub != 0 {
            if best[(s & !t_sub) as usize] >= 0
                && valid(s, t_sub)
                && best[(s & !t_sub) as usize] + 1 == best[s as usize]
            {
                candidates.push(t_sub);
            }
            t_sub = (t_sub - 1) & s;
        }
        let chosen = candidates
            .into_iter()
            .min_by(|x, y| block_list(*x).cmp(&block_list(*y)))
            .expect("optimum is witnessed");
        blocks.push(chosen);
        s &= !chosen;
    }

    // Rows go to their last-star block; inequality rows escape one block
    // further when their own block fails the condition.
    let row_assignment: Vec<usize> = rows
        .iter()
        .map(|row| {
            let sm = row.all();
            if sm == 0 {
                return 0;
            }
            let last = blocks
                .iter()
                .rposition(|b| sm & b != 0)
                .expect("stars lie in some block");
            if block_condition(kind, *row, blocks[last]) {
                last
            } else {
                debug_assert!(kind == BtfKind::MinPlusIneq && last + 1 < blocks.len());
                last + 1
            }
        })
        .collect();
    let form = BlockTriangularForm {
        column_blocks: blocks.iter().map(|b| block_list(*b)).collect(),
        row_assignment,
    };
    if !verify_btf(t, &form, kind)? {
        return Err(Error::Internal("reconstructed form failed verification".into()));
    }
    Ok((best[full as usize] as usize, form))
}

/// Star table of the system shifted by `x` and restricted to the finite
/// coordinates of `x`; also returns those coordinates.
fn shifted_table<I: Scalar>(
    sys: SystemRef<'_, I>,
    x: &[ExtInt<I>],
) -> Result<(StarTable, Vec<usize>)> {
    let live: Vec<usize> = (0..x.len()).filter(|&j| x[j].is_finite()).collect();
    let shift: Vec<I> = live
        .iter()
        .map(|&j| x[j].finite().cloned().expect("finite"))
        .collect();
    let table = match sys {
        SystemRef::Tropical(a) => {
            let rows: Vec<Vec<ExtInt<I>>> = a
                .rows()
                .iter()
                .map(|row| {
                    live.iter()
                        .zip(&shift)
                        .map(|(&j, d)| row[j].plus(d))
                        .collect()
                })
                .collect();
            let stars = rows
                .iter()
                .map(|row| {
                    let min = row.iter().min().expect("nonempty");
                    row.iter().map(|e| e.is_finite() && e == min).collect()
                })
                .collect();
            StarTable::from_parts(stars, None)
        }
        SystemRef::MinPlus(s) => {
            let stars = s
                .lhs()
                .iter()
                .zip(s.rhs())
                .map(|(l, r)| {
                    let joint: Vec<ExtInt<I>> = live
                        .iter()
                        .zip(&shift)
                        .map(|(&j, d)| l[j].plus(d))
                        .chain(live.iter().zip(&shift).map(|(&j, d)| r[j].plus(d)))
                        .collect();
                    let min = joint.iter().min().expect("nonempty").clone();
                    joint.iter().map(|e| e.is_finite() && *e == min).collect()
                })
                .collect();
            StarTable::from_parts(stars, Some(live.len()))
        }
    };
    Ok((table, live))
}

fn kind_of<I: Scalar>(sys: SystemRef<'_, I>) -> BtfKind {
    match sys {
        SystemRef::Tropical(_) => BtfKind::Tropical,
        SystemRef::MinPlus(s) => match s.relation() {
            Relation::Eq => BtfKind::MinPlusEq,
            Relation::Le => BtfKind::MinPlusIneq,
        },
    }
}

/// Local projective dimension at a solution `x`: maximal form size minus
/// one, on the shifted star table over `x`'s finite coordinates.
pub fn local_dimension<I: Scalar>(sys: SystemRef<'_, I>, x: &[ExtInt<I>]) -> Result<usize> {
    let (d, _, _) = local_dimension_with_form(sys, x)?;
    Ok(d)
}

/// Like [`local_dimension`], also returning the witnessing form and the
/// finite coordinates it is expressed over (original column indices).
pub fn local_dimension_with_form<I: Scalar>(
    sys: SystemRef<'_, I>,
    x: &[ExtInt<I>],
) -> Result<(usize, BlockTriangularForm, Vec<usize>)> {
    if !sys.is_solution(x)? {
        return Err(Error::NotASolution("dimension is defined at solutions".into()));
    }
    let (table, live) = shifted_table(sys, x)?;
    let (size, form) = max_btf(&table, kind_of(sys))?;
    // Express the form over original column indices.
    let form = BlockTriangularForm {
        column_blocks: form
            .column_blocks
            .iter()
            .map(|b| b.iter().map(|&p| live[p]).collect())
            .collect(),
        row_assignment: form.row_assignment,
    };
    Ok((size - 1, form, live))
}

/// Result of a global-dimension search.
#[derive(Clone, Debug)]
pub struct GlobalDimension<I> {
    pub projective: usize,
    pub witness: Vec<ExtInt<I>>,
    pub form: BlockTriangularForm,
}

/// Ordered value-level assignments for the live columns: every ordered set
/// partition of the columns, with each later group's value exceeding the
/// previous by a gap in `1..=max_gap`. Calls `f` for each assignment.
fn for_each_level_assignment<I: Scalar, F>(
    live: &[usize],
    max_gap: u64,
    f: &mut F,
) -> Result<()>
where
    F: FnMut(&[(usize, I)]) -> Result<()>,
{
    fn recurse<I: Scalar, F>(
        remaining: u32,
        value: I,
        first: bool,
        max_gap: u64,
        live: &[usize],
        acc: &mut Vec<(usize, I)>,
        f: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&[(usize, I)]) -> Result<()>,
    {
        if remaining == 0 {
            return f(acc);
        }
        let gaps: Vec<I> = if first {
            vec![I::zero()]
        } else {
            (1..=max_gap)
                .map(|g| I::from_u64(g).expect("gap fits"))
                .collect()
        };
        for gap in gaps {
            let v = value.clone() + gap;
            // Nonempty submasks of the remaining columns form the next group.
            let mut group = remaining;
            loop {
                let before = acc.len();
                for (pos, &col) in live.iter().enumerate() {
                    if group >> pos & 1 == 1 {
                        acc.push((col, v.clone()));
                    }
                }
                recurse(
                    remaining & !group,
                    v.clone(),
                    false,
                    max_gap,
                    live,
                    acc,
                    f,
                )?;
                acc.truncate(before);
                group = (group - 1) & remaining;
                if group == 0 {
                    break;
                }
            }
        }
        Ok(())
    }
    let full: u32 = (1 << live.len()) - 1;
    let mut acc = Vec::new();
    recurse(full, I::zero(), true, max_gap, live, &mut acc, f)
}

fn level_assignment_count(p: usize, max_gap: u64, budget: u64) -> Result<()> {
    // g(r) = sum over first-group sizes s of C(r,s) * gaps * g(r-s).
    let mut binom = vec![vec![0u128; p + 1]; p + 1];
    for r in 0..=p {
        binom[r][0] = 1;
        for s in 1..=r {
            binom[r][s] = binom[r - 1][s - 1] + if s <= r - 1 { binom[r - 1][s] } else { 0 };
        }
    }
    let mut g = vec![0u128; p + 1];
    g[0] = 1;
    for r in 1..=p {
        for s in 1..=r {
            g[r] = g[r].saturating_add(
                binom[r][s]
                    .saturating_mul(max_gap as u128)
                    .saturating_mul(g[r - s]),
            );
        }
    }
    // The first group has no gap choice.
    let mut total: u128 = 0;
    for s in 1..=p.max(1) {
        if s <= p {
            total = total.saturating_add(binom[p][s].saturating_mul(g[p - s]));
        }
    }
    if p == 0 {
        total = 1;
    }
    if total > budget as u128 {
        return Err(Error::Budget(format!(
            "{total} candidate solutions exceed budget {budget}"
        )));
    }
    Ok(())
}

/// Global projective dimension: the maximum of the local dimension over all
/// solutions, or `None` when the system is unsolvable.
///
/// Solutions are enumerated up to the equivalences that leave star tables
/// unchanged: translation by `c·1` (the minimum is pinned to 0) and widening
/// any value gap beyond `M+1`. Over `Z∞`, all proper subsets of coordinates
/// are additionally pinned to `∞`.
pub fn global_dimension<I: Scalar>(
    orig: SystemRef<'_, I>,
    budget: u64,
) -> Result<Option<GlobalDimension<I>>> {
    let normalized_trop;
    let normalized_mp;
    let (sys, m) = match orig {
        SystemRef::Tropical(a) => {
            let (norm, m) = a.normalize();
            let Some(norm) = norm else {
                // Unconstrained: every vector is a solution; the whole space
                // appears, projective dimension n-1.
                let n = a.ncols();
                let x = vec![Finite(I::zero()); n];
                let (d, form, _) = local_dimension_with_form(orig, &x)?;
                return Ok(Some(GlobalDimension { projective: d, witness: x, form }));
            };
            normalized_trop = norm;
            (SystemRef::Tropical(&normalized_trop), m)
        }
        SystemRef::MinPlus(s) => {
            let (norm, m) = s.normalize();
            let Some(norm) = norm else {
                let n = s.ncols();
                let x = vec![Finite(I::zero()); n];
                let (d, form, _) = local_dimension_with_form(orig, &x)?;
                return Ok(Some(GlobalDimension { projective: d, witness: x, form }));
            };
            normalized_mp = norm;
            (SystemRef::MinPlus(&normalized_mp), m)
        }
    };
    let n = sys.ncols();
    let max_gap = m
        .to_u64()
        .ok_or_else(|| Error::Budget("entry range too large for enumeration".into()))?
        + 1;
    let masks: Vec<u32> = if sys.domain() == Domain::IntInf {
        if n > 16 {
            return Err(Error::Budget("too many columns for subset enumeration".into()));
        }
        (0..(1u32 << n) - 1).collect()
    } else {
        vec![0]
    };
    for mask in &masks {
        let p = n - mask.count_ones() as usize;
        level_assignment_count(p, max_gap, budget)?;
    }
    let mut memo: HashMap<(usize, Vec<u64>), usize> = HashMap::new();
    let mut best: Option<(usize, Vec<ExtInt<I>>)> = None;
    for mask in masks {
        let live: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 0).collect();
        let mut x: Vec<ExtInt<I>> = (0..n)
            .map(|j| if mask >> j & 1 == 1 { Inf } else { Finite(I::zero()) })
            .collect();
        let mut visit = |levels: &[(usize, I)]| -> Result<()> {
            for (col, v) in levels {
                x[*col] = Finite(v.clone());
            }
            if !sys.is_solution(&x)? {
                return Ok(());
            }
            let (table, live_cols) = shifted_table(sys, &x)?;
            let key_rows: Vec<u64> = (0..table.nrows())
                .map(|r| {
                    let mut a = 0u64;
                    for j in table.part_stars(r, 0) {
                        a |= 1 << j;
                    }
                    if table.part().is_some() {
                        for j in table.part_stars(r, 1) {
                            a |= 1 << (32 + j);
                        }
                    }
                    a
                })
                .collect();
            let size = match memo.get(&(live_cols.len(), key_rows.clone())) {
                Some(hit) => *hit,
                None => {
                    let (size, _) = max_btf(&table, kind_of(sys))?;
                    memo.insert((live_cols.len(), key_rows), size);
                    size
                }
            };
            let d = size - 1;
            if best.as_ref().map_or(true, |(b, _)| d > *b) {
                best = Some((d, x.clone()));
            }
            Ok(())
        };
        for_each_level_assignment::<I, _>(&live, max_gap, &mut visit)?;
    }
    // The certificate form is rebuilt against the original system, whose
    // star table may carry extra (starless) rows that normalization dropped.
    let Some((d, witness)) = best else {
        return Ok(None);
    };
    let (d2, form, _) = local_dimension_with_form(orig, &witness)?;
    if d2 != d {
        return Err(Error::Internal("dimension changed between scan and certificate".into()));
    }
    Ok(Some(GlobalDimension { projective: d, witness, form }))
}

/// Is the prevariety dimension at least `k` under the given convention?
pub fn decide_dim_at_least<I: Scalar>(
    sys: SystemRef<'_, I>,
    k: usize,
    convention: Convention,
    budget: u64,
) -> Result<bool> {
    Ok(certificate_for(sys, k, convention, budget)?.is_some())
}

/// A verifiable certificate for "dimension ≥ k", when true.
pub fn certificate_for<I: Scalar>(
    sys: SystemRef<'_, I>,
    k: usize,
    convention: Convention,
    budget: u64,
) -> Result<Option<DimensionCertificate<I>>> {
    let Some(g) = global_dimension(sys, budget)? else {
        return Ok(None);
    };
    let dim = match convention {
        Convention::Projective => g.projective,
        Convention::Affine => g.projective + 1,
    };
    if dim < k {
        return Ok(None);
    }
    let claimed_k = match convention {
        Convention::Projective => k,
        // An affine claim of k is a projective claim of k-1; k = 0 is
        // witnessed by any solution.
        Convention::Affine => k.saturating_sub(1),
    };
    Ok(Some(DimensionCertificate {
        witness: g.witness,
        form: g.form,
        claimed_k,
    }))
}

/// Checks a certificate: the witness solves the system, the form is a valid
/// block triangular form of the shifted star table, and its size covers the
/// claim. Malformed certificates are invalid rather than errors.
pub fn verify_certificate<I: Scalar>(
    sys: SystemRef<'_, I>,
    cert: &DimensionCertificate<I>,
) -> bool {
    let Ok(true) = sys.is_solution(&cert.witness) else {
        return false;
    };
    let Ok((table, live)) = shifted_table(sys, &cert.witness) else {
        return false;
    };
    // Blocks are expressed over original columns; map them onto the live
    // (finite) coordinates of the witness.
    let mut pos_of = vec![usize::MAX; cert.witness.len()];
    for (p, &j) in live.iter().enumerate() {
        pos_of[j] = p;
    }
    let mut blocks = Vec::with_capacity(cert.form.column_blocks.len());
    for b in &cert.form.column_blocks {
        let mut out = Vec::with_capacity(b.len());
        for &j in b {
            if j >= pos_of.len() || pos_of[j] == usize::MAX {
                return false;
            }
            out.push(pos_of[j]);
        }
        blocks.push(out);
    }
    let form = BlockTriangularForm {
        column_blocks: blocks,
        row_assignment: cert.form.row_assignment.clone(),
    };
    if cert.form.size() < cert.claimed_k + 1 {
        return false;
    }
    matches!(verify_btf(&table, &form, kind_of(sys)), Ok(true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{TropicalSystem, TwoSidedSystem};

    type T = TropicalSystem<i64>;

    fn ext(v: &[i64]) -> Vec<ExtInt<i64>> {
        v.iter().map(|&x| Finite(x)).collect()
    }

    fn f1() -> T {
        T::from_finite(vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap()
    }

    fn f2() -> T {
        T::from_finite(vec![
            vec![0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![1, 1, 0, 0, 0],
            vec![1, 1, 1, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn verify_btf_f1_examples() {
        let t = f1().star_table();
        // Single block, everything inside: valid.
        let f = BlockTriangularForm {
            column_blocks: vec![vec![0, 1, 2]],
            row_assignment: vec![0, 0],
        };
        assert!(verify_btf(&t, &f, BtfKind::Tropical).unwrap());
        // C1 = {0}, C2 = {1,2}: row 2 (stars {0,2}) has one star in C2.
        let f = BlockTriangularForm {
            column_blocks: vec![vec![0], vec![1, 2]],
            row_assignment: vec![1, 1],
        };
        assert!(!verify_btf(&t, &f, BtfKind::Tropical).unwrap());
    }

    #[test]
    fn verify_btf_f2_example() {
        let t = f2().star_table();
        let f = BlockTriangularForm {
            column_blocks: vec![vec![0], vec![1], vec![2], vec![3, 4]],
            row_assignment: vec![3, 3, 3, 3],
        };
        assert!(verify_btf(&t, &f, BtfKind::Tropical).unwrap());
    }

    #[test]
    fn verify_btf_rejects_malformed() {
        let t = f1().star_table();
        let f = BlockTriangularForm {
            column_blocks: vec![vec![0], vec![1]],
            row_assignment: vec![0, 0],
        };
        assert!(verify_btf(&t, &f, BtfKind::Tropical).is_err()); // column 2 missing
        let f = BlockTriangularForm {
            column_blocks: vec![vec![0, 1, 2]],
            row_assignment: vec![0],
        };
        assert!(verify_btf(&t, &f, BtfKind::Tropical).is_err()); // one row unassigned
    }

    #[test]
    fn max_btf_fixtures() {
        let (d, f) = max_btf(&f1().star_table(), BtfKind::Tropical).unwrap();
        assert_eq!(d, 1);
        assert!(verify_btf(&f1().star_table(), &f, BtfKind::Tropical).unwrap());

        let (d, f) = max_btf(&f2().star_table(), BtfKind::Tropical).unwrap();
        assert_eq!(d, 4);
        assert!(verify_btf(&f2().star_table(), &f, BtfKind::Tropical).unwrap());

        let single = T::from_finite(vec![vec![0, 0]]).unwrap();
        let (d, _) = max_btf(&single.star_table(), BtfKind::Tropical).unwrap();
        assert_eq!(d, 1);
    }

    #[test]
    fn local_dimension_fixtures() {
        assert_eq!(
            local_dimension(SystemRef::Tropical(&f1()), &ext(&[0, 0, 0])).unwrap(),
            0
        );
        assert_eq!(
            local_dimension(SystemRef::Tropical(&f2()), &ext(&[0, 0, 0, 0, 0])).unwrap(),
            3
        );
        assert!(matches!(
            local_dimension(SystemRef::Tropical(&f1()), &ext(&[0, 1, 1])),
            Err(Error::NotASolution(_))
        ));
    }

    #[test]
    fn local_dimension_invariances() {
        let a = f2();
        let x = ext(&[0, 0, 0, 0, 0]);
        let base = local_dimension(SystemRef::Tropical(&a), &x).unwrap();
        let shifted_sys = a.translate_rows(&[3, 1, 4, 1]).unwrap();
        assert_eq!(
            local_dimension(SystemRef::Tropical(&shifted_sys), &x).unwrap(),
            base
        );
        let shifted_x = ext(&[7, 7, 7, 7, 7]);
        assert_eq!(
            local_dimension(SystemRef::Tropical(&a), &shifted_x).unwrap(),
            base
        );
    }

    #[test]
    fn global_dimension_fixtures() {
        let g = global_dimension(SystemRef::Tropical(&f1()), crate::DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(g.projective, 0);
        let g = global_dimension(SystemRef::Tropical(&f2()), crate::DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(g.projective, 3);
        let unsat = T::from_finite(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(global_dimension(SystemRef::Tropical(&unsat), crate::DEFAULT_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn global_matches_plain_grid_on_tiny_systems() {
        use crate::oracles::enumerate_solutions;
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let m = rng.gen_range(1..=3usize);
            let n = rng.gen_range(2..=3usize);
            let rows: Vec<Vec<i64>> = (0..m)
                .map(|_| (0..n).map(|_| rng.gen_range(0..=2i64)).collect())
                .collect();
            let a = T::from_finite(rows).unwrap();
            let fast = global_dimension(SystemRef::Tropical(&a), crate::DEFAULT_BUDGET).unwrap();
            // Wider grid than the (M+1)n bound requires.
            let bound = 2 * 3 * (n as i64);
            let sols =
                enumerate_solutions(SystemRef::Tropical(&a), &bound, crate::DEFAULT_BUDGET)
                    .unwrap();
            let slow = sols
                .iter()
                .map(|x| local_dimension(SystemRef::Tropical(&a), x).unwrap())
                .max();
            assert_eq!(fast.map(|g| g.projective), slow, "system {:?}", a.rows());
        }
    }

    #[test]
    fn decide_and_certify() {
        assert!(decide_dim_at_least(
            SystemRef::Tropical(&f2()),
            4,
            Convention::Affine,
            crate::DEFAULT_BUDGET
        )
        .unwrap());
        assert!(!decide_dim_at_least(
            SystemRef::Tropical(&f1()),
            1,
            Convention::Projective,
            crate::DEFAULT_BUDGET
        )
        .unwrap());
        // Any solvable system has projective dimension >= 0.
        assert!(decide_dim_at_least(
            SystemRef::Tropical(&f1()),
            0,
            Convention::Projective,
            crate::DEFAULT_BUDGET
        )
        .unwrap());

        let cert = certificate_for(
            SystemRef::Tropical(&f2()),
            3,
            Convention::Projective,
            crate::DEFAULT_BUDGET,
        )
        .unwrap()
        .unwrap();
        assert!(verify_certificate(SystemRef::Tropical(&f2()), &cert));

        // Tampering invalidates.
        let mut bad = cert.clone();
        bad.claimed_k += 1;
        assert!(!verify_certificate(SystemRef::Tropical(&f2()), &bad));
        let mut bad = cert.clone();
        // (0,0,0,0,-1) gives row 1 a unique minimum: not a solution.
        bad.witness[4] = Finite(-1);
        assert!(!verify_certificate(SystemRef::Tropical(&f2()), &bad));
        let mut bad = cert;
        bad.form.row_assignment[0] = 0;
        assert!(!verify_certificate(SystemRef::Tropical(&f2()), &bad));
    }

    #[test]
    fn minplus_dimension_at_zero() {
        // lhs = rhs: every vector is a solution; at zero all entries star.
        let s = TwoSidedSystem::from_finite(
            vec![vec![0, 0]],
            vec![vec![0, 0]],
            Relation::Eq,
        )
        .unwrap();
        let d = local_dimension(SystemRef::MinPlus(&s), &ext(&[0, 0])).unwrap();
        assert_eq!(d, 1);
    }
}
