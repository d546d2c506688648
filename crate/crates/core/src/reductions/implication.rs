//! Implication and equivalence of systems as Turing reductions to
//! solvability.
//!
//! Over `Z`: after ruling out the trivial cases (unsolvable system, no
//! common solution), the query row is zeroed out by a column translation and
//! `n(n-1)` auxiliary systems `A_ij` are built, each consisting of the
//! scaled system plus a family of 0/-1 pattern rows that is unsolvable
//! together with the zero row. The row follows from the system iff every
//! `A_ij` is unsolvable.
//!
//! Over `Z∞` a kernel comparison comes first: the set of coordinates forced
//! to `∞` must not grow when the row is added. Both kernel questions reduce
//! to solvability through star-restriction gadgets.
//!
//! All deciders are injected callbacks, so the same constructions run
//! against the solver pipeline or against brute force.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::extint::{ExtInt, Finite, Inf};
use crate::scalar::{from_usize, Scalar};
use crate::system::{Domain, Relation, TropicalSystem, TwoSidedSystem};

use super::map_bridge::{stars_gadget, GadgetParams};

/// Pattern rows of `A_ij` over `n` columns (entries 0 or -1): the non-`i`
/// columns are taken in ascending order with `j` moved last; row `r`
/// (r = 2..n) has -1 at reordered positions `p ≥ r-1` and 0 elsewhere.
fn pattern_rows<I: Scalar>(n: usize, i: usize, j: usize) -> Vec<Vec<ExtInt<I>>> {
    let mut order: Vec<usize> = (0..n).filter(|&c| c != i && c != j).collect();
    order.push(j);
    let neg = I::one().neg();
    (2..=n)
        .map(|r| {
            let mut row = vec![Finite(I::zero()); n];
            for (p, &col) in order.iter().enumerate() {
                if p + 1 >= r - 1 {
                    row[col] = Finite(neg.clone());
                }
            }
            row
        })
        .collect()
}

fn to_finite_row<I: Scalar>(l: &[I]) -> Vec<ExtInt<I>> {
    l.iter().cloned().map(Finite).collect()
}

/// Does the equation `l` follow from the system `a` (over `Z`)?
pub fn implies<I: Scalar, D>(a: &TropicalSystem<I>, l: &[I], decider: D) -> Result<bool>
where
    D: Fn(&TropicalSystem<I>) -> Result<bool>,
{
    let n = a.ncols();
    if l.len() != n {
        return Err(Error::Shape("equation length does not match system".into()));
    }
    if n < 2 {
        return Err(Error::Invalid("implication needs at least two columns".into()));
    }
    if !decider(a)? {
        return Ok(true);
    }
    if !decider(&a.with_row(&to_finite_row(l))?)? {
        return Ok(false);
    }
    let (norm, m_sys) = a.normalize();
    let norm = norm.expect("finite systems keep all rows");
    let l_min = l.iter().min().cloned().expect("nonempty");
    let l_shift: Vec<I> = l.iter().map(|v| v.clone() - l_min.clone()).collect();
    let m_row = l_shift.iter().max().cloned().unwrap_or_else(I::zero);
    let m_bound = m_sys.max(m_row).max(I::one());
    // Zero out l: shift column j by -l_j; solutions move by +l.
    let neg_l: Vec<I> = l_shift.iter().map(|v| v.clone().neg()).collect();
    let zeroed = norm.translate_columns(&neg_l)?;
    let factor = from_usize::<I>(3) * m_bound * from_usize::<I>(n);
    let scaled = zeroed.scale(&factor)?;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut rows = scaled.rows().to_vec();
            rows.extend(pattern_rows::<I>(n, i, j));
            let aij = TropicalSystem::new(rows, Domain::Int)?;
            if decider(&aij)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Two systems over the same variables are equivalent iff each row of either
/// follows from the other.
pub fn equivalent<I: Scalar, D>(
    a: &TropicalSystem<I>,
    b: &TropicalSystem<I>,
    decider: D,
) -> Result<bool>
where
    D: Fn(&TropicalSystem<I>) -> Result<bool>,
{
    if a.ncols() != b.ncols() {
        return Err(Error::Shape("systems have different column counts".into()));
    }
    let finite_rows = |s: &TropicalSystem<I>| -> Result<Vec<Vec<I>>> {
        s.rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| {
                        e.finite()
                            .cloned()
                            .ok_or_else(|| Error::Invalid("equivalence over Z needs finite rows".into()))
                    })
                    .collect()
            })
            .collect()
    };
    for row in finite_rows(b)? {
        if !implies(a, &row, &decider)? {
            return Ok(false);
        }
    }
    for row in finite_rows(a)? {
        if !implies(b, &row, &decider)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does `A ∪ {l}` have a solution whose minimum in the row `l` is finite?
///
/// A star-restriction gadget over the finite part of `l` (with floor
/// `10·M·n`) stands in for the row: solutions of `A ∪ gadget` are exactly
/// the solutions of `A ∪ {l}` with a finite minimum in `l`, bounded ones
/// included. Rows with fewer than two finite coefficients can never attain
/// a finite minimum twice.
pub fn has_finite_min_in_row<I: Scalar, D>(
    a: &TropicalSystem<I>,
    l: &[ExtInt<I>],
    decider: D,
) -> Result<bool>
where
    D: Fn(&TropicalSystem<I>) -> Result<bool>,
{
    let n = a.ncols();
    if l.len() != n {
        return Err(Error::Shape("row length does not match system".into()));
    }
    let positions: Vec<usize> = (0..n).filter(|&j| l[j].is_finite()).collect();
    if positions.len() < 2 {
        return Ok(false);
    }
    let (norm, m_sys) = a.normalize();
    let finite: Vec<I> = positions
        .iter()
        .map(|&j| l[j].finite().cloned().expect("finite position"))
        .collect();
    let f_min = finite.iter().min().cloned().expect("nonempty");
    let c_vec: Vec<I> = finite.iter().map(|v| v.clone() - f_min.clone()).collect();
    let m_row = c_vec.iter().max().cloned().unwrap_or_else(I::zero);
    let m_bound = m_sys.max(m_row).max(I::one());
    let floor = from_usize::<I>(10) * m_bound * from_usize::<I>(n);
    let gadget = stars_gadget(&GadgetParams { a: c_vec, n, c: floor }, &positions)?;
    let mut rows = match &norm {
        Some(sys) => sys.rows().to_vec(),
        None => Vec::new(),
    };
    rows.extend(gadget.rows().iter().cloned());
    let domain = if rows.iter().flatten().any(|e| e.is_inf()) {
        Domain::IntInf
    } else {
        Domain::Int
    };
    decider(&TropicalSystem::new(rows, domain)?)
}

/// Does `A` have a solution with coordinate `i` finite?
///
/// Augments `A` with a fresh all-`∞` column and the row `(0, …, 0 at i, …)`,
/// then asks for a finite minimum in that row.
pub fn has_solution_with_finite_coord<I: Scalar, D>(
    a: &TropicalSystem<I>,
    i: usize,
    decider: D,
) -> Result<bool>
where
    D: Fn(&TropicalSystem<I>) -> Result<bool>,
{
    let n = a.ncols();
    if i >= n {
        return Err(Error::Invalid("coordinate out of range".into()));
    }
    let rows: Vec<Vec<ExtInt<I>>> = a
        .rows()
        .iter()
        .map(|r| {
            let mut out = Vec::with_capacity(n + 1);
            out.push(Inf);
            out.extend(r.iter().cloned());
            out
        })
        .collect();
    let aug = TropicalSystem::new(rows, Domain::IntInf)?;
    let mut last = vec![Inf; n + 1];
    last[0] = Finite(I::zero());
    last[i + 1] = Finite(I::zero());
    has_finite_min_in_row(&aug, &last, decider)
}

/// The kernel: coordinates infinite in every solution. Solutions are closed
/// under pointwise minimum, so the kernel is exactly the set of coordinates
/// admitting no finite value. The system must be solvable.
pub fn kernel<I: Scalar, D>(a: &TropicalSystem<I>, decider: D) -> Result<BTreeSet<usize>>
where
    D: Fn(&TropicalSystem<I>) -> Result<bool>,
{
    if !decider(a)? {
        return Err(Error::Invalid("kernel of an unsolvable system".into()));
    }
    let mut out = BTreeSet::new();
    for i in 0..a.ncols() {
        if !has_solution_with_finite_coord(a, i, &decider)? {
            out.insert(i);
        }
    }
    Ok(out)
}

/// Implication over `Z∞`.
///
/// After the solvability prechecks, the kernels of `A` and `A ∪ {l}` are
/// compared: they differ exactly when `A ∪ {l}` has no solution with a
/// finite minimum in `l` while `A` has a solution with a finite coordinate
/// among `l`'s finite coordinates; different kernels refute the implication.
/// Otherwise the `A_ij` procedure runs with pairs restricted to the finite
/// coordinates of `l`.
pub fn implies_inf<I: Scalar, D>(
    a: &TropicalSystem<I>,
    l: &[ExtInt<I>],
    decider: D,
) -> Result<bool>
where
    D: Fn(&TropicalSystem<I>) -> Result<bool>,
{
    let n = a.ncols();
    if l.len() != n {
        return Err(Error::Shape("row length does not match system".into()));
    }
    if !decider(a)? {
        return Ok(true);
    }
    if !decider(&a.with_row(l)?)? {
        return Ok(false);
    }
    let answer1 = has_finite_min_in_row(a, l, &decider)?;
    let positions: Vec<usize> = (0..n).filter(|&j| l[j].is_finite()).collect();
    let mut answer2 = false;
    for &i in &positions {
        if has_solution_with_finite_coord(a, i, &decider)? {
            answer2 = true;
            break;
        }
    }
    if !answer1 && answer2 {
        return Ok(false);
    }
    if positions.len() < 2 {
        // No pair of finite coordinates to anchor a pattern: the kernel test
        // above already decided these rows.
        return Ok(true);
    }
    let (norm, m_sys) = a.normalize();
    let Some(norm) = norm else {
        // A constrains nothing; rows with finite coefficients are always
        // violated somewhere.
        return Ok(positions.is_empty());
    };
    let f_min = positions
        .iter()
        .map(|&j| l[j].finite().cloned().expect("finite"))
        .min()
        .expect("nonempty");
    let mut shift = vec![I::zero(); n];
    let mut m_row = I::zero();
    for &j in &positions {
        let v = l[j].finite().cloned().expect("finite") - f_min.clone();
        if v > m_row {
            m_row = v.clone();
        }
        shift[j] = v.neg();
    }
    let m_bound = m_sys.max(m_row).max(I::one());
    let zeroed = norm.translate_columns(&shift)?;
    let factor = from_usize::<I>(3) * m_bound * from_usize::<I>(n);
    let scaled = zeroed.scale(&factor)?;
    for &i in &positions {
        for &j in &positions {
            if i == j {
                continue;
            }
            let mut rows = scaled.rows().to_vec();
            rows.extend(pattern_rows::<I>(n, i, j));
            let aij = TropicalSystem::new(rows, scaled.domain())?;
            if decider(&aij)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Implication for two-sided min-plus equalities.
///
/// Same skeleton as [`implies`], with the pattern rows spanning the joint
/// `2n` columns and the pair `(i, j)` ranging over columns on different
/// sides, in both orientations (either side may be the one that keeps the
/// row's minimum). The joint row cannot be zeroed by a column translation
/// (the two sides share variables), so the patterns are added onto the
/// scaled query row instead.
pub fn minplus_implies<I: Scalar, D>(
    s: &TwoSidedSystem<I>,
    l_lhs: &[ExtInt<I>],
    l_rhs: &[ExtInt<I>],
    decider: D,
) -> Result<bool>
where
    D: Fn(&TwoSidedSystem<I>) -> Result<bool>,
{
    if s.relation() != Relation::Eq {
        return Err(Error::Invalid("min-plus implication is defined for equalities".into()));
    }
    let n = s.ncols();
    if l_lhs.len() != n || l_rhs.len() != n {
        return Err(Error::Shape("row length does not match system".into()));
    }
    if !decider(s)? {
        return Ok(true);
    }
    if !decider(&s.with_row(l_lhs, l_rhs)?)? {
        return Ok(false);
    }
    let joint_min = l_lhs
        .iter()
        .chain(l_rhs)
        .filter_map(|e| e.finite())
        .min()
        .cloned();
    let Some(joint_min) = joint_min else {
        // An all-infinite equality row holds everywhere.
        return Ok(true);
    };
    let (norm, m_sys) = s.normalize();
    let l_shift = |side: &[ExtInt<I>]| -> Vec<ExtInt<I>> {
        side.iter().map(|e| e.minus(&joint_min)).collect()
    };
    let ll = l_shift(l_lhs);
    let lr = l_shift(l_rhs);
    let m_row = ll
        .iter()
        .chain(&lr)
        .filter_map(|e| e.finite())
        .max()
        .cloned()
        .unwrap_or_else(I::zero);
    let m_bound = m_sys.max(m_row).max(I::one());
    let factor = from_usize::<I>(3) * m_bound * from_usize::<I>(2 * n);
    let scale_row = |side: &[ExtInt<I>]| -> Vec<ExtInt<I>> {
        side.iter().map(|e| e.times(&factor)).collect()
    };
    let (ls, rs) = (scale_row(&ll), scale_row(&lr));
    let scaled = match &norm {
        Some(sys) => Some(sys.scale(&factor)?),
        None => None,
    };
    for i in 0..n {
        for j in 0..n {
            for (gi, gj) in [(i, n + j), (n + i, j)] {
                let patterns = pattern_rows::<I>(2 * n, gi, gj);
                let mut lhs_rows =
                    scaled.as_ref().map_or_else(Vec::new, |s2| s2.lhs().to_vec());
                let mut rhs_rows =
                    scaled.as_ref().map_or_else(Vec::new, |s2| s2.rhs().to_vec());
                for pat in patterns {
                    let l_row: Vec<ExtInt<I>> = (0..n)
                        .map(|c| ls[c].add_ext(&pat[c]))
                        .collect();
                    let r_row: Vec<ExtInt<I>> = (0..n)
                        .map(|c| rs[c].add_ext(&pat[n + c]))
                        .collect();
                    lhs_rows.push(l_row);
                    rhs_rows.push(r_row);
                }
                let domain = if lhs_rows
                    .iter()
                    .chain(rhs_rows.iter())
                    .flatten()
                    .any(|e| e.is_inf())
                {
                    Domain::IntInf
                } else {
                    Domain::Int
                };
                let sij = TwoSidedSystem::new(lhs_rows, rhs_rows, Relation::Eq, domain)?;
                if decider(&sij)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{brute_implies, brute_minplus, brute_minplus_implies, brute_tropsolv};
    use crate::reductions::{decide_tropical, solve_tropical_inf};
    use crate::DEFAULT_BUDGET;

    type T = TropicalSystem<i64>;

    fn solver(a: &TropicalSystem<i64>) -> Result<bool> {
        decide_tropical(a)
    }

    fn brute(a: &TropicalSystem<i64>) -> Result<bool> {
        Ok(brute_tropsolv(a, DEFAULT_BUDGET)?.is_some())
    }

    #[test]
    fn implies_examples() {
        let a = T::from_finite(vec![vec![0, 0]]).unwrap();
        assert!(implies(&a, &[0, 0], solver).unwrap());

        let a = T::from_finite(vec![vec![0, 0, 5]]).unwrap();
        assert!(!implies(&a, &[0, 5, 0], solver).unwrap());
        assert!(!brute_implies(&a, &[0, 5, 0], DEFAULT_BUDGET).unwrap());

        let unsat = T::from_finite(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(implies(&unsat, &[3, 1], solver).unwrap());
    }

    #[test]
    fn implies_matches_brute_on_random_suite() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let m = rng.gen_range(1..=2usize);
            let rows: Vec<Vec<i64>> = (0..m)
                .map(|_| (0..3).map(|_| rng.gen_range(0..=2i64)).collect())
                .collect();
            let a = T::from_finite(rows).unwrap();
            let l: Vec<i64> = (0..3).map(|_| rng.gen_range(0..=2i64)).collect();
            let fast = implies(&a, &l, solver).unwrap();
            let ref_fast = implies(&a, &l, brute).unwrap();
            let truth = brute_implies(&a, &l, DEFAULT_BUDGET).unwrap();
            assert_eq!(fast, truth, "A={:?} l={:?}", a.rows(), l);
            assert_eq!(ref_fast, truth);
        }
    }

    #[test]
    fn equivalence_examples() {
        let a = T::from_finite(vec![vec![0, 0]]).unwrap();
        assert!(equivalent(&a, &a, solver).unwrap());
        let b = T::from_finite(vec![vec![1, 1]]).unwrap();
        assert!(equivalent(&a, &b, solver).unwrap());

        let a = T::from_finite(vec![vec![0, 0, 0]]).unwrap();
        let b = T::from_finite(vec![vec![0, 0, 5]]).unwrap();
        assert!(!equivalent(&a, &b, solver).unwrap());
    }

    fn inf_solver(a: &TropicalSystem<i64>) -> Result<bool> {
        decide_tropical(a)
    }

    #[test]
    fn finite_min_and_finite_coord() {
        // One trivially satisfiable row; every coordinate can stay finite.
        let a = T::from_finite(vec![vec![0, 0, 0]]).unwrap();
        let l = [Finite(0i64), Finite(0), Finite(0)];
        assert!(has_finite_min_in_row(&a, &l, inf_solver).unwrap());
        for i in 0..3 {
            assert!(has_solution_with_finite_coord(&a, i, inf_solver).unwrap());
        }

        // Row 1 forces x_0 = ∞ (single finite entry).
        let a = T::new(
            vec![
                vec![Finite(0), Inf, Inf],
                vec![Inf, Finite(0), Finite(0)],
            ],
            Domain::IntInf,
        )
        .unwrap();
        assert!(!has_solution_with_finite_coord(&a, 0, inf_solver).unwrap());
        assert!(has_solution_with_finite_coord(&a, 1, inf_solver).unwrap());
        let k = kernel(&a, inf_solver).unwrap();
        assert_eq!(k.into_iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn kernel_requires_solvable_input() {
        let unsat = T::from_finite(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(kernel(&unsat, inf_solver).is_err());
    }

    #[test]
    fn implies_inf_examples() {
        // All-finite inputs reduce to the Z case.
        let a = T::from_finite(vec![vec![0, 0, 5]]).unwrap();
        let l = [Finite(0i64), Finite(5), Finite(0)];
        assert!(!implies_inf(&a, &l, inf_solver).unwrap());

        // l a row of A.
        let a = T::new(
            vec![vec![Finite(0), Finite(0), Inf]],
            Domain::IntInf,
        )
        .unwrap();
        let l = [Finite(0i64), Finite(0), Inf];
        assert!(implies_inf(&a, &l, inf_solver).unwrap());

        // A = [[0,∞]] forces x_0 = ∞, so it does not imply (∞, 0).
        let a = T::new(vec![vec![Finite(0), Inf]], Domain::IntInf).unwrap();
        let l = [Inf, Finite(0i64)];
        assert!(!implies_inf(&a, &l, inf_solver).unwrap());
        assert!(solve_tropical_inf(&a).unwrap().is_some());
    }

    #[test]
    fn implies_inf_agrees_with_implies_on_finite_suite() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..40 {
            let m = rng.gen_range(1..=2usize);
            let rows: Vec<Vec<i64>> = (0..m)
                .map(|_| (0..3).map(|_| rng.gen_range(0..=2i64)).collect())
                .collect();
            let a = T::from_finite(rows).unwrap();
            let l: Vec<i64> = (0..3).map(|_| rng.gen_range(0..=2i64)).collect();
            let le: Vec<ExtInt<i64>> = l.iter().cloned().map(Finite).collect();
            assert_eq!(
                implies(&a, &l, solver).unwrap(),
                implies_inf(&a, &le, inf_solver).unwrap()
            );
        }
    }

    fn mp_solver(s: &TwoSidedSystem<i64>) -> Result<bool> {
        Ok(brute_minplus(s, DEFAULT_BUDGET)?.is_some())
    }

    #[test]
    fn minplus_implication_basics() {
        // Row of the system.
        let s = TwoSidedSystem::from_finite(
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![1, 0], vec![0, 1]],
            Relation::Eq,
        )
        .unwrap();
        let l = s.lhs()[0].clone();
        let r = s.rhs()[0].clone();
        assert!(minplus_implies(&s, &l, &r, mp_solver).unwrap());
        assert!(brute_minplus_implies(&s, &l, &r, DEFAULT_BUDGET).unwrap());

        // Unsolvable system implies anything.
        let unsat =
            TwoSidedSystem::from_finite(vec![vec![0]], vec![vec![-1]], Relation::Eq).unwrap();
        let l = [Finite(0i64)];
        let r = [Finite(5i64)];
        assert!(minplus_implies(&unsat, &l, &r, mp_solver).unwrap());
    }

    #[test]
    fn minplus_implication_matches_brute() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let mut disagreements = Vec::new();
        for _ in 0..60 {
            let n = 2usize;
            let m = rng.gen_range(1..=2usize);
            let grid = |rng: &mut rand_chacha::ChaCha8Rng, rows: usize| -> Vec<Vec<i64>> {
                (0..rows)
                    .map(|_| (0..n).map(|_| rng.gen_range(0..=2i64)).collect())
                    .collect()
            };
            let s = TwoSidedSystem::from_finite(
                grid(&mut rng, m),
                grid(&mut rng, m),
                Relation::Eq,
            )
            .unwrap();
            let l: Vec<ExtInt<i64>> =
                (0..n).map(|_| Finite(rng.gen_range(0..=2i64))).collect();
            let r: Vec<ExtInt<i64>> =
                (0..n).map(|_| Finite(rng.gen_range(0..=2i64))).collect();
            let fast = minplus_implies(&s, &l, &r, mp_solver).unwrap();
            let truth = brute_minplus_implies(&s, &l, &r, DEFAULT_BUDGET).unwrap();
            if fast != truth {
                disagreements.push((s, l, r, fast, truth));
            }
        }
        assert!(
            disagreements.is_empty(),
            "disagreements: {disagreements:?}"
        );
    }
}
