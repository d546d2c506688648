//! Tropical equations as systems of min-plus inequalities, preserving the
//! solution set exactly.

use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::scalar::Scalar;
use crate::system::{Relation, TropicalSystem, TwoSidedSystem};

/// One tropical row as `n` min-plus `≤`-rows over the same variables.
///
/// "The minimum of `y_j = row_j + x_j` is attained at least twice" is
/// equivalent to `min_{j≠i} y_j ≤ y_i` for every `i`, and each of those is
/// the min-plus inequality with coefficient rows
/// `lhs_j = row_j - 1 (j≠i), lhs_i = row_i` and
/// `rhs_j = row_j (j≠i), rhs_i = row_i - 1`.
pub fn tropical_row_to_inequalities<I: Scalar>(
    row: &[ExtInt<I>],
) -> Result<Vec<(Vec<ExtInt<I>>, Vec<ExtInt<I>>)>> {
    if row.iter().all(|e| e.is_inf()) {
        return Err(Error::Invalid("all-infinite row has no inequality form".into()));
    }
    let one = I::one();
    let n = row.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let lhs: Vec<ExtInt<I>> = row
            .iter()
            .enumerate()
            .map(|(j, e)| if j == i { e.clone() } else { e.minus(&one) })
            .collect();
        let rhs: Vec<ExtInt<I>> = row
            .iter()
            .enumerate()
            .map(|(j, e)| if j == i { e.minus(&one) } else { e.clone() })
            .collect();
        out.push((lhs, rhs));
    }
    Ok(out)
}

/// The min-plus `≤`-system with exactly the same solution set as the
/// tropical system: the union of the per-row inequality systems (`m·n`
/// rows). Works unchanged over `Z∞`.
pub fn tropical_to_minplus<I: Scalar>(a: &TropicalSystem<I>) -> Result<TwoSidedSystem<I>> {
    let mut lhs = Vec::with_capacity(a.nrows() * a.ncols());
    let mut rhs = Vec::with_capacity(a.nrows() * a.ncols());
    for row in a.rows() {
        for (l, r) in tropical_row_to_inequalities(row)? {
            lhs.push(l);
            rhs.push(r);
        }
    }
    TwoSidedSystem::new(lhs, rhs, Relation::Le, a.domain())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extint::Finite;
    use crate::oracles::solution_sets_equal_on_grid;
    use crate::system::SystemRef;
    use crate::DEFAULT_BUDGET;

    fn ext(v: &[i64]) -> Vec<ExtInt<i64>> {
        v.iter().map(|&x| Finite(x)).collect()
    }

    fn holds(pair: &(Vec<ExtInt<i64>>, Vec<ExtInt<i64>>), x: &[i64]) -> bool {
        let eval = |side: &[ExtInt<i64>]| {
            side.iter()
                .zip(x)
                .map(|(a, v)| a.plus(v))
                .min()
                .unwrap()
        };
        eval(&pair.0) <= eval(&pair.1)
    }

    #[test]
    fn symmetric_two_column_row() {
        let pairs = tropical_row_to_inequalities(&ext(&[0, 0])).unwrap();
        let flat: Vec<(Vec<ExtInt<i64>>, Vec<ExtInt<i64>>)> = pairs.clone();
        assert_eq!(flat[0], (ext(&[0, -1]), ext(&[-1, 0])));
        assert_eq!(flat[1], (ext(&[-1, 0]), ext(&[0, -1])));
        // Minimum attained twice at (0,0): both inequalities hold.
        assert!(pairs.iter().all(|p| holds(p, &[0, 0])));
    }

    #[test]
    fn unique_minimum_violates_a_pair() {
        let pairs = tropical_row_to_inequalities(&ext(&[0, 1])).unwrap();
        // At x = (0,0) the minimum is attained only at column 1,
        // so the i = 1 pair fails.
        assert!(!holds(&pairs[0], &[0, 0]));
        assert!(holds(&pairs[1], &[0, 0]));
    }

    #[test]
    fn row_criterion_matches_min_twice() {
        let rows = [
            ext(&[0, 0, 5]),
            ext(&[0, 1, 2]),
            ext(&[3, 3, 3]),
            ext(&[2, 0, 1]),
        ];
        for row in &rows {
            for x in [[0i64, 0, 0], [1, 0, 2], [0, 2, 1], [3, 3, 0]] {
                let terms: Vec<ExtInt<i64>> =
                    row.iter().zip(&x).map(|(a, v)| a.plus(v)).collect();
                let min = terms.iter().min().unwrap();
                let twice = terms.iter().filter(|t| *t == min).count() >= 2;
                let pairs = tropical_row_to_inequalities(row).unwrap();
                assert_eq!(pairs.iter().all(|p| holds(p, &x)), twice);
            }
        }
    }

    #[test]
    fn solution_sets_agree_on_grids() {
        let f1 = TropicalSystem::from_finite(vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let s = tropical_to_minplus(&f1).unwrap();
        assert_eq!(s.nrows(), 6);
        assert!(solution_sets_equal_on_grid(
            SystemRef::Tropical(&f1),
            SystemRef::MinPlus(&s),
            &2,
            DEFAULT_BUDGET
        )
        .unwrap());

        let tiny = TropicalSystem::from_finite(vec![vec![0, 0]]).unwrap();
        let s = tropical_to_minplus(&tiny).unwrap();
        assert_eq!(s.nrows(), 2);
        assert!(solution_sets_equal_on_grid(
            SystemRef::Tropical(&tiny),
            SystemRef::MinPlus(&s),
            &1,
            DEFAULT_BUDGET
        )
        .unwrap());
    }

    #[test]
    fn tropical_solutions_satisfy_the_output() {
        let a = TropicalSystem::from_finite(vec![vec![2, 0, 1], vec![0, 0, 3]]).unwrap();
        let s = tropical_to_minplus(&a).unwrap();
        for x in [[0i64, 2, 1], [1, 3, 2]] {
            let xe = ext(&x);
            if a.is_solution(&xe).unwrap() {
                assert!(s.is_solution(&xe).unwrap());
            }
        }
    }
}
