//! Tropical rank: the size of the largest set of columns whose induced
//! tropical system is unsolvable.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::system::{Domain, TropicalSystem};

const RANK_CAP: usize = 14;

/// Largest tropically independent column subset, deciding solvability
/// through the injected callback. A single column always induces an
/// unsolvable system over `Z` (one term cannot attain a minimum twice), so
/// the rank is at least 1.
pub fn tropical_rank<I: Scalar, D>(a: &TropicalSystem<I>, decider: D) -> Result<usize>
where
    D: Fn(&TropicalSystem<I>) -> Result<bool>,
{
    if a.domain() != Domain::Int {
        return Err(Error::Invalid("tropical rank is defined over Z".into()));
    }
    let n = a.ncols();
    if n > RANK_CAP {
        return Err(Error::Budget(format!("rank enumeration capped at {RANK_CAP} columns")));
    }
    for size in (2..=n).rev() {
        // Column subsets of this size, in ascending bitmask order.
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let rows: Vec<Vec<_>> = a
                .rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| mask >> *j & 1 == 1)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let sub = TropicalSystem::new(rows, Domain::Int)?;
            if !decider(&sub)? {
                return Ok(size);
            }
        }
    }
    Ok(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::solve_tropical;

    fn decider(a: &TropicalSystem<i64>) -> Result<bool> {
        Ok(solve_tropical(a)?.is_some())
    }

    #[test]
    fn rank_fixtures() {
        let f1 = TropicalSystem::from_finite(vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(tropical_rank(&f1, decider).unwrap(), 2);

        let f2 = TropicalSystem::from_finite(vec![
            vec![0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![1, 1, 0, 0, 0],
            vec![1, 1, 1, 0, 0],
        ])
        .unwrap();
        assert_eq!(tropical_rank(&f2, decider).unwrap(), 4);

        let single = TropicalSystem::from_finite(vec![vec![3], vec![0]]).unwrap();
        assert_eq!(tropical_rank(&single, decider).unwrap(), 1);
    }

    /// n - affine dimension ≤ rank; tight on F1, strict on F2.
    #[test]
    fn rank_dimension_inequality() {
        use crate::dimension::global_dimension;
        use crate::system::SystemRef;
        let f1 = TropicalSystem::from_finite(vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let g = global_dimension(SystemRef::Tropical(&f1), crate::DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        let affine = g.projective + 1;
        assert_eq!(3 - affine, tropical_rank(&f1, decider).unwrap());

        let f2 = TropicalSystem::from_finite(vec![
            vec![0, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![1, 1, 0, 0, 0],
            vec![1, 1, 1, 0, 0],
        ])
        .unwrap();
        let g = global_dimension(SystemRef::Tropical(&f2), crate::DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        let affine = g.projective + 1;
        assert!(5 - affine < tropical_rank(&f2, decider).unwrap());
    }
}
