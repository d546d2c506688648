//! The reduction web: tropical systems to min-plus inequalities, both to the
//! max-atom problem and back, `Z∞` to `Z` by infinity elimination, OR- and
//! AND-composition of instances, and implication/equivalence as Turing
//! reductions to solvability.

mod implication;
mod infinity;
mod map_bridge;
mod minplus;

pub use implication::{
    equivalent, has_finite_min_in_row, has_solution_with_finite_coord, implies, implies_inf,
    kernel, minplus_implies,
};
pub use infinity::{combine_or, inf_elimination, reconstruct_inf_solution, solve_tropical_inf};
pub use map_bridge::{maxatom_to_tropical, minplus_to_maxatom, stars_gadget, tropical_to_maxatom, GadgetParams};
pub use minplus::{tropical_row_to_inequalities, tropical_to_minplus};

use crate::error::{Error, Result};
use crate::extint::{ExtInt, Finite, Inf};
use crate::scalar::Scalar;
use crate::system::{Domain, TropicalSystem, TwoSidedSystem};

/// Tracks how the variables of a constructed system correspond to the
/// variables of the source system.
///
/// `columns[i]` is the constructed index carrying original variable `i`;
/// `primed` holds the doubled companion indices when the construction splits
/// every variable in two; `negated` records a global `x ↦ -x` flip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarMap {
    columns: Vec<usize>,
    primed: Option<Vec<usize>>,
    negated: bool,
}

impl VarMap {
    pub(crate) fn new(columns: Vec<usize>, primed: Option<Vec<usize>>, negated: bool) -> Self {
        Self { columns, primed, negated }
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn primed(&self) -> Option<&[usize]> {
        self.primed.as_deref()
    }

    pub fn negated(&self) -> bool {
        self.negated
    }

    /// Maps a witness of the constructed system back onto the original
    /// variables (applying the sign flip if one was recorded).
    pub fn pull_back<I: Scalar>(&self, values: &[I]) -> Result<Vec<I>> {
        self.columns
            .iter()
            .map(|&c| {
                let v = values
                    .get(c)
                    .ok_or_else(|| Error::Shape("witness too short for variable map".into()))?;
                Ok(if self.negated { v.clone().neg() } else { v.clone() })
            })
            .collect()
    }
}

/// Shifts a finite vector so its minimum is zero. Solution sets of both
/// tropical and min-plus systems are closed under adding constants, so this
/// only picks a projective representative.
fn shift_to_zero_min<I: Scalar>(x: &mut [I]) {
    let min = x.iter().min().cloned().expect("nonempty witness");
    for v in x.iter_mut() {
        *v = v.clone() - min.clone();
    }
}

/// Full tropical solver over `Z`, composing the max-atom reduction with the
/// fixpoint solver.
///
/// Returns a nonnegative witness with zero minimum (so `0 ≤ x_j ≤ M` by the
/// solution-size bound) or `None` when unsolvable.
pub fn solve_tropical<I: Scalar>(a: &TropicalSystem<I>) -> Result<Option<Vec<I>>> {
    if a.rows().iter().flatten().any(|e| e.is_inf()) {
        return Err(Error::Invalid(
            "solve_tropical expects finite entries; use solve_tropical_inf".into(),
        ));
    }
    let (norm, m) = a.normalize();
    let norm = norm.expect("finite systems keep all rows");
    let (map, vmap) = tropical_to_maxatom(&norm)?;
    // Solutions of the normalized system fit in {0..M}^n, so the negated
    // assignment lives in [-M, 0]^n; M is a sound fixpoint floor.
    let Some(u) = map.solve_with_floor(&m) else {
        return Ok(None);
    };
    let mut x = vmap.pull_back(&u)?;
    shift_to_zero_min(&mut x);
    let ext: Vec<ExtInt<I>> = x.iter().cloned().map(Finite).collect();
    if !a.is_solution(&ext)? {
        return Err(Error::Internal("pulled-back witness rejected".into()));
    }
    Ok(Some(x))
}

/// Decides tropical solvability over either domain, dispatching finite
/// systems to the max-atom pipeline and systems with infinite entries to the
/// infinity-elimination pipeline.
pub fn decide_tropical<I: Scalar>(a: &TropicalSystem<I>) -> Result<bool> {
    if a.rows().iter().flatten().any(|e| e.is_inf()) {
        Ok(solve_tropical_inf(a)?.is_some())
    } else {
        Ok(solve_tropical(a)?.is_some())
    }
}

/// Full min-plus solver. Finite witnesses come from the max-atom reduction;
/// for `Z∞` systems the remaining infinity patterns are swept explicitly
/// (proper subsets in ascending bitmask order), re-running the reduction on
/// each restriction.
pub fn solve_minplus<I: Scalar>(s: &TwoSidedSystem<I>) -> Result<Option<Vec<ExtInt<I>>>> {
    let n = s.ncols();
    let all: Vec<usize> = (0..n).collect();
    if let Some(x) = solve_minplus_restricted(s, &all)? {
        return Ok(Some(x));
    }
    if s.domain() == Domain::IntInf && n <= 60 {
        for mask in 1u64..(1 << n) - 1 {
            let live: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 0).collect();
            if let Some(x) = solve_minplus_restricted(s, &live)? {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Searches for a solution whose coordinates outside `live` are `∞`.
fn solve_minplus_restricted<I: Scalar>(
    s: &TwoSidedSystem<I>,
    live: &[usize],
) -> Result<Option<Vec<ExtInt<I>>>> {
    let (map, vmap) = minplus_to_maxatom(s, live)?;
    let Some(u) = map.solve() else {
        return Ok(None);
    };
    let mut finite = vmap.pull_back(&u)?;
    shift_to_zero_min(&mut finite);
    let mut x = vec![Inf; s.ncols()];
    for (pos, &j) in live.iter().enumerate() {
        x[j] = Finite(finite[pos].clone());
    }
    if !s.is_solution(&x)? {
        return Err(Error::Internal("pulled-back min-plus witness rejected".into()));
    }
    Ok(Some(x))
}

/// Decides min-plus solvability.
pub fn decide_minplus<I: Scalar>(s: &TwoSidedSystem<I>) -> Result<bool> {
    Ok(solve_minplus(s)?.is_some())
}
