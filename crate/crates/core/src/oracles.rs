//! Brute-force reference implementations.
//!
//! Everything here decides by scanning a bounded grid of candidate vectors
//! exhaustively. The grid bounds come from the solution-size lemmas (smallest
//! solutions of a normalized one-sided system fit in `{0..M}^n`; `Z∞`
//! witnesses have finite coordinates at most `M·n`; implication
//! counterexamples fit in `{0..Mn+1}^n`). These functions are ground truth
//! for the solver pipelines and never call into `reductions`; the only code
//! they share with the solvers is the core solution predicates.
//!
//! Every scan is capped by a budget in candidate evaluations and fails with
//! [`Error::Budget`] rather than hanging.

use crate::error::{Error, Result};
use crate::extint::{ExtInt, Finite, Inf};
use crate::scalar::{from_usize, Scalar};
use crate::system::{Domain, Relation, SystemRef, TropicalSystem, TwoSidedSystem};

/// Odometer over `{0..bound}` (optionally plus `∞`) on a subset of slots of a
/// template vector. Yields candidates in lexicographic order, `∞` last.
struct GridScan<'a, I> {
    slots: &'a [usize],
    digits: Vec<u64>,
    radix: u64,
    inf_digit: Option<u64>,
    started: bool,
    vals: Vec<ExtInt<I>>,
}

impl<'a, I: Scalar> GridScan<'a, I> {
    fn new(slots: &'a [usize], template: Vec<ExtInt<I>>, bound: u64, with_inf: bool) -> Self {
        let radix = bound + 1 + u64::from(with_inf);
        let mut vals = template;
        for &s in slots {
            vals[s] = Finite(I::zero());
        }
        Self {
            slots,
            digits: vec![0; slots.len()],
            radix,
            inf_digit: with_inf.then_some(bound + 1),
            started: false,
            vals,
        }
    }

    fn digit_value(&self, d: u64) -> ExtInt<I> {
        if Some(d) == self.inf_digit {
            Inf
        } else {
            Finite(I::from_u64(d).expect("grid digit fits scalar"))
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        if self.slots.is_empty() {
            return false;
        }
        let mut i = self.slots.len() - 1;
        loop {
            self.digits[i] += 1;
            if self.digits[i] < self.radix {
                self.vals[self.slots[i]] = self.digit_value(self.digits[i]);
                return true;
            }
            self.digits[i] = 0;
            self.vals[self.slots[i]] = self.digit_value(0);
            if i == 0 {
                return false;
            }
            i -= 1;
        }
    }
}

fn points(radix: u64, k: usize, budget: u64) -> Result<u64> {
    let mut total: u128 = 1;
    for _ in 0..k {
        total = total.saturating_mul(radix as u128);
        if total > budget as u128 {
            return Err(Error::Budget(format!(
                "grid of {radix}^{k} points exceeds budget {budget}"
            )));
        }
    }
    Ok(total as u64)
}

fn bound_to_u64<I: Scalar>(bound: &I, what: &str) -> Result<u64> {
    if bound.is_negative() {
        return Ok(0);
    }
    bound
        .to_u64()
        .ok_or_else(|| Error::Budget(format!("{what} bound {bound} out of range")))
}

/// Exhaustive solver for `Z` systems: scans `{0..M}^n` of the normalized
/// system in lexicographic order and returns the first solution.
pub fn brute_tropsolv<I: Scalar>(
    a: &TropicalSystem<I>,
    budget: u64,
) -> Result<Option<Vec<I>>> {
    if a.domain() != Domain::Int {
        return Err(Error::Invalid("brute_tropsolv expects an Int-domain system".into()));
    }
    let (norm, m) = a.normalize();
    let norm = norm.expect("Int-domain systems keep all rows");
    let n = norm.ncols();
    let bound = bound_to_u64(&m, "solution")?;
    points(bound + 1, n, budget)?;
    let slots: Vec<usize> = (0..n).collect();
    let mut scan = GridScan::new(&slots, vec![Finite(I::zero()); n], bound, false);
    while scan.advance() {
        if norm.is_solution(&scan.vals)? {
            let witness = scan
                .vals
                .iter()
                .map(|v| v.finite().cloned().expect("finite grid"))
                .collect();
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// Exhaustive solver over `Z∞`: for every proper subset of coordinates fixed
/// to `∞` (subsets by ascending bitmask), scans the finite part over
/// `{0..M·n}` where `M-1` bounds the normalized entries.
pub fn brute_tropsolv_inf<I: Scalar>(
    a: &TropicalSystem<I>,
    budget: u64,
) -> Result<Option<Vec<ExtInt<I>>>> {
    let n = a.ncols();
    let (norm, max_entry) = a.normalize();
    if norm.is_none() {
        // Every row was all-infinite: nothing constrains x.
        return Ok(Some(vec![Finite(I::zero()); n]));
    }
    let m = max_entry + I::one();
    let bound = bound_to_u64(&(m * from_usize::<I>(n)), "solution")?;
    if n > 60 {
        return Err(Error::Budget("too many columns for subset scan".into()));
    }
    let mut total: u128 = 0;
    for mask in 0u64..(1 << n) - 1 {
        let free = n - mask.count_ones() as usize;
        total = total.saturating_add((bound as u128 + 1).saturating_pow(free as u32));
    }
    if total > budget as u128 {
        return Err(Error::Budget(format!("{total} candidates exceed budget {budget}")));
    }
    for mask in 0u64..(1 << n) - 1 {
        let mut template = vec![Finite(I::zero()); n];
        let mut slots = Vec::new();
        for j in 0..n {
            if mask >> j & 1 == 1 {
                template[j] = Inf;
            } else {
                slots.push(j);
            }
        }
        let mut scan = GridScan::new(&slots, template, bound, false);
        while scan.advance() {
            if a.is_solution(&scan.vals)? {
                return Ok(Some(scan.vals.clone()));
            }
        }
    }
    Ok(None)
}

/// Sum of absolute constants of the max-atom encoding of a min-plus system,
/// restricted to the given live columns; bounds the smallest finite witness.
fn minplus_bound<I: Scalar>(s: &TwoSidedSystem<I>, live: &[usize]) -> I {
    let mut c = I::zero();
    let mut orient = |lhs: &[Vec<ExtInt<I>>], rhs: &[Vec<ExtInt<I>>]| {
        for (l, r) in lhs.iter().zip(rhs) {
            let lhs_sum: I = live
                .iter()
                .filter_map(|&j| l[j].finite())
                .fold(I::zero(), |acc, v| acc + v.abs());
            for &i in live {
                if let Some(b) = r[i].finite() {
                    c = c.clone() + b.abs() + lhs_sum.clone();
                }
            }
        }
    };
    orient(s.lhs(), s.rhs());
    if s.relation() == Relation::Eq {
        orient(s.rhs(), s.lhs());
    }
    c
}

/// Exhaustive min-plus solver: scans `{0..C}^n` with `C` from the induced
/// atom system, plus proper `∞`-subsets for `Z∞` systems.
pub fn brute_minplus<I: Scalar>(
    s: &TwoSidedSystem<I>,
    budget: u64,
) -> Result<Option<Vec<ExtInt<I>>>> {
    let n = s.ncols();
    let masks: Vec<u64> = if s.domain() == Domain::IntInf {
        if n > 60 {
            return Err(Error::Budget("too many columns for subset scan".into()));
        }
        (0..(1u64 << n) - 1).collect()
    } else {
        vec![0]
    };
    let mut remaining = budget;
    for mask in masks {
        let mut template = vec![Finite(I::zero()); n];
        let mut slots = Vec::new();
        for j in 0..n {
            if mask >> j & 1 == 1 {
                template[j] = Inf;
            } else {
                slots.push(j);
            }
        }
        let bound = bound_to_u64(&minplus_bound(s, &slots), "solution")?;
        let total = points(bound + 1, slots.len(), remaining)?;
        remaining = remaining.saturating_sub(total);
        let mut scan = GridScan::new(&slots, template, bound, false);
        while scan.advance() {
            if s.is_solution(&scan.vals)? {
                return Ok(Some(scan.vals.clone()));
            }
        }
    }
    Ok(None)
}

/// Exhaustive implication check over `Z`: true iff no point of the
/// `{0..Mn+1}^n` grid solves `a` while violating the equation `l`.
pub fn brute_implies<I: Scalar>(
    a: &TropicalSystem<I>,
    l: &[I],
    budget: u64,
) -> Result<bool> {
    if l.len() != a.ncols() {
        return Err(Error::Shape("equation length does not match system".into()));
    }
    let (norm, m_sys) = a.normalize();
    let norm = norm.expect("Int-domain systems keep all rows");
    let l_min = l.iter().min().cloned().expect("nonempty");
    let l_shift: Vec<I> = l.iter().map(|v| v.clone() - l_min.clone()).collect();
    let l_max = l_shift.iter().max().cloned().unwrap_or_else(I::zero);
    let m = m_sys.max(l_max);
    let n = norm.ncols();
    let bound = bound_to_u64(&(m * from_usize::<I>(n) + I::one()), "counterexample")?;
    points(bound + 1, n, budget)?;
    let l_row = TropicalSystem::from_finite(vec![l_shift])?;
    let slots: Vec<usize> = (0..n).collect();
    let mut scan = GridScan::new(&slots, vec![Finite(I::zero()); n], bound, false);
    while scan.advance() {
        if norm.is_solution(&scan.vals)? && !l_row.is_solution(&scan.vals)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive min-plus implication check at desk scale: true iff no grid
/// point solves `s` while violating the row `(l_lhs, l_rhs)`.
pub fn brute_minplus_implies<I: Scalar>(
    s: &TwoSidedSystem<I>,
    l_lhs: &[ExtInt<I>],
    l_rhs: &[ExtInt<I>],
    budget: u64,
) -> Result<bool> {
    let n = s.ncols();
    let l_row = TwoSidedSystem::new(
        vec![l_lhs.to_vec()],
        vec![l_rhs.to_vec()],
        s.relation(),
        Domain::IntInf,
    )?;
    let max = s
        .max_finite()
        .into_iter()
        .chain(
            l_lhs
                .iter()
                .chain(l_rhs)
                .filter_map(|e| e.finite().cloned())
                .max(),
        )
        .max()
        .unwrap_or_else(I::zero)
        .abs();
    let bound = bound_to_u64(
        &(max * from_usize::<I>(2 * n) + I::one()),
        "counterexample",
    )?;
    let masks: Vec<u64> = if s.domain() == Domain::IntInf {
        (0..(1u64 << n) - 1).collect()
    } else {
        vec![0]
    };
    let mut remaining = budget;
    for mask in masks {
        let mut template = vec![Finite(I::zero()); n];
        let mut slots = Vec::new();
        for j in 0..n {
            if mask >> j & 1 == 1 {
                template[j] = Inf;
            } else {
                slots.push(j);
            }
        }
        let total = points(bound + 1, slots.len(), remaining)?;
        remaining = remaining.saturating_sub(total);
        let mut scan = GridScan::new(&slots, template, bound, false);
        while scan.advance() {
            if s.is_solution(&scan.vals)? && !l_row.is_solution(&scan.vals)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pointwise agreement of two solution predicates over `{0..bound}^n`.
pub fn solution_sets_equal_on_grid<I: Scalar>(
    p: SystemRef<'_, I>,
    q: SystemRef<'_, I>,
    bound: &I,
    budget: u64,
) -> Result<bool> {
    if p.ncols() != q.ncols() {
        return Err(Error::Shape("systems have different column counts".into()));
    }
    let n = p.ncols();
    let bound = bound_to_u64(bound, "grid")?;
    points(bound + 1, n, budget)?;
    let slots: Vec<usize> = (0..n).collect();
    let mut scan = GridScan::new(&slots, vec![Finite(I::zero()); n], bound, false);
    while scan.advance() {
        if p.is_solution(&scan.vals)? != q.is_solution(&scan.vals)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All grid solutions in lexicographic order (`∞` sorts above every integer
/// and is included per-coordinate for `Z∞` systems).
pub fn enumerate_solutions<I: Scalar>(
    sys: SystemRef<'_, I>,
    bound: &I,
    budget: u64,
) -> Result<Vec<Vec<ExtInt<I>>>> {
    let n = sys.ncols();
    let with_inf = sys.domain() == Domain::IntInf;
    let bound = bound_to_u64(bound, "grid")?;
    points(bound + 1 + u64::from(with_inf), n, budget)?;
    let slots: Vec<usize> = (0..n).collect();
    let mut scan = GridScan::new(&slots, vec![Finite(I::zero()); n], bound, with_inf);
    let mut out = Vec::new();
    while scan.advance() {
        if scan.vals.iter().all(|v| v.is_inf()) {
            continue;
        }
        if sys.is_solution(&scan.vals)? {
            out.push(scan.vals.clone());
        }
    }
    Ok(out)
}
