//! One-sided tropical systems, two-sided min-plus systems, star tables, and
//! the invariance transforms (row/column translation, scaling, normalization).

use crate::error::{Error, Result};
use crate::extint::{min_ext, ExtInt, Finite};
use crate::scalar::Scalar;

/// Scalar domain of a system: plain integers or integers with `+∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Int,
    IntInf,
}

/// Relation of a two-sided system: per-row equality or `≤`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
}

/// A one-sided tropical linear system given by an `m×n` matrix `A`.
///
/// A vector `x` (not all-infinite) is a solution when in every row the
/// minimum of `a_ij + x_j` is attained at least twice, or is `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalSystem<I> {
    rows: Vec<Vec<ExtInt<I>>>,
    domain: Domain,
}

/// A two-sided min-plus system `min_j(a_ij + x_j) rel min_j(b_ij + x_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSidedSystem<I> {
    lhs: Vec<Vec<ExtInt<I>>>,
    rhs: Vec<Vec<ExtInt<I>>>,
    relation: Relation,
    domain: Domain,
}

/// Boolean table marking the row-minimum entries of a matrix.
///
/// For joint tables of two-sided systems the width is `2n` and `part` records
/// the boundary between the `A`-part and the `B`-part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarTable {
    stars: Vec<Vec<bool>>,
    part: Option<usize>,
}

fn check_grid<I: Scalar>(rows: &[Vec<ExtInt<I>>], what: &str) -> Result<usize> {
    if rows.is_empty() {
        return Err(Error::Shape(format!("{what}: no rows")));
    }
    let n = rows[0].len();
    if n == 0 {
        return Err(Error::Shape(format!("{what}: no columns")));
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("{what}: ragged rows")));
    }
    Ok(n)
}

fn check_domain<I: Scalar>(rows: &[Vec<ExtInt<I>>], domain: Domain) -> Result<()> {
    if domain == Domain::Int && rows.iter().flatten().any(|e| e.is_inf()) {
        return Err(Error::Invalid("infinite entry in an Int-domain system".into()));
    }
    Ok(())
}

/// True unless every coordinate is infinite; all-infinite candidates are
/// excluded from solution predicates.
fn check_not_all_inf<I: Scalar>(x: &[ExtInt<I>]) -> Result<()> {
    if x.iter().all(|v| v.is_inf()) {
        return Err(Error::AllInfinite);
    }
    Ok(())
}

/// Row evaluation: value of the minimum and how often it is attained.
fn row_min_count<I: Scalar>(terms: &[ExtInt<I>]) -> (ExtInt<I>, usize) {
    let min = min_ext(terms.iter()).expect("nonempty row");
    let count = terms.iter().filter(|t| **t == min).count();
    (min, count)
}

/// Whether one evaluated row is satisfied: minimum attained at least twice,
/// or the whole row evaluates to `∞`.
pub(crate) fn tropical_row_satisfied<I: Scalar>(terms: &[ExtInt<I>]) -> bool {
    let (min, count) = row_min_count(terms);
    min.is_inf() || count >= 2
}

impl<I: Scalar> TropicalSystem<I> {
    /// Builds a system, validating shape and domain consistency.
    pub fn new(rows: Vec<Vec<ExtInt<I>>>, domain: Domain) -> Result<Self> {
        check_grid(&rows, "tropical system")?;
        check_domain(&rows, domain)?;
        Ok(Self { rows, domain })
    }

    /// Convenience constructor from finite entries (`Int` domain).
    pub fn from_finite(rows: Vec<Vec<I>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(Finite).collect())
            .collect();
        Self::new(rows, Domain::Int)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn rows(&self) -> &[Vec<ExtInt<I>>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[ExtInt<I>] {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> &ExtInt<I> {
        &self.rows[i][j]
    }

    /// Same system with one extra row appended.
    pub fn with_row(&self, row: &[ExtInt<I>]) -> Result<Self> {
        if row.len() != self.ncols() {
            return Err(Error::Shape("appended row has wrong length".into()));
        }
        let mut rows = self.rows.clone();
        rows.push(row.to_vec());
        let domain = if row.iter().any(|e| e.is_inf()) {
            Domain::IntInf
        } else {
            self.domain
        };
        Self::new(rows, domain)
    }

    /// Largest finite entry, if any.
    pub fn max_finite(&self) -> Option<I> {
        self.rows
            .iter()
            .flatten()
            .filter_map(|e| e.finite())
            .max()
            .cloned()
    }

    /// `A ⊙ x`: component `i` is `min_j (a_ij + x_j)`.
    pub fn evaluate(&self, x: &[ExtInt<I>]) -> Result<Vec<ExtInt<I>>> {
        if x.len() != self.ncols() {
            return Err(Error::Shape(format!(
                "vector has length {}, system has {} columns",
                x.len(),
                self.ncols()
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                let terms: Vec<_> = row.iter().zip(x).map(|(a, v)| a.add_ext(v)).collect();
                min_ext(terms.iter()).expect("nonempty row")
            })
            .collect())
    }

    /// Solution predicate: every row's minimum attained at least twice or `∞`.
    pub fn is_solution(&self, x: &[ExtInt<I>]) -> Result<bool> {
        if x.len() != self.ncols() {
            return Err(Error::Shape("vector length does not match columns".into()));
        }
        check_not_all_inf(x)?;
        Ok(self.rows.iter().all(|row| {
            let terms: Vec<_> = row.iter().zip(x).map(|(a, v)| a.add_ext(v)).collect();
            tropical_row_satisfied(&terms)
        }))
    }

    /// Star at `(i,j)` iff `a_ij` is finite and equals the row-`i` minimum.
    pub fn star_table(&self) -> StarTable {
        let stars = self
            .rows
            .iter()
            .map(|row| {
                let min = min_ext(row.iter()).expect("nonempty row");
                row.iter().map(|e| e.is_finite() && *e == min).collect()
            })
            .collect();
        StarTable { stars, part: None }
    }

    /// Adds `r_i` to every entry of row `i`; the solution set is unchanged.
    pub fn translate_rows(&self, r: &[I]) -> Result<Self> {
        if r.len() != self.nrows() {
            return Err(Error::Shape("row translation has wrong length".into()));
        }
        let rows = self
            .rows
            .iter()
            .zip(r)
            .map(|(row, d)| row.iter().map(|e| e.plus(d)).collect())
            .collect();
        Ok(Self { rows, domain: self.domain })
    }

    /// Adds `v_j` to every entry of column `j`; solutions shift by `-v`.
    pub fn translate_columns(&self, v: &[I]) -> Result<Self> {
        if v.len() != self.ncols() {
            return Err(Error::Shape("column translation has wrong length".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(e, d)| e.plus(d)).collect())
            .collect();
        Ok(Self { rows, domain: self.domain })
    }

    /// Multiplies all entries by `c ≥ 1`; solutions scale by `c`.
    pub fn scale(&self, c: &I) -> Result<Self> {
        if *c < I::one() {
            return Err(Error::Invalid("scale factor must be positive".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|e| e.times(c)).collect())
            .collect();
        Ok(Self { rows, domain: self.domain })
    }

    /// Drops all-infinite rows and shifts each remaining row so its minimum
    /// is `0`. Returns the normalized system (`None` when no rows survive,
    /// i.e. the system constrains nothing) and `M`, its largest entry.
    pub fn normalize(&self) -> (Option<Self>, I) {
        let rows: Vec<Vec<ExtInt<I>>> = self
            .rows
            .iter()
            .filter(|row| row.iter().any(|e| e.is_finite()))
            .map(|row| {
                let min = row
                    .iter()
                    .filter_map(|e| e.finite())
                    .min()
                    .cloned()
                    .expect("row has a finite entry");
                row.iter().map(|e| e.minus(&min)).collect()
            })
            .collect();
        let max = rows
            .iter()
            .flatten()
            .filter_map(|e| e.finite())
            .max()
            .cloned()
            .unwrap_or_else(I::zero);
        if rows.is_empty() {
            return (None, max);
        }
        (Some(Self { rows, domain: self.domain }), max)
    }

    /// Replaces the infinite coordinates of a `Z∞` solution of a nonnegative
    /// finite system by `K = max_finite(x) + M + 1`, yielding a `Z` solution.
    pub fn finitize(&self, x: &[ExtInt<I>]) -> Result<Vec<I>> {
        if self.domain != Domain::Int {
            return Err(Error::Invalid("finitize expects an Int-domain system".into()));
        }
        if self
            .rows
            .iter()
            .flatten()
            .any(|e| e.finite().map_or(true, |v| v.is_negative()))
        {
            return Err(Error::Invalid("finitize expects nonnegative entries".into()));
        }
        if !self.is_solution(x)? {
            return Err(Error::NotASolution("finitize input must solve the system".into()));
        }
        let m = self.max_finite().unwrap_or_else(I::zero);
        let max_x = x
            .iter()
            .filter_map(|v| v.finite())
            .max()
            .cloned()
            .expect("not all-infinite");
        let k = max_x + m + I::one();
        let out: Vec<I> = x
            .iter()
            .map(|v| v.finite().cloned().unwrap_or_else(|| k.clone()))
            .collect();
        let ext: Vec<ExtInt<I>> = out.iter().cloned().map(Finite).collect();
        if !self.is_solution(&ext)? {
            return Err(Error::Internal("finitized vector is not a solution".into()));
        }
        Ok(out)
    }
}

impl<I: Scalar> TwoSidedSystem<I> {
    pub fn new(
        lhs: Vec<Vec<ExtInt<I>>>,
        rhs: Vec<Vec<ExtInt<I>>>,
        relation: Relation,
        domain: Domain,
    ) -> Result<Self> {
        let n = check_grid(&lhs, "min-plus lhs")?;
        let n2 = check_grid(&rhs, "min-plus rhs")?;
        if n != n2 || lhs.len() != rhs.len() {
            return Err(Error::Shape("lhs and rhs must have identical shape".into()));
        }
        check_domain(&lhs, domain)?;
        check_domain(&rhs, domain)?;
        Ok(Self { lhs, rhs, relation, domain })
    }

    pub fn from_finite(lhs: Vec<Vec<I>>, rhs: Vec<Vec<I>>, relation: Relation) -> Result<Self> {
        let wrap = |g: Vec<Vec<I>>| -> Vec<Vec<ExtInt<I>>> {
            g.into_iter()
                .map(|r| r.into_iter().map(Finite).collect())
                .collect()
        };
        Self::new(wrap(lhs), wrap(rhs), relation, Domain::Int)
    }

    pub fn nrows(&self) -> usize {
        self.lhs.len()
    }

    pub fn ncols(&self) -> usize {
        self.lhs[0].len()
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn lhs(&self) -> &[Vec<ExtInt<I>>] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[Vec<ExtInt<I>>] {
        &self.rhs
    }

    /// Same system with one extra row appended on both sides.
    pub fn with_row(&self, lhs: &[ExtInt<I>], rhs: &[ExtInt<I>]) -> Result<Self> {
        if lhs.len() != self.ncols() || rhs.len() != self.ncols() {
            return Err(Error::Shape("appended row has wrong length".into()));
        }
        let mut l = self.lhs.clone();
        let mut r = self.rhs.clone();
        l.push(lhs.to_vec());
        r.push(rhs.to_vec());
        let domain = if lhs.iter().chain(rhs).any(|e| e.is_inf()) {
            Domain::IntInf
        } else {
            self.domain
        };
        Self::new(l, r, self.relation, domain)
    }

    pub fn max_finite(&self) -> Option<I> {
        self.lhs
            .iter()
            .chain(self.rhs.iter())
            .flatten()
            .filter_map(|e| e.finite())
            .max()
            .cloned()
    }

    fn eval_side(side: &[Vec<ExtInt<I>>], x: &[ExtInt<I>]) -> Vec<ExtInt<I>> {
        side.iter()
            .map(|row| {
                let terms: Vec<_> = row.iter().zip(x).map(|(a, v)| a.add_ext(v)).collect();
                min_ext(terms.iter()).expect("nonempty row")
            })
            .collect()
    }

    /// Per-row equality or `≤` of the two evaluations.
    pub fn is_solution(&self, x: &[ExtInt<I>]) -> Result<bool> {
        if x.len() != self.ncols() {
            return Err(Error::Shape("vector length does not match columns".into()));
        }
        check_not_all_inf(x)?;
        let l = Self::eval_side(&self.lhs, x);
        let r = Self::eval_side(&self.rhs, x);
        Ok(l.iter().zip(&r).all(|(a, b)| match self.relation {
            Relation::Eq => a == b,
            Relation::Le => a <= b,
        }))
    }

    /// Star table of the joint matrix `D = (A | B)`: a star at a joint
    /// position iff the entry is finite and equals the joint row minimum.
    pub fn joint_star_table(&self) -> StarTable {
        let n = self.ncols();
        let stars = self
            .lhs
            .iter()
            .zip(&self.rhs)
            .map(|(l, r)| {
                let joint: Vec<&ExtInt<I>> = l.iter().chain(r.iter()).collect();
                let min = joint.iter().map(|e| (*e).clone()).min().expect("nonempty");
                joint.iter().map(|e| e.is_finite() && **e == min).collect()
            })
            .collect();
        StarTable { stars, part: Some(n) }
    }

    pub fn translate_rows(&self, r: &[I]) -> Result<Self> {
        if r.len() != self.nrows() {
            return Err(Error::Shape("row translation has wrong length".into()));
        }
        let shift = |side: &[Vec<ExtInt<I>>]| {
            side.iter()
                .zip(r)
                .map(|(row, d)| row.iter().map(|e| e.plus(d)).collect())
                .collect()
        };
        Ok(Self {
            lhs: shift(&self.lhs),
            rhs: shift(&self.rhs),
            relation: self.relation,
            domain: self.domain,
        })
    }

    pub fn translate_columns(&self, v: &[I]) -> Result<Self> {
        if v.len() != self.ncols() {
            return Err(Error::Shape("column translation has wrong length".into()));
        }
        let shift = |side: &[Vec<ExtInt<I>>]| {
            side.iter()
                .map(|row| {
                    row.iter()
                        .zip(v)
                        .map(|(e, d)| e.plus(d))
                        .collect::<Vec<_>>()
                })
                .collect()
        };
        Ok(Self {
            lhs: shift(&self.lhs),
            rhs: shift(&self.rhs),
            relation: self.relation,
            domain: self.domain,
        })
    }

    pub fn scale(&self, c: &I) -> Result<Self> {
        if *c < I::one() {
            return Err(Error::Invalid("scale factor must be positive".into()));
        }
        let mul = |side: &[Vec<ExtInt<I>>]| {
            side.iter()
                .map(|row| row.iter().map(|e| e.times(c)).collect())
                .collect()
        };
        Ok(Self {
            lhs: mul(&self.lhs),
            rhs: mul(&self.rhs),
            relation: self.relation,
            domain: self.domain,
        })
    }

    /// Joint normalization: drops rows whose both sides are all-infinite
    /// (those hold vacuously) and shifts each remaining row so the joint
    /// minimum is `0`. Returns the system (`None` if nothing survives) and
    /// the largest entry.
    pub fn normalize(&self) -> (Option<Self>, I) {
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for (l, r) in self.lhs.iter().zip(&self.rhs) {
            let min = l
                .iter()
                .chain(r.iter())
                .filter_map(|e| e.finite())
                .min()
                .cloned();
            let Some(min) = min else { continue };
            lhs.push(l.iter().map(|e| e.minus(&min)).collect::<Vec<_>>());
            rhs.push(r.iter().map(|e| e.minus(&min)).collect::<Vec<_>>());
        }
        let max = lhs
            .iter()
            .chain(rhs.iter())
            .flatten()
            .filter_map(|e| e.finite())
            .max()
            .cloned()
            .unwrap_or_else(I::zero);
        if lhs.is_empty() {
            return (None, max);
        }
        (
            Some(Self { lhs, rhs, relation: self.relation, domain: self.domain }),
            max,
        )
    }
}

impl StarTable {
    pub fn from_parts(stars: Vec<Vec<bool>>, part: Option<usize>) -> Self {
        Self { stars, part }
    }

    pub fn nrows(&self) -> usize {
        self.stars.len()
    }

    /// Table width: `n` for one-sided tables, `2n` for joint tables.
    pub fn width(&self) -> usize {
        self.stars.first().map_or(0, |r| r.len())
    }

    /// Number of logical columns (column numbers shared by both parts).
    pub fn logical_cols(&self) -> usize {
        match self.part {
            Some(n) => n,
            None => self.width(),
        }
    }

    pub fn part(&self) -> Option<usize> {
        self.part
    }

    pub fn has_star(&self, row: usize, col: usize) -> bool {
        self.stars[row][col]
    }

    pub fn row(&self, row: usize) -> &[bool] {
        &self.stars[row]
    }

    /// Star positions of a row as logical column indices in the given part
    /// (part 0 = `A`, part 1 = `B`); one-sided tables only have part 0.
    pub fn part_stars(&self, row: usize, part_idx: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.logical_cols();
        let off = part_idx * n;
        self.stars[row][off..off + n]
            .iter()
            .enumerate()
            .filter_map(|(j, s)| s.then_some(j))
    }
}

/// A borrowed view of either kind of system, for code that only needs the
/// solution predicate and basic shape.
pub enum SystemRef<'a, I> {
    Tropical(&'a TropicalSystem<I>),
    MinPlus(&'a TwoSidedSystem<I>),
}

impl<I> Clone for SystemRef<'_, I> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<I> Copy for SystemRef<'_, I> {}

impl<'a, I: Scalar> SystemRef<'a, I> {
    pub fn ncols(&self) -> usize {
        match self {
            SystemRef::Tropical(a) => a.ncols(),
            SystemRef::MinPlus(s) => s.ncols(),
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            SystemRef::Tropical(a) => a.domain(),
            SystemRef::MinPlus(s) => s.domain(),
        }
    }

    pub fn is_solution(&self, x: &[ExtInt<I>]) -> Result<bool> {
        match self {
            SystemRef::Tropical(a) => a.is_solution(x),
            SystemRef::MinPlus(s) => s.is_solution(x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extint::Inf;

    type T = TropicalSystem<i64>;

    pub(crate) fn ext(v: &[i64]) -> Vec<ExtInt<i64>> {
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
    fn evaluate_matches_row_minima() {
        assert_eq!(f1().evaluate(&ext(&[2, 2, 2])).unwrap(), ext(&[2, 2]));
        let a = T::new(vec![vec![Finite(0), Inf]], Domain::IntInf).unwrap();
        assert_eq!(a.evaluate(&ext(&[3, 5])).unwrap(), ext(&[3]));
        assert_eq!(
            f2().evaluate(&ext(&[0, 0, 0, 0, 0])).unwrap(),
            ext(&[0, 0, 0, 0])
        );
        assert!(matches!(
            f1().evaluate(&ext(&[0, 0])),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn solution_predicate() {
        assert!(f1().is_solution(&ext(&[0, 0, 0])).unwrap());
        // Row 2 evaluates to (0,2,1): unique minimum.
        assert!(!f1().is_solution(&ext(&[0, 1, 1])).unwrap());
        assert!(matches!(
            f1().is_solution(&[Inf, Inf, Inf]),
            Err(Error::AllInfinite)
        ));
    }

    #[test]
    fn star_tables() {
        let t = f1().star_table();
        let stars: Vec<Vec<usize>> = (0..2)
            .map(|r| t.part_stars(r, 0).collect())
            .collect();
        assert_eq!(stars, vec![vec![1, 2], vec![0, 2]]);
        for (r, row) in f2().rows().iter().enumerate() {
            let expect: Vec<usize> = row
                .iter()
                .enumerate()
                .filter_map(|(j, e)| (*e == Finite(0)).then_some(j))
                .collect();
            let got: Vec<usize> = f2().star_table().part_stars(r, 0).collect();
            assert_eq!(got, expect);
        }
        let all_inf = T::new(vec![vec![Inf, Inf]], Domain::IntInf).unwrap();
        assert!(all_inf.star_table().row(0).iter().all(|s| !s));
    }

    #[test]
    fn joint_star_tables() {
        let s = TwoSidedSystem::new(
            vec![vec![Finite(0), Inf]],
            vec![vec![Inf, Finite(0)]],
            Relation::Le,
            Domain::IntInf,
        )
        .unwrap();
        let t = s.joint_star_table();
        assert_eq!(t.part_stars(0, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(t.part_stars(0, 1).collect::<Vec<_>>(), vec![1]);

        let s = TwoSidedSystem::new(
            vec![vec![Finite(1), Inf]],
            vec![vec![Inf, Finite(0)]],
            Relation::Le,
            Domain::IntInf,
        )
        .unwrap();
        let t = s.joint_star_table();
        assert_eq!(t.part_stars(0, 0).count(), 0);
        assert_eq!(t.part_stars(0, 1).collect::<Vec<_>>(), vec![1]);

        let s = TwoSidedSystem::from_finite(vec![vec![0, 0]], vec![vec![0, 0]], Relation::Eq)
            .unwrap();
        assert_eq!(s.joint_star_table().row(0).iter().filter(|s| **s).count(), 4);
    }

    #[test]
    fn minplus_solutions() {
        let s = TwoSidedSystem::new(
            vec![vec![Finite(0), Inf]],
            vec![vec![Inf, Finite(0)]],
            Relation::Le,
            Domain::IntInf,
        )
        .unwrap();
        assert!(s.is_solution(&ext(&[0, 1])).unwrap());
        assert!(!s.is_solution(&ext(&[1, 0])).unwrap());
        let eq = TwoSidedSystem::from_finite(
            vec![vec![3, 1]],
            vec![vec![3, 1]],
            Relation::Eq,
        )
        .unwrap();
        assert!(eq.is_solution(&ext(&[-5, 7])).unwrap());
    }

    #[test]
    fn transforms() {
        // Row shifts never move the solution set.
        let shifted = f1().translate_rows(&[5, 5]).unwrap();
        assert!(shifted.is_solution(&ext(&[0, 0, 0])).unwrap());
        // Column shifts move it by -v.
        let shifted = f1().translate_columns(&[1, 0, 0]).unwrap();
        assert!(shifted.is_solution(&ext(&[-1, 0, 0])).unwrap());
        // Scaling by c scales solutions by c.
        let scaled = f1().scale(&3).unwrap();
        assert!(scaled.is_solution(&ext(&[0, 0, 0])).unwrap());
        assert!(f1().scale(&0).is_err());
    }

    #[test]
    fn normalize_shifts_and_drops() {
        let a = T::from_finite(vec![vec![3, 4, 5]]).unwrap();
        let (a2, m) = a.normalize();
        assert_eq!(a2.unwrap(), T::from_finite(vec![vec![0, 1, 2]]).unwrap());
        assert_eq!(m, 2);

        let (f, m) = f1().normalize();
        assert_eq!(f.unwrap(), f1());
        assert_eq!(m, 1);

        let a = T::new(
            vec![vec![Inf, Inf], vec![Finite(0), Finite(1)]],
            Domain::IntInf,
        )
        .unwrap();
        let (a2, m) = a.normalize();
        assert_eq!(a2.unwrap().rows(), &[ext(&[0, 1])]);
        assert_eq!(m, 1);
    }

    #[test]
    fn finitize_cases() {
        let a = T::from_finite(vec![vec![0, 0, 0]]).unwrap();
        let x = vec![Finite(0), Finite(0), Inf];
        assert_eq!(a.finitize(&x).unwrap(), vec![0, 0, 1]);

        let a = T::from_finite(vec![vec![0, 5, 0]]).unwrap();
        let x = vec![Finite(2), Inf, Finite(2)];
        assert_eq!(a.finitize(&x).unwrap(), vec![2, 8, 2]);

        // (0,0,∞) does not solve F1: precondition error.
        let x = vec![Finite(0), Finite(0), Inf];
        assert!(matches!(f1().finitize(&x), Err(Error::NotASolution(_))));
    }

    #[test]
    fn projective_invariance() {
        for c in [-3i64, 0, 11] {
            let x: Vec<_> = ext(&[0 + c, 0 + c, 0 + c]);
            assert!(f1().is_solution(&x).unwrap());
        }
    }
}
