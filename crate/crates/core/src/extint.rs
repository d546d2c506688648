use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::scalar::Scalar;

/// An integer extended with `+∞`; the carrier of the `Z∞` semiring.
///
/// Ordering is total with `Inf` above every finite value. Addition absorbs:
/// `a + ∞ = ∞`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtInt<I> {
    Finite(I),
    Inf,
}

pub use ExtInt::{Finite, Inf};

impl<I: Scalar> ExtInt<I> {
    pub fn zero() -> Self {
        Finite(I::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Inf)
    }

    pub fn finite(&self) -> Option<&I> {
        match self {
            Finite(v) => Some(v),
            Inf => None,
        }
    }

    /// Adds a finite offset; `∞` is preserved.
    pub fn plus(&self, d: &I) -> Self {
        match self {
            Finite(v) => Finite(v.clone() + d.clone()),
            Inf => Inf,
        }
    }

    /// Subtracts a finite offset; `∞` is preserved.
    pub fn minus(&self, d: &I) -> Self {
        match self {
            Finite(v) => Finite(v.clone() - d.clone()),
            Inf => Inf,
        }
    }

    /// Multiplies by a finite constant; `∞` is preserved.
    pub fn times(&self, c: &I) -> Self {
        match self {
            Finite(v) => Finite(v.clone() * c.clone()),
            Inf => Inf,
        }
    }

    /// Sum of two extended values; `∞` absorbs.
    pub fn add_ext(&self, other: &Self) -> Self {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.clone() + b.clone()),
            _ => Inf,
        }
    }
}

impl<I: Scalar> From<I> for ExtInt<I> {
    fn from(v: I) -> Self {
        Finite(v)
    }
}

impl<I: Scalar> PartialOrd for ExtInt<I> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<I: Scalar> Ord for ExtInt<I> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Inf) => Ordering::Less,
            (Inf, Finite(_)) => Ordering::Greater,
            (Inf, Inf) => Ordering::Equal,
        }
    }
}

impl<I: Scalar> Add for ExtInt<I> {
    type Output = ExtInt<I>;

    fn add(self, rhs: Self) -> Self {
        self.add_ext(&rhs)
    }
}

impl<I: fmt::Display> fmt::Display for ExtInt<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            Inf => write!(f, "inf"),
        }
    }
}

impl<I: fmt::Debug> fmt::Debug for ExtInt<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v:?}"),
            Inf => write!(f, "inf"),
        }
    }
}

/// Minimum of a nonempty sequence of extended values.
pub(crate) fn min_ext<'a, I: Scalar + 'a>(
    mut it: impl Iterator<Item = &'a ExtInt<I>>,
) -> Option<ExtInt<I>> {
    let first = it.next()?.clone();
    Some(it.fold(first, |m, v| if *v < m { v.clone() } else { m }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_inf_on_top() {
        let vals: Vec<ExtInt<i64>> = vec![Finite(3), Inf, Finite(-7), Finite(0)];
        let max = vals.iter().max().unwrap();
        assert!(max.is_inf());
        assert_eq!(min_ext(vals.iter()), Some(Finite(-7)));
    }

    #[test]
    fn addition_absorbs() {
        let a: ExtInt<i64> = Finite(2);
        assert_eq!(a.clone() + Finite(3), Finite(5));
        assert_eq!(a + Inf, Inf);
        assert_eq!(ExtInt::<i64>::Inf.plus(&-4), Inf);
        assert_eq!(Finite(2i64).minus(&5), Finite(-3));
    }
}
