//! Reductions between tropical/min-plus systems and the max-atom problem.
//!
//! Forward: a tropical row constrains, for each column `i`, that
//! `min_{j≠i}(a_j + x_j) ≤ a_i + x_i`; negating and substituting `u = -x`
//! turns each constraint into a max-atom. Backward: a binary max-atom system
//! becomes a tropical system on doubled variables, with star-restriction
//! gadgets pinning `x_i = x_i'` and one gadget row per atom.

use crate::error::{Error, Result};
use crate::extint::{ExtInt, Finite};
use crate::maxatom::{MaxAtom, MaxAtomSystem};
use crate::scalar::Scalar;
use crate::system::{Domain, Relation, TropicalSystem, TwoSidedSystem};

use super::VarMap;

/// Parameters of the star-restriction gadget: the fixed finite vector `a`,
/// the total column count `n`, and the floor `c` for the free part.
#[derive(Clone, Debug)]
pub struct GadgetParams<I> {
    pub a: Vec<I>,
    pub n: usize,
    pub c: I,
}

/// Builds the `(n-k+1) × n` star-restriction gadget: the base row carries
/// `a` at the given positions and `c+1` elsewhere; one extra row per free
/// column lowers that column to `c`, and one row lowers the whole `a`-part
/// by one. In any solution of a system containing these rows, every gadget
/// row attains its minimum at least twice inside the `a`-part.
pub fn stars_gadget<I: Scalar>(
    p: &GadgetParams<I>,
    positions: &[usize],
) -> Result<TropicalSystem<I>> {
    let k = p.a.len();
    if k > p.n {
        return Err(Error::Invalid("gadget vector longer than column count".into()));
    }
    if positions.len() != k {
        return Err(Error::Shape("one position per gadget entry required".into()));
    }
    if positions.windows(2).any(|w| w[0] >= w[1]) || positions.iter().any(|&j| j >= p.n) {
        return Err(Error::Invalid("positions must be strictly increasing and in range".into()));
    }
    let one = I::one();
    let cp1 = p.c.clone() + one.clone();
    let mut base = vec![Finite(cp1.clone()); p.n];
    for (t, &j) in positions.iter().enumerate() {
        base[j] = Finite(p.a[t].clone());
    }
    let mut rows = Vec::with_capacity(p.n - k + 1);
    let mut l0 = base.clone();
    for &j in positions {
        l0[j] = l0[j].minus(&one);
    }
    rows.push(l0);
    for j in 0..p.n {
        if !positions.contains(&j) {
            let mut li = base.clone();
            li[j] = li[j].minus(&one);
            rows.push(li);
        }
    }
    TropicalSystem::new(rows, Domain::Int)
}

/// Atoms of one `min_{j∈terms}(coef_j + x_j) ≤ bound_i + x_i` family, after
/// the `u = -x` flip: `max_j(u_j - coef_j) + bound_i ≥ u_i`.
fn row_atoms<I: Scalar>(
    lhs_terms: &[(usize, I)],
    rhs_terms: &[(usize, I)],
    nvars: usize,
    atoms: &mut Vec<MaxAtom<I>>,
) {
    for (i, bound) in rhs_terms {
        if lhs_terms.is_empty() {
            // The lhs evaluates to ∞ at every finite point while this rhs
            // term is finite: unsatisfiable by finite assignments.
            atoms.push(unsat_marker(nvars));
            return;
        }
        let terms: Vec<(usize, I)> = lhs_terms
            .iter()
            .map(|(j, c)| (*j, c.clone().neg()))
            .collect();
        atoms.push(MaxAtom::new(*i, terms, bound.clone()));
    }
}

fn unsat_marker<I: Scalar>(nvars: usize) -> MaxAtom<I> {
    debug_assert!(nvars > 0);
    MaxAtom::new(0, vec![(0, I::zero()), (0, I::zero())], I::one().neg())
}

/// Max-atom encoding of finite tropical solvability: `x` solves the system
/// iff `-x` satisfies the output. Infinite entries drop the corresponding
/// terms; a row with at most one finite entry cannot attain a finite minimum
/// twice and yields an unsatisfiable marker atom.
pub fn tropical_to_maxatom<I: Scalar>(
    a: &TropicalSystem<I>,
) -> Result<(MaxAtomSystem<I>, VarMap)> {
    let n = a.ncols();
    let mut atoms = Vec::new();
    for row in a.rows() {
        let finite: Vec<(usize, I)> = row
            .iter()
            .enumerate()
            .filter_map(|(j, e)| e.finite().map(|v| (j, v.clone())))
            .collect();
        match finite.len() {
            // An all-infinite row evaluates to ∞ and is satisfied.
            0 => {}
            1 => atoms.push(unsat_marker(n)),
            _ => {
                for (i, a_i) in &finite {
                    let lhs: Vec<(usize, I)> = finite
                        .iter()
                        .filter(|(j, _)| j != i)
                        .cloned()
                        .collect();
                    row_atoms(&lhs, &[(*i, a_i.clone())], n, &mut atoms);
                }
            }
        }
    }
    let map = MaxAtomSystem::new(n, atoms)?;
    let vmap = VarMap::new((0..n).collect(), None, true);
    Ok((map, vmap))
}

/// Max-atom encoding of min-plus solvability restricted to the `live`
/// columns (the others are pinned to `∞`). Equalities contribute both
/// orientations. MAP variable `t` carries original column `live[t]`.
pub fn minplus_to_maxatom<I: Scalar>(
    s: &TwoSidedSystem<I>,
    live: &[usize],
) -> Result<(MaxAtomSystem<I>, VarMap)> {
    if live.is_empty() {
        return Err(Error::Invalid("at least one live column required".into()));
    }
    if live.windows(2).any(|w| w[0] >= w[1]) || live.iter().any(|&j| j >= s.ncols()) {
        return Err(Error::Invalid("live columns must be strictly increasing and in range".into()));
    }
    let var_of = |col: usize| live.binary_search(&col).expect("live column");
    let nvars = live.len();
    let mut atoms = Vec::new();
    let mut orient = |lhs: &[Vec<ExtInt<I>>], rhs: &[Vec<ExtInt<I>>]| {
        for (l, r) in lhs.iter().zip(rhs) {
            let lhs_terms: Vec<(usize, I)> = live
                .iter()
                .filter_map(|&j| l[j].finite().map(|v| (var_of(j), v.clone())))
                .collect();
            let rhs_terms: Vec<(usize, I)> = live
                .iter()
                .filter_map(|&j| r[j].finite().map(|v| (var_of(j), v.clone())))
                .collect();
            row_atoms(&lhs_terms, &rhs_terms, nvars, &mut atoms);
        }
    };
    orient(s.lhs(), s.rhs());
    if s.relation() == Relation::Eq {
        orient(s.rhs(), s.lhs());
    }
    let map = MaxAtomSystem::new(nvars, atoms)?;
    let vmap = VarMap::new((0..nvars).collect(), None, true);
    Ok((map, vmap))
}

/// Tropical system solvable iff the binary-form max-atom system is.
///
/// Every variable `x_i` gets two columns (`2i`, `2i+1`) pinned equal by a
/// star-restriction gadget with `a = (0,0)`; each atom `max{x,y}+k ≥ z`
/// becomes (after the sign flip, so with `k' = -k`) a gadget around the row
/// `min{x, x', y, y', z - k', z' - k' + 1}`. Repeated variables in an atom
/// merge their row entries by minimum, which preserves the encoded
/// constraint.
pub fn maxatom_to_tropical<I: Scalar>(
    s: &MaxAtomSystem<I>,
) -> Result<(TropicalSystem<I>, VarMap)> {
    if s.atoms().iter().any(|a| !a.is_binary()) {
        return Err(Error::Invalid("maxatom_to_tropical expects binary normal form".into()));
    }
    if s.nvars() == 0 || s.atoms().is_empty() {
        return Err(Error::Invalid("empty max-atom system has no tropical form".into()));
    }
    let n = s.nvars();
    let cols = 2 * n;
    let c = s.constant_sum();
    let mut rows: Vec<Vec<ExtInt<I>>> = Vec::new();
    let zero = I::zero();
    for i in 0..n {
        let pair = GadgetParams { a: vec![zero.clone(), zero.clone()], n: cols, c: c.clone() };
        let gadget = stars_gadget(&pair, &[2 * i, 2 * i + 1])?;
        rows.extend(gadget.rows().iter().cloned());
    }
    for atom in s.atoms() {
        let x = atom.terms[0].0;
        let y = atom.terms[1].0;
        let z = atom.target;
        let k_flip = atom.k.clone().neg();
        // Logical entries on the six (possibly colliding) columns.
        let entries: [(usize, I); 6] = [
            (2 * x, zero.clone()),
            (2 * x + 1, zero.clone()),
            (2 * y, zero.clone()),
            (2 * y + 1, zero.clone()),
            (2 * z, k_flip.clone().neg()),
            (2 * z + 1, I::one() - k_flip.clone()),
        ];
        let mut merged: Vec<(usize, I)> = Vec::new();
        for (col, v) in entries {
            match merged.iter_mut().find(|(c2, _)| *c2 == col) {
                Some((_, old)) => {
                    if v < *old {
                        *old = v;
                    }
                }
                None => merged.push((col, v)),
            }
        }
        merged.sort_by_key(|(c2, _)| *c2);
        let positions: Vec<usize> = merged.iter().map(|(c2, _)| *c2).collect();
        let a_vec: Vec<I> = merged.into_iter().map(|(_, v)| v).collect();
        let gadget = stars_gadget(
            &GadgetParams { a: a_vec, n: cols, c: c.clone() },
            &positions,
        )?;
        rows.extend(gadget.rows().iter().cloned());
    }
    let system = TropicalSystem::new(rows, Domain::Int)?;
    let columns: Vec<usize> = (0..n).map(|i| 2 * i).collect();
    let primed: Vec<usize> = (0..n).map(|i| 2 * i + 1).collect();
    Ok((system, VarMap::new(columns, Some(primed), true)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::brute_tropsolv;
    use crate::reductions::solve_tropical;
    use crate::DEFAULT_BUDGET;

    type T = TropicalSystem<i64>;

    fn ext(v: &[i64]) -> Vec<ExtInt<i64>> {
        v.iter().map(|&x| Finite(x)).collect()
    }

    #[test]
    fn gadget_fixture_f3() {
        let g = stars_gadget(
            &GadgetParams { a: vec![0i64, 0], n: 3, c: 5 },
            &[0, 1],
        )
        .unwrap();
        assert_eq!(g.rows(), &[ext(&[-1, -1, 6]), ext(&[0, 0, 5])]);
    }

    #[test]
    fn gadget_forces_equality_on_grid() {
        let g = stars_gadget(
            &GadgetParams { a: vec![0i64, 0], n: 3, c: 5 },
            &[0, 1],
        )
        .unwrap();
        for x0 in 0..=6i64 {
            for x1 in 0..=6i64 {
                for x2 in 0..=6i64 {
                    if g.is_solution(&ext(&[x0, x1, x2])).unwrap() {
                        assert_eq!(x0, x1);
                    }
                }
            }
        }
    }

    #[test]
    fn gadget_minima_stay_in_the_fixed_part() {
        // Random instantiations: every solution of a system containing the
        // gadget rows has two or more minima inside the a-part of each
        // gadget row.
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(3..=4usize);
            let k = rng.gen_range(2..=n.min(3));
            let mut positions: Vec<usize> = (0..n).collect();
            positions.shuffle(&mut rng);
            let mut positions: Vec<usize> = positions[..k].to_vec();
            positions.sort_unstable();
            let a: Vec<i64> = (0..k).map(|_| rng.gen_range(-2..=2)).collect();
            let c = 20i64;
            let g = stars_gadget(&GadgetParams { a: a.clone(), n, c }, &positions).unwrap();
            if let Some(w) = brute_tropsolv(&g, DEFAULT_BUDGET).unwrap() {
                let we = ext(&w);
                for row in g.rows() {
                    let vals: Vec<ExtInt<i64>> =
                        row.iter().zip(&we).map(|(e, v)| e.add_ext(v)).collect();
                    let min = vals.iter().min().unwrap();
                    let in_part = positions
                        .iter()
                        .filter(|&&j| vals[j] == *min)
                        .count();
                    assert!(in_part >= 2, "gadget row minima escaped the fixed part");
                }
            }
        }
    }

    #[test]
    fn tropical_to_maxatom_roundtrip() {
        let f1 = T::from_finite(vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let (map, vmap) = tropical_to_maxatom(&f1).unwrap();
        let u = map.solve().expect("F1 is solvable");
        let x = vmap.pull_back(&u).unwrap();
        assert!(f1.is_solution(&ext(&x)).unwrap());

        let unsat = T::from_finite(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let (map, _) = tropical_to_maxatom(&unsat).unwrap();
        assert_eq!(map.solve(), None);

        let tiny = T::from_finite(vec![vec![0, 0]]).unwrap();
        let (map, vmap) = tropical_to_maxatom(&tiny).unwrap();
        let u = map.solve().unwrap();
        let x = vmap.pull_back(&u).unwrap();
        assert_eq!(x[0], x[1]);
    }

    #[test]
    fn maxatom_to_tropical_examples() {
        // max{x,y} ≥ z is satisfiable.
        let s = MaxAtomSystem::new(
            3,
            vec![MaxAtom::new(2, vec![(0, 0i64), (1, 0)], 0)],
        )
        .unwrap();
        let (t, vmap) = maxatom_to_tropical(&s).unwrap();
        let w = solve_tropical(&t).unwrap().expect("satisfiable");
        let assignment = vmap.pull_back(&w).unwrap();
        assert!(s.holds(&assignment).unwrap());

        // max{x,x} - 1 ≥ x is not.
        let s = MaxAtomSystem::new(
            1,
            vec![MaxAtom::new(0, vec![(0, 0i64), (0, 0)], -1)],
        )
        .unwrap();
        let (t, _) = maxatom_to_tropical(&s).unwrap();
        assert_eq!(solve_tropical(&t).unwrap(), None);
    }

    #[test]
    fn maxatom_to_tropical_random_agreement() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let nvars = rng.gen_range(1..=3usize);
            let natoms = rng.gen_range(1..=2usize);
            let atoms: Vec<MaxAtom<i64>> = (0..natoms)
                .map(|_| {
                    MaxAtom::new(
                        rng.gen_range(0..nvars),
                        vec![(rng.gen_range(0..nvars), 0), (rng.gen_range(0..nvars), 0)],
                        rng.gen_range(-2..=2),
                    )
                })
                .collect();
            let s = MaxAtomSystem::new(nvars, atoms).unwrap();
            let (t, vmap) = maxatom_to_tropical(&s).unwrap();
            let direct = s.solve();
            let via = brute_tropsolv(&t, DEFAULT_BUDGET).unwrap();
            assert_eq!(direct.is_some(), via.is_some(), "system {s:?}");
            if let Some(w) = via {
                let assignment = vmap.pull_back(&w).unwrap();
                assert!(s.holds(&assignment).unwrap());
            }
        }
    }
}
