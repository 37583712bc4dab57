//! Concrete matrix models of the derivation Lie algebras (types g2 and f4),
//! the e6 algebra built structurally on top of f4, and exact fixed-subspace
//! computations under one or two group elements. Every dimension reported
//! by the verifier comes out of the exact nullity computations here.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cayley::oct_table;
use crate::groups::{AlgMap, GroupError, GroupName, Space};
use crate::jordan::{self, DIM as JDIM};
use crate::linalg::{Echelon, SparseRow};
use crate::matrix::CycMat;
use crate::par;
use crate::scalar::{Ctx, CycScalar, Rational};

/// A basis of a matrix Lie algebra acting on one of the two modules.
#[derive(Clone)]
pub struct LieBasis {
    pub space: Space,
    pub group: GroupName,
    pub elems: Vec<CycMat>,
    solver: SpanSolver,
}

impl LieBasis {
    pub fn dim(&self) -> usize {
        self.elems.len()
    }
}

/// Nullspace of the derivation system D(x y) = D(x) y + x D(y) over all
/// basis pairs, intersected with antisymmetry for the inner product.
/// `mul_table[i][j]` gives the sparse rational coordinates of b_i b_j and
/// `weights[s] = (b_s, b_s)` for the (orthogonal) module basis.
fn derivation_nullspace(
    n: usize,
    mul_table: &dyn Fn(usize, usize) -> Vec<(usize, Rational)>,
    weights: &dyn Fn(usize) -> i64,
) -> Vec<Vec<BigRational>> {
    let unknowns = n * n; // D[r][c] at index r*n + c
    let mut ech: Echelon<BigRational> = Echelon::new(unknowns);
    // antisymmetry first: these 2-sparse rows pivot half the unknowns away
    // and keep the fill from the derivation rows low.
    for i in 0..n {
        for j in i..n {
            let mut row: SparseRow<BigRational> = Vec::new();
            let wi = BigRational::from_integer(weights(i).into());
            let wj = BigRational::from_integer(weights(j).into());
            if i == j {
                row.push((i * n + i, wi + wj));
            } else {
                // (D b_i, b_j) + (b_i, D b_j) = w_j D[j][i] + w_i D[i][j]
                let (a, b) = (i * n + j, j * n + i);
                let (a, b, ca, cb) = if a < b { (a, b, wi, wj) } else { (b, a, wj, wi) };
                row.push((a, ca));
                row.push((b, cb));
            }
            ech.insert(row);
        }
    }
    // derivation rows per unordered pair and component
    for i in 0..n {
        for j in i..n {
            let prod = mul_table(i, j);
            for c in 0..n {
                let mut coeff: HashMap<usize, BigRational> = HashMap::new();
                // + D(b_i b_j)|_c = sum_s prod_s D[c][s]
                for (s, lam) in &prod {
                    *coeff.entry(c * n + s).or_insert_with(BigRational::zero) += lam;
                }
                // - (D b_i) b_j|_c = - sum_r D[r][i] (b_r b_j)_c
                for r in 0..n {
                    let t = mul_table(r, j);
                    if let Some((_, lam)) = t.iter().find(|(s, _)| *s == c) {
                        *coeff.entry(r * n + i).or_insert_with(BigRational::zero) -= lam;
                    }
                }
                // - b_i (D b_j)|_c = - sum_r D[r][j] (b_i b_r)_c
                for r in 0..n {
                    let t = mul_table(i, r);
                    if let Some((_, lam)) = t.iter().find(|(s, _)| *s == c) {
                        *coeff.entry(r * n + j).or_insert_with(BigRational::zero) -= lam;
                    }
                }
                let mut row: SparseRow<BigRational> =
                    coeff.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if row.is_empty() {
                    continue;
                }
                row.sort_unstable_by_key(|(c, _)| *c);
                ech.insert(row);
            }
        }
    }
    ech.nullspace_basis(&BigRational::zero())
}

fn rational_vec_to_mat(ctx: &Ctx, n: usize, v: &[BigRational]) -> CycMat {
    CycMat::from_fn(ctx, n, n, |r, c| {
        let x = &v[r * n + c];
        if x.is_zero() {
            ctx.zero()
        } else {
            ctx.rational(x)
        }
    })
}

fn build_g2(ctx: &Ctx) -> LieBasis {
    let table = oct_table();
    let mul = |i: usize, j: usize| -> Vec<(usize, Rational)> {
        let (s, k) = table[i][j];
        vec![(k, BigRational::from_integer(i64::from(s).into()))]
    };
    let w = |_s: usize| 1i64;
    let null = derivation_nullspace(8, &mul, &w);
    let elems: Vec<CycMat> = null.iter().map(|v| rational_vec_to_mat(ctx, 8, v)).collect();
    let solver = SpanSolver::build(8 * 8, &elems);
    LieBasis { space: Space::Cayley8, group: GroupName::G2, elems, solver }
}

fn build_f4(ctx: &Ctx) -> LieBasis {
    let tables = jordan::tables();
    let mul = |i: usize, j: usize| -> Vec<(usize, Rational)> { tables.circ[i][j].clone() };
    let w = jordan::basis_weight;
    let null = derivation_nullspace(JDIM, &mul, &w);
    let elems: Vec<CycMat> = null.iter().map(|v| rational_vec_to_mat(ctx, JDIM, v)).collect();
    let solver = SpanSolver::build(JDIM * JDIM, &elems);
    LieBasis { space: Space::Jordan27, group: GroupName::F4, elems, solver }
}

/// Multiplication operator L_T as a matrix: column c = coords of T o b_c.
fn mult_operator(ctx: &Ctx, t_coords: &[(usize, Rational)]) -> CycMat {
    let tables = jordan::tables();
    let mut m = CycMat::zero(ctx, JDIM, JDIM);
    for (s, lam) in t_coords {
        for c in 0..JDIM {
            for (r, mu) in &tables.circ[*s][c] {
                let add = ctx.rational(&(lam * mu));
                let cur = m.at(*r, c).add(&add);
                *m.at_mut(*r, c) = cur;
            }
        }
    }
    m
}

fn build_e6(ctx: &Ctx) -> LieBasis {
    let f4 = basis(ctx, GroupName::F4);
    let mut elems = f4.elems.clone();
    // traceless Hermitian directions: E1 - E2, E2 - E3, and all F_i(e_k)
    let one = || BigRational::one();
    let mut traceless: Vec<Vec<(usize, Rational)>> = vec![
        vec![(0, one()), (1, -one())],
        vec![(1, one()), (2, -one())],
    ];
    for s in 3..JDIM {
        traceless.push(vec![(s, one())]);
    }
    let i = ctx.i_unit();
    for t in &traceless {
        elems.push(mult_operator(ctx, t).scale(&i));
    }
    let solver = SpanSolver::build(JDIM * JDIM, &elems);
    LieBasis { space: Space::Jordan27, group: GroupName::E6, elems, solver }
}

/// The Lie algebra basis for the requested group, built once per conductor.
pub fn basis(ctx: &Ctx, group: GroupName) -> LieBasis {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u8), LieBasis>>> = OnceLock::new();
    let key = (
        ctx.conductor(),
        match group {
            GroupName::G2 => 0u8,
            GroupName::F4 => 1,
            GroupName::E6 => 2,
        },
    );
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&key) {
        return b.clone();
    }
    let built = match group {
        GroupName::G2 => build_g2(ctx),
        GroupName::F4 => build_f4(ctx),
        GroupName::E6 => build_e6(ctx),
    };
    cache.lock().unwrap().insert(key, built.clone());
    built
}

/// Reduced span representation supporting exact coordinate extraction:
/// rows R_i are in full reduced echelon form (R_i[p_j] = delta_ij) with a
/// recorded transform R_i = sum_j T[i][j] B_j.
#[derive(Clone)]
struct SpanSolver {
    ambient: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<CycScalar>>,
    transform: Vec<Vec<CycScalar>>,
}

fn vectorize(m: &CycMat) -> Vec<CycScalar> {
    m.data.clone()
}

impl SpanSolver {
    fn build(ambient: usize, elems: &[CycMat]) -> SpanSolver {
        let n = elems.len();
        assert!(n > 0);
        let ctx = elems[0].ctx().clone();
        let mut rows: Vec<Vec<CycScalar>> = Vec::with_capacity(n);
        let mut transform: Vec<Vec<CycScalar>> = Vec::with_capacity(n);
        let mut pivots: Vec<usize> = Vec::with_capacity(n);
        for (k, e) in elems.iter().enumerate() {
            let mut row = vectorize(e);
            let mut t = vec![ctx.zero(); n];
            t[k] = ctx.one();
            // reduce against existing pivot rows
            for (idx, &p) in pivots.iter().enumerate() {
                if row[p].is_zero() {
                    continue;
                }
                let f = row[p].clone();
                for c in 0..ambient {
                    if !rows[idx][c].is_zero() {
                        row[c] = row[c].sub(&f.mul(&rows[idx][c]));
                    }
                }
                for c in 0..n {
                    if !transform[idx][c].is_zero() {
                        t[c] = t[c].sub(&f.mul(&transform[idx][c]));
                    }
                }
            }
            let lead = row
                .iter()
                .position(|v| !v.is_zero())
                .expect("lie basis elements must be independent");
            let inv = row[lead].inv().expect("nonzero");
            for c in 0..ambient {
                if !row[c].is_zero() {
                    row[c] = row[c].mul(&inv);
                }
            }
            for c in 0..n {
                if !t[c].is_zero() {
                    t[c] = t[c].mul(&inv);
                }
            }
            // back-eliminate the new pivot from earlier rows
            for idx in 0..rows.len() {
                if rows[idx][lead].is_zero() {
                    continue;
                }
                let f = rows[idx][lead].clone();
                for c in 0..ambient {
                    if !row[c].is_zero() {
                        rows[idx][c] = rows[idx][c].sub(&f.mul(&row[c]));
                    }
                }
                for c in 0..n {
                    if !t[c].is_zero() {
                        transform[idx][c] = transform[idx][c].sub(&f.mul(&t[c]));
                    }
                }
            }
            rows.push(row);
            transform.push(t);
            pivots.push(lead);
        }
        SpanSolver { ambient, pivots, rows, transform }
    }

    /// Exact coordinates of v in the original basis, or None if v is not in
    /// the span. Coordinates are verified by re-synthesis against the
    /// original basis elements.
    fn coords(&self, v: &[CycScalar], elems: &[CycMat]) -> Option<Vec<CycScalar>> {
        assert_eq!(v.len(), self.ambient);
        let ctx = v[0].ctx().clone();
        let n = self.rows.len();
        // c_i = v[p_i] because rows are fully reduced
        let c: Vec<CycScalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut a = vec![ctx.zero(); n];
        for i in 0..n {
            if c[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !self.transform[i][j].is_zero() {
                    a[j] = a[j].add(&c[i].mul(&self.transform[i][j]));
                }
            }
        }
        // verify: sum_j a_j B_j = v (exact, sparse in the B_j)
        let mut resid: Vec<CycScalar> = v.to_vec();
        for (j, e) in elems.iter().enumerate() {
            if a[j].is_zero() {
                continue;
            }
            for (idx, val) in e.data.iter().enumerate() {
                if !val.is_zero() {
                    resid[idx] = resid[idx].sub(&a[j].mul(val));
                }
            }
        }
        if resid.iter().all(|r| r.is_zero()) {
            Some(a)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("group element is not certified for {0:?}")]
    Uncertified(GroupName),
    #[error("space mismatch between basis and group element")]
    SpaceMismatch,
    #[error("Ad image leaves the basis span (conjugation by a non-member?)")]
    NotInSpan,
    #[error("Ad coordinates are not fixed by conjugation; real form violated")]
    NotRealCoords,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The matrix of Ad(g): D -> g D g^{-1} in basis coordinates.
pub fn ad_matrix(basis: &LieBasis, g: &AlgMap) -> Result<CycMat, LieError> {
    if g.space != basis.space {
        return Err(LieError::SpaceMismatch);
    }
    if !g.is_member(basis.group) {
        return Err(LieError::Uncertified(basis.group));
    }
    let ginv = g.inverse()?;
    let n = basis.dim();
    let ctx = g.ctx().clone();
    let cols: Vec<Vec<CycScalar>> = par::map_indices(n, |k| {
        let conj = g.mat.mul(&basis.elems[k]).mul(&ginv.mat);
        basis
            .solver
            .coords(&vectorize(&conj), &basis.elems)
            .ok_or(LieError::NotInSpan)
            .and_then(|a| {
                if a.iter().all(|x| x.is_real()) {
                    Ok(a)
                } else {
                    Err(LieError::NotRealCoords)
                }
            })
            .unwrap_or_default()
    });
    if cols.iter().any(|c| c.is_empty()) {
        // re-run sequentially to surface the precise error
        for k in 0..n {
            let conj = g.mat.mul(&basis.elems[k]).mul(&ginv.mat);
            let a = basis
                .solver
                .coords(&vectorize(&conj), &basis.elems)
                .ok_or(LieError::NotInSpan)?;
            if !a.iter().all(|x| x.is_real()) {
                return Err(LieError::NotRealCoords);
            }
        }
        unreachable!("parallel pass failed but sequential pass succeeded");
    }
    let mut m = CycMat::zero(&ctx, n, n);
    for (k, col) in cols.iter().enumerate() {
        for r in 0..n {
            *m.at_mut(r, k) = col[r].clone();
        }
    }
    Ok(m)
}

/// Basis of the joint fixed subspace {D : g D g^{-1} = D for all g}, in
/// basis coordinates.
pub fn fixed_subspace(basis: &LieBasis, gs: &[&AlgMap]) -> Result<Vec<Vec<CycScalar>>, LieError> {
    let n = basis.dim();
    let ctx = basis.elems[0].ctx().clone();
    let mut ech: Echelon<CycScalar> = Echelon::new(n);
    for g in gs {
        let ad = ad_matrix(basis, g)?;
        for r in 0..n {
            let mut row: SparseRow<CycScalar> = Vec::new();
            for c in 0..n {
                let mut v = ad.at(r, c).clone();
                if r == c {
                    v = v.sub(&ctx.one());
                }
                if !v.is_zero() {
                    row.push((c, v));
                }
            }
            ech.insert(row);
        }
    }
    Ok(ech.nullspace_basis(&ctx.zero()))
}

/// Dimension of the joint fixed subalgebra.
pub fn fixed_dim(basis: &LieBasis, gs: &[&AlgMap]) -> Result<usize, LieError> {
    Ok(fixed_subspace(basis, gs)?.len())
}

/// Exact equality of two spans given by coordinate vectors.
pub fn spans_equal(a: &[Vec<CycScalar>], b: &[Vec<CycScalar>], n: usize) -> bool {
    if a.is_empty() || b.is_empty() {
        return a.is_empty() && b.is_empty();
    }
    let to_ech = |rows: &[Vec<CycScalar>]| {
        let mut e: Echelon<CycScalar> = Echelon::new(n);
        for r in rows {
            let sparse: SparseRow<CycScalar> = r
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect();
            e.insert(sparse);
        }
        e
    };
    let ea = to_ech(a);
    let eb = to_ech(b);
    ea.rank() == eb.rank()
        && a.iter().all(|r| eb.contains(r))
        && b.iter().all(|r| ea.contains(r))
}

/// Lie bracket in the ambient matrix algebra.
pub fn bracket(a: &CycMat, b: &CycMat) -> CycMat {
    a.mul(b).sub(&b.mul(a))
}

/// Check the derivation identity for a matrix D against the module product.
pub fn is_derivation(basis_space: Space, d: &CycMat) -> bool {
    let ctx = d.ctx();
    match basis_space {
        Space::Cayley8 => {
            let table = oct_table();
            par::all_pairs(8, 8, |i, j| {
                // D(e_i e_j) = D(e_i) e_j + e_i D(e_j)
                let (s, k) = table[i][j];
                let lhs: Vec<CycScalar> = (0..8)
                    .map(|r| if s > 0 { d.at(r, k).clone() } else { d.at(r, k).neg() })
                    .collect();
                let mut rhs = vec![ctx.zero(); 8];
                for r in 0..8 {
                    // D e_i = sum_r d[r][i] e_r ; (e_r e_j) and (e_i e_r)
                    if !d.at(r, i).is_zero() {
                        let (s2, k2) = table[r][j];
                        let term = if s2 > 0 { d.at(r, i).clone() } else { d.at(r, i).neg() };
                        rhs[k2] = rhs[k2].add(&term);
                    }
                    if !d.at(r, j).is_zero() {
                        let (s2, k2) = table[i][r];
                        let term = if s2 > 0 { d.at(r, j).clone() } else { d.at(r, j).neg() };
                        rhs[k2] = rhs[k2].add(&term);
                    }
                }
                lhs == rhs
            })
        }
        Space::Jordan27 => {
            let tables = jordan::tables();
            par::all_sym_pairs(JDIM, |i, j| {
                let mut lhs = vec![ctx.zero(); JDIM];
                for (s, lam) in &tables.circ[i][j] {
                    for r in 0..JDIM {
                        if !d.at(r, *s).is_zero() {
                            lhs[r] = lhs[r].add(&d.at(r, *s).scale_rational(lam));
                        }
                    }
                }
                let mut rhs = vec![ctx.zero(); JDIM];
                for r in 0..JDIM {
                    if !d.at(r, i).is_zero() {
                        for (t, mu) in &tables.circ[r][j] {
                            rhs[*t] = rhs[*t].add(&d.at(r, i).scale_rational(mu));
                        }
                    }
                    if !d.at(r, j).is_zero() {
                        for (t, mu) in &tables.circ[i][r] {
                            rhs[*t] = rhs[*t].add(&d.at(r, j).scale_rational(mu));
                        }
                    }
                }
                lhs == rhs
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autohoms::Named;

    fn ctx() -> Ctx {
        Ctx::default36()
    }

    #[test]
    fn g2_dimension_and_properties() {
        let c = ctx();
        let g2 = basis(&c, GroupName::G2);
        assert_eq!(g2.dim(), 14);
        for d in &g2.elems {
            // derivations kill the unit
            assert!((0..8).all(|r| d.at(r, 0).is_zero()));
            assert!(is_derivation(Space::Cayley8, d));
        }
        // bracket closure on all pairs
        for i in 0..g2.dim() {
            for j in i + 1..g2.dim() {
                let br = bracket(&g2.elems[i], &g2.elems[j]);
                assert!(g2.solver.coords(&vectorize(&br), &g2.elems).is_some());
            }
        }
    }

    #[test]
    fn fixed_dims_on_g2() {
        let c = ctx();
        let g2 = basis(&c, GroupName::G2);
        let id = AlgMap::identity(Space::Cayley8, &c);
        assert_eq!(fixed_dim(&g2, &[&id]).unwrap(), 14);
        let gamma3 = AlgMap::named(Named::Gamma3, Space::Cayley8, &c);
        assert_eq!(fixed_dim(&g2, &[&gamma3]).unwrap(), 4);
        let w3 = AlgMap::named(Named::W3, Space::Cayley8, &c);
        assert_eq!(fixed_dim(&g2, &[&w3]).unwrap(), 8);
        assert_eq!(fixed_dim(&g2, &[&gamma3, &w3]).unwrap(), 2);
        // gamma (involution): (G2)^gamma = Sp(1) x Sp(1) / Z2, dim 6
        let gamma = AlgMap::named(Named::Gamma, Space::Cayley8, &c);
        assert_eq!(fixed_dim(&g2, &[&gamma]).unwrap(), 6);
    }

    #[test]
    fn uncertified_elements_are_rejected() {
        let c = ctx();
        let g2 = basis(&c, GroupName::G2);
        let bad = AlgMap::from_matrix(
            Space::Cayley8,
            CycMat::identity(&c, 8).scale(&c.integer(2)),
        );
        assert!(matches!(fixed_dim(&g2, &[&bad]), Err(LieError::Uncertified(GroupName::G2))));
    }
}
