//! Exact linear algebra over an abstract field: dense elimination for
//! inverses/solves of small matrices, and a sparse incremental echelon form
//! for the large derivation systems (up to ~10^4 rows over 729 unknowns).
//!
//! Division-postponed (fraction-free style) pivoting is approximated here by
//! normalizing each pivot row once and always reducing incoming rows against
//! the sparsest pivots first (rows are processed in column order), which keeps
//! coefficient growth tame for the structured systems we feed it.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Minimal exact-field interface used by the elimination routines.
pub trait FieldElem: Clone + PartialEq + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn div_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl FieldElem for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Solve the dense n x n system M x = rhs (row-major M). Returns None if M
/// is singular.
pub fn solve_dense<T: FieldElem>(mat: &[T], rhs: &[T], n: usize) -> Option<Vec<T>> {
    assert_eq!(mat.len(), n * n);
    assert_eq!(rhs.len(), n);
    let mut a: Vec<T> = mat.to_vec();
    let mut b: Vec<T> = rhs.to_vec();
    let mut row_of_col = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for col in 0..n {
        let piv = (0..n).find(|&r| !used[r] && !a[r * n + col].is_zero_elem())?;
        used[piv] = true;
        row_of_col[col] = piv;
        let inv = a[piv * n + col].one_like().div_ref(&a[piv * n + col]);
        for j in 0..n {
            a[piv * n + j] = a[piv * n + j].mul_ref(&inv);
        }
        b[piv] = b[piv].mul_ref(&inv);
        for r in 0..n {
            if r == piv || a[r * n + col].is_zero_elem() {
                continue;
            }
            let f = a[r * n + col].clone();
            for j in 0..n {
                let t = a[piv * n + j].mul_ref(&f);
                a[r * n + j] = a[r * n + j].sub_ref(&t);
            }
            let t = b[piv].mul_ref(&f);
            b[r] = b[r].sub_ref(&t);
        }
    }
    let mut x: Vec<T> = vec![rhs[0].zero_like(); n];
    for col in 0..n {
        x[col] = b[row_of_col[col]].clone();
    }
    Some(x)
}

/// Dense matrix inverse (row-major). None if singular.
pub fn invert_dense<T: FieldElem>(mat: &[T], n: usize) -> Option<Vec<T>> {
    assert_eq!(mat.len(), n * n);
    let zero = mat[0].zero_like();
    let one = mat[0].one_like();
    let mut a = mat.to_vec();
    let mut inv: Vec<T> = (0..n * n)
        .map(|k| if k / n == k % n { one.clone() } else { zero.clone() })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r * n + col].is_zero_elem())?;
        if piv != col {
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
                inv.swap(piv * n + j, col * n + j);
            }
        }
        let s = one.div_ref(&a[col * n + col]);
        for j in 0..n {
            a[col * n + j] = a[col * n + j].mul_ref(&s);
            inv[col * n + j] = inv[col * n + j].mul_ref(&s);
        }
        for r in 0..n {
            if r == col || a[r * n + col].is_zero_elem() {
                continue;
            }
            let f = a[r * n + col].clone();
            for j in 0..n {
                let t = a[col * n + j].mul_ref(&f);
                a[r * n + j] = a[r * n + j].sub_ref(&t);
                let t = inv[col * n + j].mul_ref(&f);
                inv[r * n + j] = inv[r * n + j].sub_ref(&t);
            }
        }
    }
    Some(inv)
}

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow<T> = Vec<(usize, T)>;

fn row_scale<T: FieldElem>(row: &mut SparseRow<T>, s: &T) {
    for (_, v) in row.iter_mut() {
        *v = v.mul_ref(s);
    }
}

/// dst -= f * src, both sorted sparse rows.
fn row_axpy<T: FieldElem>(dst: &SparseRow<T>, f: &T, src: &SparseRow<T>) -> SparseRow<T> {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        if j >= src.len() || (i < dst.len() && dst[i].0 < src[j].0) {
            out.push(dst[i].clone());
            i += 1;
        } else if i >= dst.len() || src[j].0 < dst[i].0 {
            let v = f.mul_ref(&src[j].1).neg_ref();
            if !v.is_zero_elem() {
                out.push((src[j].0, v));
            }
            j += 1;
        } else {
            let v = dst[i].1.sub_ref(&f.mul_ref(&src[j].1));
            if !v.is_zero_elem() {
                out.push((dst[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row-echelon form over a field: feed rows one at a time; the
/// structure maintains pivot rows keyed by leading column (each normalized
/// to leading coefficient 1).
pub struct Echelon<T> {
    /// pivot column -> normalized pivot row
    pivots: std::collections::BTreeMap<usize, SparseRow<T>>,
    ncols: usize,
}

impl<T: FieldElem> Echelon<T> {
    pub fn new(ncols: usize) -> Self {
        Echelon { pivots: Default::default(), ncols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduce a row against the current pivots (forward reduction only).
    pub fn reduce(&self, mut row: SparseRow<T>) -> SparseRow<T> {
        loop {
            let Some(&(lead, ref lv)) = row.first() else {
                return row;
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let f = lv.clone();
                    row = row_axpy(&row, &f, p);
                    debug_assert!(row.first().map(|&(c, _)| c > lead).unwrap_or(true));
                }
                None => return row,
            }
        }
    }

    /// Insert a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: SparseRow<T>) -> bool {
        let row = self.reduce(row);
        match row.first() {
            None => false,
            Some(&(lead, ref lv)) => {
                let inv = lv.one_like().div_ref(lv);
                let mut row = row;
                row_scale(&mut row, &inv);
                self.pivots.insert(lead, row);
                true
            }
        }
    }

    /// Nullity of the accumulated system (columns minus rank).
    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    /// A basis of the nullspace by back-substitution on the free columns.
    /// Basis vectors are dense (length ncols) and exact.
    pub fn nullspace_basis(&self, exemplar: &T) -> Vec<Vec<T>> {
        let zero = exemplar.zero_like();
        let one = exemplar.one_like();
        let pivot_cols: Vec<usize> = self.pivots.keys().copied().collect();
        let is_pivot = {
            let mut v = vec![false; self.ncols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if is_pivot[free] {
                continue;
            }
            let mut vec_out = vec![zero.clone(); self.ncols];
            vec_out[free] = one.clone();
            // solve pivot variables bottom-up
            for (&pc, prow) in self.pivots.iter().rev() {
                // prow = [ (pc,1), tail... ]; value = -(sum tail * x)
                let mut acc = zero.clone();
                for (c, v) in prow.iter().skip(1) {
                    if !vec_out[*c].is_zero_elem() {
                        acc = acc.add_ref(&v.mul_ref(&vec_out[*c]));
                    }
                }
                vec_out[pc] = acc.neg_ref();
            }
            basis.push(vec_out);
        }
        basis
    }

    /// Whether a dense vector lies in the row span.
    pub fn contains(&self, dense: &[T]) -> bool {
        let row: SparseRow<T> = dense
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero_elem())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        self.reduce(row).is_empty()
    }
}

/// Rank of a set of dense vectors (rows), via the sparse echelon.
pub fn rank_of_rows<T: FieldElem>(rows: &[Vec<T>], ncols: usize) -> usize {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        let sparse: SparseRow<T> = r
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero_elem())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        ech.insert(sparse);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn dense_solve_and_invert() {
        // [[2,1],[1,1]] x = [3,2] -> x = [1,1]
        let m = vec![r(2), r(1), r(1), r(1)];
        let sol = solve_dense(&m, &[r(3), r(2)], 2).unwrap();
        assert_eq!(sol, vec![r(1), r(1)]);
        let inv = invert_dense(&m, 2).unwrap();
        assert_eq!(inv, vec![r(1), r(-1), r(-1), r(2)]);
        // singular
        let s = vec![r(1), r(2), r(2), r(4)];
        assert!(invert_dense(&s, 2).is_none());
    }

    #[test]
    fn echelon_rank_and_nullspace() {
        // x + y + z = 0, x - y = 0  => rank 2, nullity 1, kernel (1,1,-2)
        let mut e: Echelon<BigRational> = Echelon::new(3);
        e.insert(vec![(0, r(1)), (1, r(1)), (2, r(1))]);
        e.insert(vec![(0, r(1)), (1, r(-1))]);
        e.insert(vec![(1, r(2)), (2, r(1))]); // dependent? 2y + z: row1-row2 = 2y+z -> dependent
        assert_eq!(e.rank(), 2);
        assert_eq!(e.nullity(), 1);
        let basis = e.nullspace_basis(&r(0));
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        // check both equations
        assert!((&v[0] + &v[1] + &v[2]).is_zero());
        assert!((&v[0] - &v[1]).is_zero());
    }

    #[test]
    fn contains_detects_span() {
        let mut e: Echelon<BigRational> = Echelon::new(3);
        e.insert(vec![(0, r(1)), (2, r(1))]);
        e.insert(vec![(1, r(1))]);
        assert!(e.contains(&[r(2), r(3), r(2)]));
        assert!(!e.contains(&[r(0), r(0), r(1)]));
    }
}
