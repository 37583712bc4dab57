//! Dense matrices over the cyclotomic scalar field. Multiplication skips
//! zero entries, which matters: almost every map in this crate is sparse.

use crate::linalg::invert_dense;
use crate::scalar::{Ctx, CycScalar};

#[derive(Clone, PartialEq, Eq)]
pub struct CycMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<CycScalar>,
}

impl std::fmt::Debug for CycMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CycMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}; ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl CycMat {
    pub fn zero(ctx: &Ctx, rows: usize, cols: usize) -> Self {
        CycMat { rows, cols, data: vec![ctx.zero(); rows * cols] }
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Self {
        let mut m = CycMat::zero(ctx, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = ctx.one();
        }
        m
    }

    pub fn ctx(&self) -> &Ctx {
        self.data[0].ctx()
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &CycScalar {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut CycScalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn from_fn(ctx: &Ctx, rows: usize, cols: usize, f: impl Fn(usize, usize) -> CycScalar) -> Self {
        let _ = ctx;
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        CycMat { rows, cols, data }
    }

    pub fn diag(ctx: &Ctx, entries: &[CycScalar]) -> Self {
        let n = entries.len();
        let mut m = CycMat::zero(ctx, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = entries[i].clone();
        }
        m
    }

    pub fn add(&self, o: &CycMat) -> CycMat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        CycMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &CycMat) -> CycMat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        CycMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> CycMat {
        CycMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &CycScalar) -> CycMat {
        CycMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn mul(&self, o: &CycMat) -> CycMat {
        assert_eq!(self.cols, o.rows);
        let ctx = self.ctx();
        let mut out = CycMat::zero(ctx, self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul(b);
                    let cur = out.at(r, c).add(&t);
                    *out.at_mut(r, c) = cur;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> CycMat {
        CycMat::from_fn(self.ctx(), self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Entrywise scalar conjugation.
    pub fn conj_entries(&self) -> CycMat {
        CycMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.conj()).collect(),
        }
    }

    pub fn apply(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(self.cols, v.len());
        let ctx = self.ctx();
        let mut out = vec![ctx.zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = out[r].add(&a.mul(&v[c]));
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.at(r, c);
                if r == c {
                    if !e.is_one() {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// All entries fixed by scalar conjugation.
    pub fn is_real(&self) -> bool {
        self.data.iter().all(|a| a.is_real())
    }

    pub fn inverse(&self) -> Option<CycMat> {
        assert_eq!(self.rows, self.cols);
        let data = invert_dense(&self.data, self.rows)?;
        Some(CycMat { rows: self.rows, cols: self.cols, data })
    }

    pub fn pow(&self, e: u64) -> CycMat {
        assert_eq!(self.rows, self.cols);
        let mut acc = CycMat::identity(self.ctx(), self.rows);
        let mut b = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Determinant by fraction-free-ish Gaussian elimination on a copy.
    pub fn det(&self) -> CycScalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let ctx = self.ctx();
        let mut a = self.data.clone();
        let mut det = ctx.one();
        for col in 0..n {
            let piv = match (col..n).find(|&r| !a[r * n + col].is_zero()) {
                Some(p) => p,
                None => return ctx.zero(),
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = det.neg();
            }
            let p = a[col * n + col].clone();
            det = det.mul(&p);
            let pinv = p.inv().expect("pivot nonzero");
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].mul(&pinv);
                for j in col..n {
                    let t = a[col * n + j].mul(&f);
                    a[r * n + j] = a[r * n + j].sub(&t);
                }
            }
        }
        det
    }

    /// Scalar-conjugate-transpose followed by multiplication equals identity.
    pub fn is_unitary_tau(&self) -> bool {
        self.rows == self.cols && self.conj_entries().transpose().mul(self).is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let ctx = Ctx::default36();
        let i = CycMat::identity(&ctx, 3);
        assert!(i.is_identity());
        let mut m = CycMat::zero(&ctx, 3, 3);
        *m.at_mut(0, 1) = ctx.one();
        *m.at_mut(1, 0) = ctx.integer(-1);
        *m.at_mut(2, 2) = ctx.one();
        assert_eq!(m.det(), ctx.one());
        let minv = m.inverse().unwrap();
        assert!(m.mul(&minv).is_identity());
        assert!(m.pow(4).is_identity());
    }

    #[test]
    fn unitary_check() {
        let ctx = Ctx::default36();
        let w = ctx.omega();
        let d = CycMat::diag(&ctx, &[w.clone(), w.conj(), ctx.one()]);
        assert!(d.is_unitary_tau());
        assert_eq!(d.det(), ctx.one());
    }
}
