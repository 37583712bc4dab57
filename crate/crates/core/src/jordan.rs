//! The exceptional Jordan algebra of Hermitian 3x3 octonion matrices and its
//! complexification: Jordan product, Freudenthal cross product, trace and
//! trilinear forms, determinant, and the standard 27-element basis.

use std::sync::OnceLock;

use crate::cayley::Octonion;
use crate::scalar::{Ctx, CycScalar, Rational};

/// Hermitian element (xi1, xi2, xi3; x1, x2, x3) of the (complexified)
/// exceptional Jordan algebra:
///
/// ```text
///   [ xi1      x3   conj(x2) ]
///   [ conj(x3) xi2   x1      ]
///   [ x2   conj(x1)  xi3     ]
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JordanElem {
    pub xi: [CycScalar; 3],
    pub x: [Octonion; 3],
}

pub const DIM: usize = 27;

impl JordanElem {
    pub fn zero(ctx: &Ctx) -> Self {
        JordanElem {
            xi: std::array::from_fn(|_| ctx.zero()),
            x: std::array::from_fn(|_| Octonion::zero(ctx)),
        }
    }

    pub fn ctx(&self) -> &Ctx {
        self.xi[0].ctx()
    }

    /// Diagonal idempotent E_i (i = 0, 1, 2).
    pub fn e(ctx: &Ctx, i: usize) -> Self {
        let mut out = JordanElem::zero(ctx);
        out.xi[i] = ctx.one();
        out
    }

    /// F_i(x): the Hermitian element with x in the i-th off-diagonal slot.
    pub fn f(i: usize, x: Octonion) -> Self {
        let ctx = x.ctx().clone();
        let mut out = JordanElem::zero(&ctx);
        out.x[i] = x;
        out
    }

    /// The identity matrix E = E1 + E2 + E3.
    pub fn identity(ctx: &Ctx) -> Self {
        let mut out = JordanElem::zero(ctx);
        for i in 0..3 {
            out.xi[i] = ctx.one();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(|v| v.is_zero()) && self.x.iter().all(|v| v.is_zero())
    }

    /// Lies in the real (non-complexified) algebra.
    pub fn is_real_form(&self) -> bool {
        self.xi.iter().all(|v| v.is_real()) && self.x.iter().all(|v| v.is_real_form())
    }

    pub fn add(&self, o: &JordanElem) -> JordanElem {
        JordanElem {
            xi: std::array::from_fn(|i| self.xi[i].add(&o.xi[i])),
            x: std::array::from_fn(|i| self.x[i].add(&o.x[i])),
        }
    }

    pub fn sub(&self, o: &JordanElem) -> JordanElem {
        JordanElem {
            xi: std::array::from_fn(|i| self.xi[i].sub(&o.xi[i])),
            x: std::array::from_fn(|i| self.x[i].sub(&o.x[i])),
        }
    }

    pub fn neg(&self) -> JordanElem {
        JordanElem {
            xi: std::array::from_fn(|i| self.xi[i].neg()),
            x: std::array::from_fn(|i| self.x[i].neg()),
        }
    }

    pub fn scale(&self, s: &CycScalar) -> JordanElem {
        JordanElem {
            xi: std::array::from_fn(|i| self.xi[i].mul(s)),
            x: std::array::from_fn(|i| self.x[i].scale(s)),
        }
    }

    pub fn scale_ratio(&self, p: i64, q: i64) -> JordanElem {
        let s = self.ctx().ratio(p, q);
        self.scale(&s)
    }

    /// Complexification-level conjugation tau (entrywise scalar conjugation).
    pub fn tau(&self) -> JordanElem {
        JordanElem {
            xi: std::array::from_fn(|i| self.xi[i].conj()),
            x: std::array::from_fn(|i| self.x[i].tau()),
        }
    }

    pub fn trace(&self) -> CycScalar {
        self.xi[0].add(&self.xi[1]).add(&self.xi[2])
    }

    /// The 3x3 octonion matrix entries (row, col).
    fn entry(&self, r: usize, c: usize) -> Octonion {
        let ctx = self.ctx();
        match (r, c) {
            (0, 0) => Octonion::from_coords(std::array::from_fn(|k| {
                if k == 0 { self.xi[0].clone() } else { ctx.zero() }
            })),
            (1, 1) => Octonion::from_coords(std::array::from_fn(|k| {
                if k == 0 { self.xi[1].clone() } else { ctx.zero() }
            })),
            (2, 2) => Octonion::from_coords(std::array::from_fn(|k| {
                if k == 0 { self.xi[2].clone() } else { ctx.zero() }
            })),
            (0, 1) => self.x[2].clone(),
            (1, 0) => self.x[2].oct_conj(),
            (1, 2) => self.x[0].clone(),
            (2, 1) => self.x[0].oct_conj(),
            (2, 0) => self.x[1].clone(),
            (0, 2) => self.x[1].oct_conj(),
            _ => unreachable!(),
        }
    }

    /// Jordan product X o Y = (XY + YX)/2, computed on the 3x3 octonion
    /// matrix representation with a fixed row-by-column evaluation order.
    /// The symmetrization makes the result independent of that order (tested).
    pub fn circ(&self, o: &JordanElem) -> JordanElem {
        let ctx = self.ctx();
        let prod = |a: &JordanElem, b: &JordanElem, r: usize, c: usize| -> Octonion {
            let mut acc = Octonion::zero(ctx);
            for k in 0..3 {
                acc = acc.add(&a.entry(r, k).mul(&b.entry(k, c)));
            }
            acc
        };
        let sym = |r: usize, c: usize| -> Octonion {
            prod(self, o, r, c).add(&prod(o, self, r, c)).scale(&ctx.ratio(1, 2))
        };
        let d0 = sym(0, 0);
        let d1 = sym(1, 1);
        let d2 = sym(2, 2);
        debug_assert!(d0.c[1..].iter().all(|v| v.is_zero()));
        debug_assert!(d1.c[1..].iter().all(|v| v.is_zero()));
        debug_assert!(d2.c[1..].iter().all(|v| v.is_zero()));
        JordanElem {
            xi: [d0.c[0].clone(), d1.c[0].clone(), d2.c[0].clone()],
            x: [sym(1, 2), sym(2, 0), sym(0, 1)],
        }
    }

    /// Trace bilinear form (X, Y) = tr(X o Y), evaluated directly.
    pub fn inner(&self, o: &JordanElem) -> CycScalar {
        let mut acc = self.ctx().zero();
        for i in 0..3 {
            acc = acc.add(&self.xi[i].mul(&o.xi[i]));
            acc = acc.add(&self.x[i].inner(&o.x[i]).scale_ratio(2, 1));
        }
        acc
    }

    /// Freudenthal cross product
    /// X x Y = (2 X o Y - tr(X) Y - tr(Y) X + (tr(X)tr(Y) - (X,Y)) E) / 2.
    pub fn cross(&self, o: &JordanElem) -> JordanElem {
        let ctx = self.ctx();
        let tx = self.trace();
        let ty = o.trace();
        let mut acc = self.circ(o).scale_ratio(2, 1);
        acc = acc.sub(&o.scale(&tx));
        acc = acc.sub(&self.scale(&ty));
        let c = tx.mul(&ty).sub(&self.inner(o));
        acc = acc.add(&JordanElem::identity(ctx).scale(&c));
        acc.scale_ratio(1, 2)
    }

    /// Totally symmetric trilinear form (X, Y, Z) = (X, Y x Z).
    pub fn trilinear(&self, y: &JordanElem, z: &JordanElem) -> CycScalar {
        self.inner(&y.cross(z))
    }

    /// det X = (X, X, X)/3.
    pub fn det(&self) -> CycScalar {
        self.trilinear(self, self).scale_ratio(1, 3)
    }

    /// Hermitian inner product <X, Y> = (tau X, Y).
    pub fn hermitian_inner(&self, o: &JordanElem) -> CycScalar {
        self.tau().inner(o)
    }

    /// Coordinates in the standard basis (E1, E2, E3, F1(e0..e7), F2(..), F3(..)).
    pub fn to_vec(&self) -> Vec<CycScalar> {
        let mut v = Vec::with_capacity(DIM);
        for i in 0..3 {
            v.push(self.xi[i].clone());
        }
        for i in 0..3 {
            for k in 0..8 {
                v.push(self.x[i].c[k].clone());
            }
        }
        v
    }

    pub fn from_vec(ctx: &Ctx, v: &[CycScalar]) -> JordanElem {
        assert_eq!(v.len(), DIM);
        let mut out = JordanElem::zero(ctx);
        for i in 0..3 {
            out.xi[i] = v[i].clone();
        }
        for i in 0..3 {
            for k in 0..8 {
                out.x[i].c[k] = v[3 + 8 * i + k].clone();
            }
        }
        out
    }
}

/// The ordered 27-element standard basis.
pub fn basis(ctx: &Ctx) -> Vec<JordanElem> {
    let mut b = Vec::with_capacity(DIM);
    for i in 0..3 {
        b.push(JordanElem::e(ctx, i));
    }
    for i in 0..3 {
        for k in 0..8 {
            b.push(JordanElem::f(i, Octonion::basis(ctx, k)));
        }
    }
    b
}

/// Norm weights of the basis: (b_s, b_s) = 1 for E_i, 2 for F_i(e_k).
pub fn basis_weight(s: usize) -> i64 {
    if s < 3 {
        1
    } else {
        2
    }
}

/// Rational structure constants of the Jordan and Freudenthal products on
/// the standard basis; conductor-independent, so they are computed once and
/// reused by every membership predicate.
pub struct JordanTables {
    /// circ[i][j] = sparse coords of b_i o b_j
    pub circ: Vec<Vec<Vec<(usize, Rational)>>>,
    /// cross[i][j] = sparse coords of b_i x b_j
    pub cross: Vec<Vec<Vec<(usize, Rational)>>>,
}

pub fn tables() -> &'static JordanTables {
    static TABLES: OnceLock<JordanTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let ctx = Ctx::default36();
        let b = basis(&ctx);
        let sparse = |e: &JordanElem| -> Vec<(usize, Rational)> {
            e.to_vec()
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(s, v)| {
                    (s, v.as_rational().expect("structure constants are rational"))
                })
                .collect()
        };
        let mut circ = Vec::with_capacity(DIM);
        let mut cross = Vec::with_capacity(DIM);
        for i in 0..DIM {
            let mut ci = Vec::with_capacity(DIM);
            let mut xi = Vec::with_capacity(DIM);
            for j in 0..DIM {
                if j < i {
                    // symmetric products: reuse the transposed entry
                    let prev_c: &Vec<Vec<(usize, Rational)>> = &circ[j];
                    ci.push(prev_c[i].clone());
                    let prev_x: &Vec<Vec<(usize, Rational)>> = &cross[j];
                    xi.push(prev_x[i].clone());
                } else {
                    ci.push(sparse(&b[i].circ(&b[j])));
                    xi.push(sparse(&b[i].cross(&b[j])));
                }
            }
            circ.push(ci);
            cross.push(xi);
        }
        JordanTables { circ, cross }
    })
}

/// Evaluate a tabulated symmetric bilinear product on dense coordinate
/// vectors (the fast path used by the membership predicates).
pub fn bilinear(
    table: &[Vec<Vec<(usize, Rational)>>],
    x: &[CycScalar],
    y: &[CycScalar],
    ctx: &Ctx,
) -> Vec<CycScalar> {
    let mut out = vec![ctx.zero(); DIM];
    for (i, xv) in x.iter().enumerate() {
        if xv.is_zero() {
            continue;
        }
        for (j, yv) in y.iter().enumerate() {
            if yv.is_zero() {
                continue;
            }
            let coeff = xv.mul(yv);
            for (s, r) in &table[i][j] {
                out[*s] = out[*s].add(&coeff.scale_rational(r));
            }
        }
    }
    out
}

/// Apply a sparse rational vector as a dense scalar vector.
pub fn sparse_to_dense(v: &[(usize, Rational)], ctx: &Ctx) -> Vec<CycScalar> {
    let mut out = vec![ctx.zero(); DIM];
    for (s, r) in v {
        out[*s] = ctx.rational(r);
    }
    out
}
