//! Split models of the (complexified) exceptional Jordan algebra and the
//! bridging isomorphisms: the quaternionic model J(3,H) + H^3, the complex
//! model J(3,C) + M(3,C), and the k / k_J / h maps feeding the 6x6 and
//! SU(3)^3 parameter groups.

use crate::cayley::{from_split, to_split, Cx, Octonion, QUAT_TABLE};
use crate::jordan::JordanElem;
use crate::matrix::CycMat;
use crate::scalar::{Ctx, CycScalar};

/// Errors from model maps and parameter validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("k_J expects a Hermitian quaternionic matrix")]
    NotHermitian,
    #[error("matrix is not in the expected group: {0}")]
    NotInGroup(&'static str),
}

/// Quaternion with scalar (possibly complexified) coefficients on 1, e1, e2, e3.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quaternion {
    pub c: [CycScalar; 4],
}

impl Quaternion {
    pub fn zero(ctx: &Ctx) -> Self {
        Quaternion { c: std::array::from_fn(|_| ctx.zero()) }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Quaternion::basis(ctx, 0)
    }

    pub fn basis(ctx: &Ctx, k: usize) -> Self {
        let mut q = Quaternion::zero(ctx);
        q.c[k] = ctx.one();
        q
    }

    pub fn from_scalar(s: CycScalar) -> Self {
        let ctx = s.ctx().clone();
        let mut q = Quaternion::zero(&ctx);
        q.c[0] = s;
        q
    }

    pub fn from_cx(x: &Cx) -> Self {
        let ctx = x.ctx();
        Quaternion { c: [x.re.clone(), x.im.clone(), ctx.zero(), ctx.zero()] }
    }

    pub fn ctx(&self) -> &Ctx {
        self.c[0].ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, o: &Quaternion) -> Quaternion {
        Quaternion { c: std::array::from_fn(|k| self.c[k].add(&o.c[k])) }
    }

    pub fn sub(&self, o: &Quaternion) -> Quaternion {
        Quaternion { c: std::array::from_fn(|k| self.c[k].sub(&o.c[k])) }
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion { c: std::array::from_fn(|k| self.c[k].neg()) }
    }

    pub fn scale(&self, s: &CycScalar) -> Quaternion {
        Quaternion { c: std::array::from_fn(|k| self.c[k].mul(s)) }
    }

    pub fn mul(&self, o: &Quaternion) -> Quaternion {
        let ctx = self.ctx();
        let mut acc = Quaternion::zero(ctx);
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if o.c[j].is_zero() {
                    continue;
                }
                let (s, k) = QUAT_TABLE[i][j];
                let term = self.c[i].mul(&o.c[j]);
                acc.c[k] = if s > 0 { acc.c[k].add(&term) } else { acc.c[k].sub(&term) };
            }
        }
        acc
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion {
            c: std::array::from_fn(|k| if k == 0 { self.c[0].clone() } else { self.c[k].neg() }),
        }
    }

    /// q conj(q), a scalar.
    pub fn norm(&self) -> CycScalar {
        let mut acc = self.ctx().zero();
        for k in 0..4 {
            acc = acc.add(&self.c[k].mul(&self.c[k]));
        }
        acc
    }

    pub fn is_real_form(&self) -> bool {
        self.c.iter().all(|v| v.is_real())
    }

    /// Head coordinates (e0..e3) of an octonion.
    pub fn head(x: &Octonion) -> Quaternion {
        Quaternion { c: std::array::from_fn(|k| x.c[k].clone()) }
    }

    /// Tail coordinates: x = head + tail*e4.
    pub fn tail(x: &Octonion) -> Quaternion {
        Quaternion { c: std::array::from_fn(|k| x.c[k + 4].clone()) }
    }

    /// Rebuild head + tail*e4.
    pub fn assemble(head: &Quaternion, tail: &Quaternion) -> Octonion {
        Octonion::from_coords(std::array::from_fn(|k| {
            if k < 4 { head.c[k].clone() } else { tail.c[k - 4].clone() }
        }))
    }
}

/// 3x3 quaternion matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMat3 {
    pub e: [[Quaternion; 3]; 3],
}

impl QMat3 {
    pub fn zero(ctx: &Ctx) -> Self {
        QMat3 { e: std::array::from_fn(|_| std::array::from_fn(|_| Quaternion::zero(ctx))) }
    }

    pub fn identity(ctx: &Ctx) -> Self {
        let mut m = QMat3::zero(ctx);
        for i in 0..3 {
            m.e[i][i] = Quaternion::one(ctx);
        }
        m
    }

    pub fn diag(entries: [Quaternion; 3]) -> Self {
        let ctx = entries[0].ctx().clone();
        let mut m = QMat3::zero(&ctx);
        let [a, b, c] = entries;
        m.e[0][0] = a;
        m.e[1][1] = b;
        m.e[2][2] = c;
        m
    }

    pub fn ctx(&self) -> &Ctx {
        self.e[0][0].ctx()
    }

    pub fn mul(&self, o: &QMat3) -> QMat3 {
        let ctx = self.ctx();
        let mut out = QMat3::zero(ctx);
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = Quaternion::zero(ctx);
                for k in 0..3 {
                    acc = acc.add(&self.e[r][k].mul(&o.e[k][c]));
                }
                out.e[r][c] = acc;
            }
        }
        out
    }

    /// Quaternion-conjugate transpose.
    pub fn star(&self) -> QMat3 {
        QMat3 { e: std::array::from_fn(|r| std::array::from_fn(|c| self.e[c][r].conj())) }
    }

    pub fn is_identity(&self) -> bool {
        for r in 0..3 {
            for c in 0..3 {
                let q = &self.e[r][c];
                if r == c {
                    if !(q.c[0].is_one() && q.c[1..].iter().all(|v| v.is_zero())) {
                        return false;
                    }
                } else if !q.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// A A* = E (the symplectic-group condition).
    pub fn is_symplectic(&self) -> bool {
        self.mul(&self.star()).is_identity()
    }

    pub fn is_real_form(&self) -> bool {
        self.e.iter().all(|row| row.iter().all(|q| q.is_real_form()))
    }

    /// Row vector times matrix: (a A)_j = sum_k a_k A[k][j].
    pub fn row_apply(&self, a: &[Quaternion; 3]) -> [Quaternion; 3] {
        std::array::from_fn(|j| {
            let mut acc = Quaternion::zero(self.ctx());
            for k in 0..3 {
                acc = acc.add(&a[k].mul(&self.e[k][j]));
            }
            acc
        })
    }
}

/// The quaternionic split J(3,H) + H^3 of a Jordan element:
/// each off-diagonal octonion x_i = m_i + a_i e4.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HSplit {
    pub diag: [CycScalar; 3],
    pub off: [Quaternion; 3],
    pub a: [Quaternion; 3],
}

pub fn to_hsplit(x: &JordanElem) -> HSplit {
    HSplit {
        diag: x.xi.clone(),
        off: std::array::from_fn(|i| Quaternion::head(&x.x[i])),
        a: std::array::from_fn(|i| Quaternion::tail(&x.x[i])),
    }
}

pub fn from_hsplit(h: &HSplit) -> JordanElem {
    JordanElem {
        xi: h.diag.clone(),
        x: std::array::from_fn(|i| Quaternion::assemble(&h.off[i], &h.a[i])),
    }
}

impl HSplit {
    /// The matrix part as a 3x3 Hermitian quaternion matrix.
    pub fn matrix(&self) -> QMat3 {
        let ctx = self.diag[0].ctx();
        let mut m = QMat3::zero(ctx);
        for i in 0..3 {
            m.e[i][i] = Quaternion::from_scalar(self.diag[i].clone());
        }
        m.e[1][2] = self.off[0].clone();
        m.e[2][1] = self.off[0].conj();
        m.e[2][0] = self.off[1].clone();
        m.e[0][2] = self.off[1].conj();
        m.e[0][1] = self.off[2].clone();
        m.e[1][0] = self.off[2].conj();
        m
    }

    /// Rebuild from a Hermitian matrix part plus the vector part.
    pub fn from_matrix(m: &QMat3, a: [Quaternion; 3]) -> Result<HSplit, ModelError> {
        for i in 0..3 {
            if m.e[i][i].c[1..].iter().any(|v| !v.is_zero()) {
                return Err(ModelError::NotHermitian);
            }
        }
        for (r, c) in [(1usize, 2usize), (2, 0), (0, 1)] {
            if m.e[c][r] != m.e[r][c].conj() {
                return Err(ModelError::NotHermitian);
            }
        }
        Ok(HSplit {
            diag: std::array::from_fn(|i| m.e[i][i].c[0].clone()),
            off: [m.e[1][2].clone(), m.e[2][0].clone(), m.e[0][1].clone()],
            a,
        })
    }
}

/// 3x3 matrix over the commutative ring Cx.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CxMat3 {
    pub e: [[Cx; 3]; 3],
}

impl CxMat3 {
    pub fn zero(ctx: &Ctx) -> Self {
        CxMat3 { e: std::array::from_fn(|_| std::array::from_fn(|_| Cx::zero(ctx))) }
    }

    pub fn identity(ctx: &Ctx) -> Self {
        let mut m = CxMat3::zero(ctx);
        for i in 0..3 {
            m.e[i][i] = Cx::one(ctx);
        }
        m
    }

    pub fn diag(entries: [Cx; 3]) -> Self {
        let ctx = entries[0].ctx().clone();
        let mut m = CxMat3::zero(&ctx);
        let [a, b, c] = entries;
        m.e[0][0] = a;
        m.e[1][1] = b;
        m.e[2][2] = c;
        m
    }

    pub fn scalar(s: &Cx) -> Self {
        CxMat3::diag([s.clone(), s.clone(), s.clone()])
    }

    pub fn ctx(&self) -> &Ctx {
        self.e[0][0].ctx()
    }

    pub fn add(&self, o: &CxMat3) -> CxMat3 {
        CxMat3 { e: std::array::from_fn(|r| std::array::from_fn(|c| self.e[r][c].add(&o.e[r][c]))) }
    }

    pub fn sub(&self, o: &CxMat3) -> CxMat3 {
        CxMat3 { e: std::array::from_fn(|r| std::array::from_fn(|c| self.e[r][c].sub(&o.e[r][c]))) }
    }

    pub fn mul(&self, o: &CxMat3) -> CxMat3 {
        let ctx = self.ctx();
        let mut out = CxMat3::zero(ctx);
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = Cx::zero(ctx);
                for k in 0..3 {
                    if self.e[r][k].is_zero() || o.e[k][c].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.e[r][k].mul(&o.e[k][c]));
                }
                out.e[r][c] = acc;
            }
        }
        out
    }

    pub fn scale_cx(&self, s: &Cx) -> CxMat3 {
        CxMat3 { e: std::array::from_fn(|r| std::array::from_fn(|c| self.e[r][c].mul(s))) }
    }

    /// Cx-conjugate transpose (e1 -> -e1).
    pub fn star(&self) -> CxMat3 {
        CxMat3 { e: std::array::from_fn(|r| std::array::from_fn(|c| self.e[c][r].conj())) }
    }

    /// Entrywise complexification-level conjugation.
    pub fn tau(&self) -> CxMat3 {
        CxMat3 { e: std::array::from_fn(|r| std::array::from_fn(|c| self.e[r][c].tau())) }
    }

    pub fn det(&self) -> Cx {
        let e = &self.e;
        let t1 = e[0][0].mul(&e[1][1].mul(&e[2][2]).sub(&e[1][2].mul(&e[2][1])));
        let t2 = e[0][1].mul(&e[1][0].mul(&e[2][2]).sub(&e[1][2].mul(&e[2][0])));
        let t3 = e[0][2].mul(&e[1][0].mul(&e[2][1]).sub(&e[1][1].mul(&e[2][0])));
        t1.sub(&t2).add(&t3)
    }

    pub fn is_identity(&self) -> bool {
        for r in 0..3 {
            for c in 0..3 {
                if r == c {
                    if !self.e[r][c].is_one() {
                        return false;
                    }
                } else if !self.e[r][c].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// A A* = E with the Cx conjugation (entries must also have conj-fixed
    /// scalar coordinates to define a real unitary parameter).
    pub fn is_unitary(&self) -> bool {
        self.mul(&self.star()).is_identity()
    }

    pub fn is_real_form(&self) -> bool {
        self.e
            .iter()
            .all(|row| row.iter().all(|x| x.re.is_real() && x.im.is_real()))
    }
}

/// The complex split J(3,C) + M(3,C): Cx parts of the off-diagonals plus
/// the 3 x 3 Cx matrix M whose column i is the C^3 part of x_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CSplit {
    pub diag: [CycScalar; 3],
    pub off: [Cx; 3],
    pub m: CxMat3,
}

pub fn to_csplit(x: &JordanElem) -> CSplit {
    let ctx = x.ctx();
    let mut m = CxMat3::zero(ctx);
    let mut off: [Cx; 3] = std::array::from_fn(|_| Cx::zero(ctx));
    for i in 0..3 {
        let s = to_split(&x.x[i]);
        off[i] = s.m0.clone();
        for r in 0..3 {
            m.e[r][i] = s.m[r].clone();
        }
    }
    CSplit { diag: x.xi.clone(), off, m }
}

pub fn from_csplit(s: &CSplit) -> JordanElem {
    let x: [Octonion; 3] = std::array::from_fn(|i| {
        from_split(&crate::cayley::SplitCayley {
            m0: s.off[i].clone(),
            m: std::array::from_fn(|r| s.m.e[r][i].clone()),
        })
    });
    JordanElem { xi: s.diag.clone(), x }
}

impl CSplit {
    /// The J(3,C) part as a Hermitian CxMat3.
    pub fn xc_matrix(&self) -> CxMat3 {
        let ctx = self.diag[0].ctx();
        let mut m = CxMat3::zero(ctx);
        for i in 0..3 {
            m.e[i][i] = Cx::from_scalar(self.diag[i].clone());
        }
        m.e[1][2] = self.off[0].clone();
        m.e[2][1] = self.off[0].conj();
        m.e[2][0] = self.off[1].clone();
        m.e[0][2] = self.off[1].conj();
        m.e[0][1] = self.off[2].clone();
        m.e[1][0] = self.off[2].conj();
        m
    }

    pub fn from_xc_matrix(xc: &CxMat3, m: CxMat3) -> Result<CSplit, ModelError> {
        for i in 0..3 {
            if !xc.e[i][i].im.is_zero() {
                return Err(ModelError::NotHermitian);
            }
        }
        for (r, c) in [(1usize, 2usize), (2, 0), (0, 1)] {
            if xc.e[c][r] != xc.e[r][c].conj() {
                return Err(ModelError::NotHermitian);
            }
        }
        Ok(CSplit {
            diag: std::array::from_fn(|i| xc.e[i][i].re.clone()),
            off: [xc.e[1][2].clone(), xc.e[2][0].clone(), xc.e[0][1].clone()],
            m,
        })
    }
}

/// k on a single quaternion: the standard isomorphism H tensor C -> M(2, C),
/// 1 -> I, e1 -> diag(i, -i), e2 -> [[0,1],[-1,0]], e3 -> [[0,i],[i,0]].
pub fn k_quat(q: &Quaternion) -> [[CycScalar; 2]; 2] {
    let i = q.ctx().i_unit();
    [
        [q.c[0].add(&q.c[1].mul(&i)), q.c[2].add(&q.c[3].mul(&i))],
        [q.c[2].neg().add(&q.c[3].mul(&i)), q.c[0].sub(&q.c[1].mul(&i))],
    ]
}

/// Inverse of [`k_quat`].
pub fn k_quat_inv(b: &[[CycScalar; 2]; 2]) -> Quaternion {
    let ctx = b[0][0].ctx().clone();
    let i = ctx.i_unit();
    let half = ctx.ratio(1, 2);
    let mhalf_i = i.neg().scale_ratio(1, 2); // 1/(2i)
    Quaternion {
        c: [
            b[0][0].add(&b[1][1]).mul(&half),
            b[0][0].sub(&b[1][1]).mul(&mhalf_i),
            b[0][1].sub(&b[1][0]).mul(&half),
            b[0][1].add(&b[1][0]).mul(&mhalf_i),
        ],
    }
}

/// k on a full 3x3 quaternion matrix: 2x2 blocks.
pub fn k_mat(m: &QMat3) -> CycMat {
    let ctx = m.ctx();
    let mut out = CycMat::zero(ctx, 6, 6);
    for r in 0..3 {
        for c in 0..3 {
            let b = k_quat(&m.e[r][c]);
            for dr in 0..2 {
                for dc in 0..2 {
                    *out.at_mut(2 * r + dr, 2 * c + dc) = b[dr][dc].clone();
                }
            }
        }
    }
    out
}

pub fn k_mat_inv(m: &CycMat) -> QMat3 {
    assert!(m.rows == 6 && m.cols == 6);
    let ctx = m.ctx();
    let mut out = QMat3::zero(ctx);
    for r in 0..3 {
        for c in 0..3 {
            let b = [
                [m.at(2 * r, 2 * c).clone(), m.at(2 * r, 2 * c + 1).clone()],
                [m.at(2 * r + 1, 2 * c).clone(), m.at(2 * r + 1, 2 * c + 1).clone()],
            ];
            out.e[r][c] = k_quat_inv(&b);
        }
    }
    out
}

/// The block-diagonal symplectic form J = diag([[0,1],[-1,0]] x 3).
pub fn j_mat(ctx: &Ctx) -> CycMat {
    let mut j = CycMat::zero(ctx, 6, 6);
    for b in 0..3 {
        *j.at_mut(2 * b, 2 * b + 1) = ctx.one();
        *j.at_mut(2 * b + 1, 2 * b) = ctx.integer(-1);
    }
    j
}

/// k_J(M) = k(M) J: carries Hermitian quaternionic matrices to
/// skew-symmetric 6x6 matrices (the dimension count 15 = 15 forces the
/// skew-valued convention; pinned by tests and the acceptance suite).
pub fn k_j(h: &HSplit) -> Result<CycMat, ModelError> {
    let m = h.matrix();
    // Hermitian by construction of HSplit; checked for raw callers
    Ok(k_mat(&m).mul(&j_mat(m.ctx())))
}

/// Inverse of [`k_j`] on the matrix part; errors if the preimage is not
/// Hermitian (i.e. the input was not skew in the right sense).
pub fn k_j_inv(s: &CycMat, a: [Quaternion; 3]) -> Result<HSplit, ModelError> {
    let ctx = s.ctx();
    let jinv = j_mat(ctx).neg(); // J^2 = -E
    let m = k_mat_inv(&s.mul(&jinv));
    HSplit::from_matrix(&m, a)
}

/// h(A,B) = (A+B)/2 + i (B-A) e1 / 2, mixing two Cx matrices into one
/// complexified matrix; h(A,A) = A and h is multiplicative per slot.
pub fn h_mix(a: &CxMat3, b: &CxMat3) -> CxMat3 {
    let ctx = a.ctx();
    let i = ctx.i_unit();
    let half = ctx.ratio(1, 2);
    let sum = a.add(b);
    let diff = b.sub(a);
    CxMat3 {
        e: std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let s = sum.e[r][c].scale(&half);
                // (x) * e1 = (-im, re), then * i/2
                let d = &diff.e[r][c];
                let de1 = Cx::new(d.im.neg(), d.re.clone());
                s.add(&de1.scale(&i).scale(&half))
            })
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{basis, DIM};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx() -> Ctx {
        Ctx::default36()
    }

    #[test]
    fn hsplit_round_trip_and_examples() {
        let c = ctx();
        for b in basis(&c) {
            assert_eq!(from_hsplit(&to_hsplit(&b)), b);
        }
        // to_hsplit(F1(e4)) has zero matrix part and a = (1,0,0)
        let f = JordanElem::f(0, Octonion::basis(&c, 4));
        let h = to_hsplit(&f);
        assert!(h.diag.iter().all(|v| v.is_zero()));
        assert!(h.off.iter().all(|q| q.is_zero()));
        assert_eq!(h.a[0], Quaternion::one(&c));
        assert!(h.a[1].is_zero() && h.a[2].is_zero());
        // to_hsplit(E1) = (E1, 0)
        let h = to_hsplit(&JordanElem::e(&c, 0));
        assert_eq!(h.diag[0], c.one());
        assert!(h.a.iter().all(|q| q.is_zero()));
    }

    #[test]
    fn csplit_round_trip_and_examples() {
        let c = ctx();
        for b in basis(&c) {
            assert_eq!(from_csplit(&to_csplit(&b)), b);
        }
        // to_csplit(F1(e2)): Xc = 0, column 1 of M is (1,0,0)
        let f = JordanElem::f(0, Octonion::basis(&c, 2));
        let s = to_csplit(&f);
        assert!(s.diag.iter().all(|v| v.is_zero()));
        assert!(s.off.iter().all(|v| v.is_zero()));
        assert!(s.m.e[0][0].is_one());
        assert!(s.m.e[1][0].is_zero() && s.m.e[2][0].is_zero());
        // to_csplit(E) = (E, 0)
        let e = JordanElem::identity(&c);
        let s = to_csplit(&e);
        assert!(s.m.e.iter().all(|row| row.iter().all(|v| v.is_zero())));
        assert!(s.diag.iter().all(|v| v.is_one()));
    }

    fn random_quat(c: &Ctx, rng: &mut ChaCha8Rng) -> Quaternion {
        let mut q = Quaternion::zero(c);
        for k in 0..4 {
            q.c[k] = c.ratio(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2));
        }
        q
    }

    #[test]
    fn k_is_an_algebra_homomorphism() {
        let c = ctx();
        assert!(k_mat(&QMat3::identity(&c)).is_identity());
        // basis images multiply correctly: k(e1) k(e2) = k(e3)
        let k1 = k_quat(&Quaternion::basis(&c, 1));
        let k2 = k_quat(&Quaternion::basis(&c, 2));
        let k3 = k_quat(&Quaternion::basis(&c, 3));
        let prod = [
            [
                k1[0][0].mul(&k2[0][0]).add(&k1[0][1].mul(&k2[1][0])),
                k1[0][0].mul(&k2[0][1]).add(&k1[0][1].mul(&k2[1][1])),
            ],
            [
                k1[1][0].mul(&k2[0][0]).add(&k1[1][1].mul(&k2[1][0])),
                k1[1][0].mul(&k2[0][1]).add(&k1[1][1].mul(&k2[1][1])),
            ],
        ];
        assert_eq!(prod, k3);
        // random exact quaternion matrices: k(AB) = k(A) k(B)
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..20 {
            let mut a = QMat3::zero(&c);
            let mut b = QMat3::zero(&c);
            for r in 0..3 {
                for cc in 0..3 {
                    a.e[r][cc] = random_quat(&c, &mut rng);
                    b.e[r][cc] = random_quat(&c, &mut rng);
                }
            }
            assert_eq!(k_mat(&a.mul(&b)), k_mat(&a).mul(&k_mat(&b)));
            assert_eq!(k_mat_inv(&k_mat(&a)), a);
        }
    }

    #[test]
    fn k_j_skew_on_hermitian_basis() {
        let c = ctx();
        // all 15 quaternionic-Hermitian basis directions
        let mut elems: Vec<JordanElem> = Vec::new();
        for i in 0..3 {
            elems.push(JordanElem::e(&c, i));
        }
        for i in 0..3 {
            for k in 0..4 {
                elems.push(JordanElem::f(i, Octonion::basis(&c, k)));
            }
        }
        assert_eq!(elems.len(), 15);
        for x in &elems {
            let s = k_j(&to_hsplit(x)).unwrap();
            assert_eq!(s.transpose(), s.neg(), "k_J image must be skew");
        }
        // k_J(E) = J
        let e = JordanElem::identity(&c);
        assert_eq!(k_j(&to_hsplit(&e)).unwrap(), j_mat(&c));
    }

    #[test]
    fn k_j_round_trip() {
        let c = ctx();
        let f = JordanElem::f(0, Octonion::one(&c));
        let h = to_hsplit(&f);
        let s = k_j(&h).unwrap();
        let back = k_j_inv(&s, h.a.clone()).unwrap();
        assert_eq!(from_hsplit(&back), f);
        for b in basis(&c).iter().take(3 + 4) {
            let h = to_hsplit(b);
            let s = k_j(&h).unwrap();
            assert_eq!(from_hsplit(&k_j_inv(&s, h.a.clone()).unwrap()), *b);
        }
        let _ = DIM;
    }

    #[test]
    fn h_mix_properties() {
        let c = ctx();
        let e = CxMat3::identity(&c);
        assert_eq!(h_mix(&e, &e), e);
        // h(E, omega E) = (1+omega)/2 E + i (omega - 1) e1 / 2 E
        let w = Cx::omega(&c);
        let we = CxMat3::scalar(&w);
        let h = h_mix(&e, &we);
        let one = Cx::one(&c);
        let expected = {
            let s = one.add(&w).scale(&c.ratio(1, 2));
            let d = w.sub(&one);
            let de1 = Cx::new(d.im.neg(), d.re.clone());
            s.add(&de1.scale(&c.i_unit()).scale(&c.ratio(1, 2)))
        };
        for i in 0..3 {
            assert_eq!(h.e[i][i], expected);
        }
        // multiplicativity h(A,B) h(C,D) = h(AC, BD) on random pairs
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let rand_cx_mat = |rng: &mut ChaCha8Rng| {
            let mut m = CxMat3::zero(&c);
            for r in 0..3 {
                for cc in 0..3 {
                    m.e[r][cc] = Cx::new(
                        c.ratio(rng.gen_range(-2i64..=2), 1),
                        c.ratio(rng.gen_range(-2i64..=2), 1),
                    );
                }
            }
            m
        };
        for _ in 0..15 {
            let a = rand_cx_mat(&mut rng);
            let b = rand_cx_mat(&mut rng);
            let d = rand_cx_mat(&mut rng);
            let f = rand_cx_mat(&mut rng);
            assert_eq!(h_mix(&a, &b).mul(&h_mix(&d, &f)), h_mix(&a.mul(&d), &b.mul(&f)));
        }
    }

    #[test]
    fn quaternion_subalgebra_closure() {
        let c = ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..20 {
            let p = random_quat(&c, &mut rng);
            let q = random_quat(&c, &mut rng);
            // product of head-quaternions has zero e4..e7 part
            let oc =
                Quaternion::assemble(&p, &Quaternion::zero(&c)).mul(&Quaternion::assemble(&q, &Quaternion::zero(&c)));
            assert!(oc.c[4..].iter().all(|v| v.is_zero()));
            assert_eq!(Quaternion::head(&oc), p.mul(&q));
        }
    }
}
