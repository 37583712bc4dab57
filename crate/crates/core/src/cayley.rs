//! The division Cayley algebra and its complexification: 8-dimensional
//! modules over the cyclotomic scalar field, with multiplication generated
//! by Cayley-Dickson doubling over the quaternions.
//!
//! Conventions (pinned by the test suite): quaternions satisfy
//! e1*e2 = e3 cyclically; doubling is
//! (a + b*e4)(c + d*e4) = (ac - conj(d)b) + (da + b*conj(c))e4,
//! which defines e5 = e1*e4, e6 = e2*e4, e7 = e3*e4.

use std::sync::OnceLock;

use crate::scalar::{Ctx, CycScalar};

/// Quaternion basis products: QUAT_TABLE[i][j] = (sign, index) with
/// q_i * q_j = sign * q_index.
pub(crate) const QUAT_TABLE: [[(i8, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

fn quat_conj_sign(i: usize) -> i8 {
    if i == 0 {
        1
    } else {
        -1
    }
}

/// Octonion basis products, generated once from the doubling rule.
pub(crate) fn oct_table() -> &'static [[(i8, usize); 8]; 8] {
    static TABLE: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[(0i8, 0usize); 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                t[i][j] = match (i < 4, j < 4) {
                    // a*c
                    (true, true) => QUAT_TABLE[i][j],
                    // (d a) e4
                    (true, false) => {
                        let (s, k) = QUAT_TABLE[j - 4][i];
                        (s, k + 4)
                    }
                    // (b conj(c)) e4
                    (false, true) => {
                        let (s, k) = QUAT_TABLE[i - 4][j];
                        (s * quat_conj_sign(j), k + 4)
                    }
                    // -(conj(d) b)
                    (false, false) => {
                        let (s, k) = QUAT_TABLE[j - 4][i - 4];
                        (-s * quat_conj_sign(j - 4), k)
                    }
                };
            }
        }
        t
    })
}

/// Element of the Cayley algebra (or its complexification) in coordinates
/// on the basis e0 = 1, e1, ..., e7.
#[derive(Clone, PartialEq, Eq)]
pub struct Octonion {
    pub c: [CycScalar; 8],
}

impl std::fmt::Debug for Octonion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})e{}", v, k)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Octonion {
    pub fn zero(ctx: &Ctx) -> Self {
        Octonion { c: std::array::from_fn(|_| ctx.zero()) }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Octonion::basis(ctx, 0)
    }

    pub fn basis(ctx: &Ctx, k: usize) -> Self {
        assert!(k < 8);
        let mut o = Octonion::zero(ctx);
        o.c[k] = ctx.one();
        o
    }

    pub fn from_coords(c: [CycScalar; 8]) -> Self {
        Octonion { c }
    }

    pub fn ctx(&self) -> &Ctx {
        self.c[0].ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    /// Lies in the real form (every coordinate fixed by scalar conjugation).
    pub fn is_real_form(&self) -> bool {
        self.c.iter().all(|v| v.is_real())
    }

    pub fn add(&self, o: &Octonion) -> Octonion {
        Octonion { c: std::array::from_fn(|k| self.c[k].add(&o.c[k])) }
    }

    pub fn sub(&self, o: &Octonion) -> Octonion {
        Octonion { c: std::array::from_fn(|k| self.c[k].sub(&o.c[k])) }
    }

    pub fn neg(&self) -> Octonion {
        Octonion { c: std::array::from_fn(|k| self.c[k].neg()) }
    }

    pub fn scale(&self, s: &CycScalar) -> Octonion {
        Octonion { c: std::array::from_fn(|k| self.c[k].mul(s)) }
    }

    /// Octonion product via the basis table.
    pub fn mul(&self, o: &Octonion) -> Octonion {
        let ctx = self.ctx();
        let table = oct_table();
        let mut acc = Octonion::zero(ctx);
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if o.c[j].is_zero() {
                    continue;
                }
                let (s, k) = table[i][j];
                let term = self.c[i].mul(&o.c[j]);
                acc.c[k] = if s > 0 { acc.c[k].add(&term) } else { acc.c[k].sub(&term) };
            }
        }
        acc
    }

    /// Octonion conjugation: negates e1..e7.
    pub fn oct_conj(&self) -> Octonion {
        Octonion {
            c: std::array::from_fn(|k| if k == 0 { self.c[0].clone() } else { self.c[k].neg() }),
        }
    }

    /// Scalar (complexification-level) conjugation on every coordinate.
    pub fn tau(&self) -> Octonion {
        Octonion { c: std::array::from_fn(|k| self.c[k].conj()) }
    }

    /// Symmetric bilinear inner product with (e_i, e_j) = delta_ij.
    pub fn inner(&self, o: &Octonion) -> CycScalar {
        let mut acc = self.ctx().zero();
        for k in 0..8 {
            if !self.c[k].is_zero() && !o.c[k].is_zero() {
                acc = acc.add(&self.c[k].mul(&o.c[k]));
            }
        }
        acc
    }

    /// Composition norm N(x) = (x, x); satisfies x * conj(x) = N(x) * 1.
    pub fn norm(&self) -> CycScalar {
        self.inner(self)
    }

    pub fn real_coeff(&self, k: usize) -> &CycScalar {
        &self.c[k]
    }
}

/// Element of the commutative subalgebra spanned by 1 and e1, stored as a
/// coefficient pair. This is the scalar ring for the SU(3)-parameter models.
#[derive(Clone, PartialEq, Eq)]
pub struct Cx {
    pub re: CycScalar,
    pub im: CycScalar,
}

impl std::fmt::Debug for Cx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) + ({})e1", self.re, self.im)
    }
}

impl Cx {
    pub fn zero(ctx: &Ctx) -> Self {
        Cx { re: ctx.zero(), im: ctx.zero() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Cx { re: ctx.one(), im: ctx.zero() }
    }

    pub fn new(re: CycScalar, im: CycScalar) -> Self {
        Cx { re, im }
    }

    pub fn from_scalar(re: CycScalar) -> Self {
        let im = re.ctx().zero();
        Cx { re, im }
    }

    /// omega = -1/2 + (sqrt(3)/2) e1.
    pub fn omega(ctx: &Ctx) -> Self {
        Cx { re: ctx.ratio(-1, 2), im: ctx.sqrt3().scale_ratio(1, 2) }
    }

    /// exp(2 pi e1 * k / n): cos + sin*e1 with exact cyclotomic entries.
    pub fn exp_turn(ctx: &Ctx, k: i64, n: u32) -> Self {
        assert!(ctx.conductor() % n == 0);
        let step = (ctx.conductor() / n) as i64;
        Cx { re: ctx.cos_turn(k * step), im: ctx.sin_turn(k * step) }
    }

    pub fn ctx(&self) -> &Ctx {
        self.re.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> Cx {
        Cx { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        Cx {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, s: &CycScalar) -> Cx {
        Cx { re: self.re.mul(s), im: self.im.mul(s) }
    }

    /// Conjugation in the e1-plane: negates the e1 part.
    pub fn conj(&self) -> Cx {
        Cx { re: self.re.clone(), im: self.im.neg() }
    }

    /// Complexification-level conjugation of both coordinates.
    pub fn tau(&self) -> Cx {
        Cx { re: self.re.conj(), im: self.im.conj() }
    }

    /// conj(a) * a, the squared modulus (a scalar for unit checks).
    pub fn norm(&self) -> CycScalar {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn embed(&self) -> Octonion {
        let ctx = self.ctx();
        let mut o = Octonion::zero(ctx);
        o.c[0] = self.re.clone();
        o.c[1] = self.im.clone();
        o
    }

    pub fn pow(&self, e: i64) -> Cx {
        let ctx = self.ctx();
        if e == 0 {
            return Cx::one(ctx);
        }
        let base = if e < 0 {
            // only used for units: inverse = conj / norm
            let n = self.norm();
            let ni = n.inv().expect("inverse of zero Cx");
            Cx { re: self.re.mul(&ni), im: self.im.neg().mul(&ni) }
        } else {
            self.clone()
        };
        let mut acc = Cx::one(ctx);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

/// The C + C^3 presentation of a Cayley element:
/// x = m0 + m1*e2 + m2*e4 + m3*conj(e6), coefficients on the left.
///
/// The slot-3 basis vector carries the sign that makes the classical
/// product formula hold verbatim (resolved empirically; see tests).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitCayley {
    pub m0: Cx,
    pub m: [Cx; 3],
}

/// Decompose on (1, e1 | e2, e3 | e4, e5 | -e6, e7).
pub fn to_split(x: &Octonion) -> SplitCayley {
    SplitCayley {
        m0: Cx::new(x.c[0].clone(), x.c[1].clone()),
        m: [
            Cx::new(x.c[2].clone(), x.c[3].clone()),
            Cx::new(x.c[4].clone(), x.c[5].clone()),
            Cx::new(x.c[6].neg(), x.c[7].clone()),
        ],
    }
}

/// Inverse of [`to_split`].
pub fn from_split(s: &SplitCayley) -> Octonion {
    let ctx = s.m0.ctx();
    let mut o = Octonion::zero(ctx);
    o.c[0] = s.m0.re.clone();
    o.c[1] = s.m0.im.clone();
    o.c[2] = s.m[0].re.clone();
    o.c[3] = s.m[0].im.clone();
    o.c[4] = s.m[1].re.clone();
    o.c[5] = s.m[1].im.clone();
    o.c[6] = s.m[2].re.neg();
    o.c[7] = s.m[2].im.clone();
    o
}

impl SplitCayley {
    /// Product in the C + C^3 model:
    /// (m0 + m)(n0 + n) = (m0 n0 - <m, n>) + (m0 n + conj(n0) m - conj(m x n)).
    pub fn mul_formula(&self, o: &SplitCayley) -> SplitCayley {
        let herm = {
            let mut acc = Cx::zero(self.m0.ctx());
            for k in 0..3 {
                acc = acc.add(&self.m[k].mul(&o.m[k].conj()));
            }
            acc
        };
        let scalar = self.m0.mul(&o.m0).sub(&herm);
        let cross = [
            self.m[1].mul(&o.m[2]).sub(&o.m[1].mul(&self.m[2])),
            self.m[2].mul(&o.m[0]).sub(&o.m[2].mul(&self.m[0])),
            self.m[0].mul(&o.m[1]).sub(&o.m[0].mul(&self.m[1])),
        ];
        let vec = std::array::from_fn(|k| {
            self.m0
                .mul(&o.m[k])
                .add(&o.m0.conj().mul(&self.m[k]))
                .sub(&cross[k].conj())
        });
        SplitCayley { m0: scalar, m: vec }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx() -> Ctx {
        Ctx::default36()
    }

    fn e(k: usize) -> Octonion {
        Octonion::basis(&ctx(), k)
    }

    #[test]
    fn table_spot_values() {
        let t = oct_table();
        assert_eq!(t[1][2], (1, 3)); // e1 e2 = e3
        assert_eq!(t[4][4], (-1, 0)); // e4 e4 = -1
        assert_eq!(t[1][4], (1, 5)); // e1 e4 = e5
        assert_eq!(t[2][4], (1, 6)); // e2 e4 = e6
        assert_eq!(t[3][4], (1, 7)); // e3 e4 = e7
        assert_eq!(t[4][1], (-1, 5));
        assert_eq!(t[4][6], (1, 2)); // e4 e6 = e2
        assert_eq!(t[1][6], (-1, 7)); // e1 e6 = -e7
        // every off-diagonal pair anticommutes, diagonal squares to -1
        for i in 1..8 {
            assert_eq!(t[i][i], (-1, 0));
            for j in 1..8 {
                if i != j {
                    let (s1, k1) = t[i][j];
                    let (s2, k2) = t[j][i];
                    assert_eq!(k1, k2);
                    assert_eq!(s1, -s2);
                }
            }
        }
    }

    #[test]
    fn example_products() {
        assert_eq!(e(1).mul(&e(2)), e(3));
        assert_eq!(e(4).mul(&e(4)), e(0).neg());
        // gamma3(e4) = omega * e4 quaternion-multiplied: -(1/2)e4 + (sqrt3/2)e5
        let c = ctx();
        let g3 = crate::groups::AlgMap::named(crate::autohoms::Named::Gamma3, crate::groups::Space::Cayley8, &c);
        let img = g3.apply_octonion(&e(4)).unwrap();
        let mut expect = Octonion::zero(&c);
        expect.c[4] = c.ratio(-1, 2);
        expect.c[5] = c.sqrt3().scale_ratio(1, 2);
        assert_eq!(img, expect);
    }

    #[test]
    fn norm_is_multiplicative() {
        let c = ctx();
        // all 64 basis pairs
        for i in 0..8 {
            for j in 0..8 {
                let x = e(i);
                let y = e(j);
                let xy = x.mul(&y);
                assert_eq!(xy.norm(), x.norm().mul(&y.norm()));
            }
        }
        // 200 random exact pairs
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let x = random_oct(&c, &mut rng);
            let y = random_oct(&c, &mut rng);
            assert_eq!(x.mul(&y).norm(), x.norm().mul(&y.norm()));
            // (xy, xy) = (x,x)(y,y) is the same law
        }
    }

    pub(crate) fn random_oct(c: &Ctx, rng: &mut ChaCha8Rng) -> Octonion {
        let mut o = Octonion::zero(c);
        for _ in 0..3 {
            let k = rng.gen_range(0..8);
            let p = rng.gen_range(-3i64..=3);
            let q = rng.gen_range(1i64..=2);
            o.c[k] = o.c[k].add(&c.ratio(p, q));
        }
        o
    }

    #[test]
    fn alternative_laws() {
        let c = ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let x = random_oct(&c, &mut rng);
            let y = random_oct(&c, &mut rng);
            // left and right alternativity
            assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
            assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
            // flexible law
            assert_eq!(x.mul(&y.mul(&x)), x.mul(&y).mul(&x));
        }
    }

    #[test]
    fn conjugation_properties() {
        let c = ctx();
        assert_eq!(e(1).add(&e(4)).oct_conj(), e(1).neg().sub(&e(4)));
        assert_eq!(e(3).inner(&e(3)), c.one());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let x = random_oct(&c, &mut rng);
            // x * conj(x) = N(x) * 1
            let n = x.mul(&x.oct_conj());
            let mut expect = Octonion::zero(&c);
            expect.c[0] = x.norm();
            assert_eq!(n, expect);
        }
    }

    #[test]
    fn split_round_trip_and_examples() {
        let c = ctx();
        for k in 0..8 {
            let x = e(k);
            assert_eq!(from_split(&to_split(&x)), x);
        }
        // to_split(e2) = (0, (1,0,0))
        let s = to_split(&e(2));
        assert!(s.m0.is_zero());
        assert!(s.m[0].is_one() && s.m[1].is_zero() && s.m[2].is_zero());
        // to_split(1) = (1, 0)
        let s = to_split(&e(0));
        assert!(s.m0.is_one() && s.m.iter().all(|m| m.is_zero()));
        // from_split(0, omega*(1,0,0)) = -(1/2)e2 + (sqrt3/2) e1e2
        let w = Cx::omega(&c);
        let s = SplitCayley { m0: Cx::zero(&c), m: [w.clone(), Cx::zero(&c), Cx::zero(&c)] };
        let x = from_split(&s);
        let mut expect = Octonion::zero(&c);
        expect.c[2] = c.ratio(-1, 2);
        expect.c[3] = c.sqrt3().scale_ratio(1, 2);
        assert_eq!(x, expect);
        assert_eq!(e(1).mul(&e(2)), e(3)); // e1e2 = e3 used above
    }

    /// The split-model product formula agrees with the table product on all
    /// 64 basis pairs under the slot-3 sign convention chosen in to_split.
    /// (With the naive +e6 reading it fails; this test pins the resolution.)
    #[test]
    fn split_product_formula_consistent() {
        for i in 0..8 {
            for j in 0..8 {
                let x = e(i);
                let y = e(j);
                let direct = x.mul(&y);
                let via = from_split(&to_split(&x).mul_formula(&to_split(&y)));
                assert_eq!(via, direct, "mismatch at pair (e{}, e{})", i, j);
            }
        }
        // the naive reading (m3 on +e6) disagrees on an e6 pair
        let x = e(2);
        let y = e(4);
        let naive = |o: &Octonion| SplitCayley {
            m0: Cx::new(o.c[0].clone(), o.c[1].clone()),
            m: [
                Cx::new(o.c[2].clone(), o.c[3].clone()),
                Cx::new(o.c[4].clone(), o.c[5].clone()),
                Cx::new(o.c[6].clone(), o.c[7].neg()),
            ],
        };
        let got = naive(&x).mul_formula(&naive(&y));
        // e2*e4 = e6, whose naive slot-3 coefficient is +1; formula yields -1
        assert!(got.m[2].re.add(&ctx().one()).is_zero());
    }

    #[test]
    fn gamma_is_an_automorphism_on_basis_pairs() {
        let c = ctx();
        let gamma = |x: &Octonion| -> Octonion {
            let mut y = x.clone();
            for k in 4..8 {
                y.c[k] = y.c[k].neg();
            }
            y
        };
        for i in 0..8 {
            for j in 0..8 {
                let x = e(i);
                let y = e(j);
                assert_eq!(gamma(&x.mul(&y)), gamma(&x).mul(&gamma(&y)));
            }
        }
        let _ = c;
    }
}
