//! Exact arithmetic in the cyclotomic field Q(zeta_N).
//!
//! Every scalar the rest of the crate touches lives here: omega = zeta_3,
//! nu = zeta_9, i = zeta_4, sqrt(3) = zeta_12 + zeta_12^-1, and the exact
//! cosines/sines at angles 2*pi*k/N. The default conductor is N = 36
//! (phi(36) = 12), the smallest field containing all of them at once;
//! fifth roots of unity need N = 180.
//!
//! An element is stored as an integer polynomial in the power basis of
//! Q(zeta_N), reduced modulo the N-th cyclotomic polynomial, over a single
//! positive denominator. The representation is canonical: equality is
//! coefficient-wise.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{solve_dense, FieldElem};

/// Errors raised by scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("conductor {0} does not divide {1}")]
    NotASubfield(u32, u32),
    #[error("no {n}-th root of {what} in Q(zeta_{conductor})")]
    NoInFieldRoot { n: u32, what: String, conductor: u32 },
}

/// Arbitrary-precision rational; re-exported so callers share one type.
pub type Rational = BigRational;

/// Immutable per-conductor data: the cyclotomic polynomial and a table of
/// zeta^k reduced to the power basis for k in 0..N.
#[derive(Debug)]
pub struct CycContext {
    conductor: u32,
    degree: usize,
    /// zeta^k in the power basis, for k = 0..conductor (integer coefficients).
    power_table: Vec<Vec<BigInt>>,
}

fn divisors(n: u32) -> Vec<u32> {
    let mut d = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            d.push(i);
            if i != n / i {
                d.push(n / i);
            }
        }
        i += 1;
    }
    d.sort_unstable();
    d
}

/// x^n - 1 as integer coefficients.
fn x_n_minus_one(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = -BigInt::one();
    c[n] = BigInt::one();
    c
}

fn poly_trim(c: &mut Vec<BigInt>) {
    while c.len() > 1 && c.last().map(|x| x.is_zero()).unwrap_or(false) {
        c.pop();
    }
}

/// Exact division of integer polynomials; panics if not divisible
/// (cyclotomic factorizations are always exact).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    poly_trim(&mut rem);
    let mut d = den.to_vec();
    poly_trim(&mut d);
    let dl = d.len() - 1;
    assert!(!d[dl].is_zero());
    if rem.len() < d.len() {
        assert!(rem.iter().all(|c| c.is_zero()));
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d.len() + 1];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + dl].clone();
        if lead.is_zero() {
            continue;
        }
        let (q, r) = lead.div_rem(&d[dl]);
        assert!(r.is_zero(), "non-exact polynomial division");
        quot[k] = q.clone();
        for j in 0..=dl {
            let t = &d[j] * &q;
            rem[k + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// The n-th cyclotomic polynomial via recursive division:
/// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    if n == 1 {
        return vec![-BigInt::one(), BigInt::one()];
    }
    let mut num = x_n_minus_one(n as usize);
    for d in divisors(n) {
        if d < n {
            let phi_d = cyclotomic_poly(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

impl CycContext {
    fn new(conductor: u32) -> Self {
        assert!(conductor >= 1);
        let phi = cyclotomic_poly(conductor);
        let degree = phi.len() - 1;
        // power_table[k] = zeta^k mod Phi_N; Phi_N is monic so reduction is
        // integer-linear: x^degree = -(lower part of Phi).
        let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(conductor as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..conductor {
            table.push(cur.clone());
            // multiply by x
            let top = cur[degree - 1].clone();
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for j in 0..degree {
                    let t = &phi[j] * &top;
                    cur[j] -= t;
                }
            }
        }
        CycContext { conductor, degree, power_table: table }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Degree phi(N) of the field over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }
}

static CONTEXTS: OnceLock<Mutex<HashMap<u32, Arc<CycContext>>>> = OnceLock::new();

/// Shared handle to an immutable cyclotomic-field context.
#[derive(Clone)]
pub struct Ctx(Arc<CycContext>);

impl fmt::Debug for Ctx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ctx(Q(zeta_{}))", self.0.conductor)
    }
}

/// The default conductor: contains omega, nu, i and sqrt(3).
pub const DEFAULT_CONDUCTOR: u32 = 36;
/// Conductor for computations that also need fifth roots of unity.
pub const EXTENDED_CONDUCTOR: u32 = 180;

impl Ctx {
    /// Context for Q(zeta_n). Contexts are cached and immutable.
    pub fn new(n: u32) -> Ctx {
        let map = CONTEXTS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut lock = map.lock().unwrap();
        let arc = lock.entry(n).or_insert_with(|| Arc::new(CycContext::new(n)));
        Ctx(Arc::clone(arc))
    }

    pub fn default36() -> Ctx {
        Ctx::new(DEFAULT_CONDUCTOR)
    }

    pub fn conductor(&self) -> u32 {
        self.0.conductor
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar {
            ctx: self.clone(),
            num: vec![BigInt::zero(); self.0.degree],
            den: BigInt::one(),
        }
    }

    pub fn one(&self) -> CycScalar {
        self.integer(1)
    }

    pub fn integer(&self, v: i64) -> CycScalar {
        let mut num = vec![BigInt::zero(); self.0.degree];
        num[0] = BigInt::from(v);
        CycScalar { ctx: self.clone(), num, den: BigInt::one() }
    }

    pub fn rational(&self, r: &Rational) -> CycScalar {
        let mut num = vec![BigInt::zero(); self.0.degree];
        num[0] = r.numer().clone();
        CycScalar { ctx: self.clone(), num, den: r.denom().clone() }.normalized()
    }

    pub fn ratio(&self, num: i64, den: i64) -> CycScalar {
        assert!(den != 0);
        let mut v = vec![BigInt::zero(); self.0.degree];
        v[0] = BigInt::from(num);
        CycScalar { ctx: self.clone(), num: v, den: BigInt::from(den) }.normalized()
    }

    /// zeta_N^k in canonical form (k may be negative).
    pub fn root(&self, k: i64) -> CycScalar {
        let n = self.0.conductor as i64;
        let k = k.rem_euclid(n) as usize;
        CycScalar {
            ctx: self.clone(),
            num: self.0.power_table[k].clone(),
            den: BigInt::one(),
        }
    }

    /// zeta_m^k where m divides the conductor.
    pub fn root_of_unity(&self, k: i64, m: u32) -> Result<CycScalar, ScalarError> {
        if m == 0 || self.0.conductor % m != 0 {
            return Err(ScalarError::NotASubfield(m, self.0.conductor));
        }
        let step = (self.0.conductor / m) as i64;
        Ok(self.root(k * step))
    }

    /// omega = zeta_3 = -1/2 + (sqrt 3 / 2) * (imaginary unit of context).
    pub fn omega(&self) -> CycScalar {
        self.root_of_unity(1, 3).expect("conductor divisible by 3")
    }

    /// i = zeta_4.
    pub fn i_unit(&self) -> CycScalar {
        self.root_of_unity(1, 4).expect("conductor divisible by 4")
    }

    /// nu = zeta_9 = exp(2 pi i / 9).
    pub fn nu(&self) -> CycScalar {
        self.root_of_unity(1, 9).expect("conductor divisible by 9")
    }

    /// sqrt(3) = zeta_12 + zeta_12^-1.
    pub fn sqrt3(&self) -> CycScalar {
        let z = self.root_of_unity(1, 12).expect("conductor divisible by 12");
        let zi = self.root_of_unity(-1, 12).expect("conductor divisible by 12");
        z.add(&zi)
    }

    /// cos(2 pi k / N) = (zeta^k + zeta^-k)/2, exact.
    pub fn cos_turn(&self, k: i64) -> CycScalar {
        self.root(k).add(&self.root(-k)).scale_ratio(1, 2)
    }

    /// sin(2 pi k / N) = (zeta^k - zeta^-k)/(2 i), exact.
    pub fn sin_turn(&self, k: i64) -> CycScalar {
        let diff = self.root(k).sub(&self.root(-k));
        // 1/(2i) = -i/2
        diff.mul(&self.i_unit()).scale_ratio(-1, 2)
    }

    fn same(&self, other: &Ctx) -> bool {
        self.0.conductor == other.0.conductor
    }
}

/// Element of Q(zeta_N): integer polynomial coefficients over a common
/// positive denominator, fully reduced (canonical form).
#[derive(Clone)]
pub struct CycScalar {
    ctx: Ctx,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same(&other.ctx) && self.den == other.den && self.num == other.num
    }
}
impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            let show_coeff = k == 0 || !a.is_one() || !self.den.is_one();
            if show_coeff {
                write!(f, "{}", a)?;
                if !self.den.is_one() {
                    write!(f, "/{}", self.den)?;
                }
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "z{}", self.ctx.conductor())?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

impl CycScalar {
    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn conductor(&self) -> u32 {
        self.ctx.conductor()
    }

    fn assert_same_ctx(&self, other: &CycScalar) {
        assert!(
            self.ctx.same(&other.ctx),
            "conductor mismatch: {} vs {}; re-embed explicitly",
            self.ctx.conductor(),
            other.ctx.conductor()
        );
    }

    fn normalized(mut self) -> Self {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if g.is_zero() {
            // all-zero numerator
            self.den = BigInt::one();
            return self;
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num[0].is_one()
            && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Coefficients with respect to the power basis, as rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// The rational part, if the element is rational (all other power-basis
    /// coefficients zero).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &CycScalar) -> CycScalar {
        self.assert_same_ctx(other);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let num: Vec<BigInt> = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        CycScalar { ctx: self.ctx.clone(), num, den: &self.den * &other.den }.normalized()
    }

    pub fn sub(&self, other: &CycScalar) -> CycScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycScalar {
        CycScalar {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &CycScalar) -> CycScalar {
        self.assert_same_ctx(other);
        let d = self.ctx.degree();
        if self.is_zero() || other.is_zero() {
            return self.ctx.zero();
        }
        // schoolbook product, then fold powers >= d through the table
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let table = &self.ctx.0.power_table;
        let mut num: Vec<BigInt> = prod[..d].to_vec();
        for (k, c) in prod.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            // k < 2d-1 <= N always holds for the conductors we use; reduce
            // via zeta^k = table[k mod N]
            let row = &table[k % self.ctx.conductor() as usize];
            for j in 0..d {
                if !row[j].is_zero() {
                    num[j] += c * &row[j];
                }
            }
        }
        CycScalar { ctx: self.ctx.clone(), num, den: &self.den * &other.den }.normalized()
    }

    /// Scale by the rational p/q.
    pub fn scale_ratio(&self, p: i64, q: i64) -> CycScalar {
        assert!(q != 0);
        CycScalar {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| c * p).collect(),
            den: &self.den * q,
        }
        .normalized()
    }

    pub fn scale_rational(&self, r: &Rational) -> CycScalar {
        CycScalar {
            ctx: self.ctx.clone(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        }
        .normalized()
    }

    /// Complex conjugation zeta -> zeta^-1. A ring automorphism fixing
    /// exactly the real subfield.
    pub fn conj(&self) -> CycScalar {
        let n = self.ctx.conductor() as usize;
        let d = self.ctx.degree();
        let table = &self.ctx.0.power_table;
        let mut num = vec![BigInt::zero(); d];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &table[(n - k) % n];
            for j in 0..d {
                if !row[j].is_zero() {
                    num[j] += c * &row[j];
                }
            }
        }
        CycScalar { ctx: self.ctx.clone(), num, den: self.den.clone() }.normalized()
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplicative inverse by solving the phi(N) x phi(N) linear system
    /// of multiplication by self in the power basis.
    pub fn inv(&self) -> Result<CycScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero(self.ctx.conductor()));
        }
        let d = self.ctx.degree();
        // columns: self * zeta^j expressed in the power basis
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(d);
        let mut cur = self.clone();
        let zeta = self.ctx.root(1);
        for _ in 0..d {
            cols.push(cur.coeffs());
            cur = cur.mul(&zeta);
        }
        let mut rhs = vec![Rational::zero(); d];
        rhs[0] = Rational::one();
        // row-major matrix M with M[r][c] = cols[c][r]
        let mut mat = vec![Rational::zero(); d * d];
        for (c, col) in cols.iter().enumerate() {
            for r in 0..d {
                mat[r * d + c] = col[r].clone();
            }
        }
        let sol = solve_dense(&mat, &rhs, d).expect("nonzero field element is invertible");
        let mut out = self.ctx.zero();
        for (j, v) in sol.iter().enumerate() {
            if !v.is_zero() {
                out = out.add(&self.ctx.root(j as i64).scale_rational(v));
            }
        }
        Ok(out)
    }

    pub fn try_div(&self, other: &CycScalar) -> Result<CycScalar, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power (negative allowed for nonzero elements).
    pub fn pow(&self, e: i64) -> CycScalar {
        if e == 0 {
            return self.ctx.one();
        }
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = self.ctx.one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        acc
    }

    /// Numerical embedding zeta_N -> exp(2 pi i / N). Diagnostics only;
    /// never used in verification verdicts.
    pub fn to_float(&self) -> Complex64 {
        let n = self.ctx.conductor() as f64;
        let den = big_to_f64(&self.den);
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / n;
            acc += Complex64::new(angle.cos(), angle.sin()) * big_to_f64(c);
        }
        acc / den
    }

    /// Re-embed into Q(zeta_M) for N | M.
    pub fn embed(&self, target: &Ctx) -> Result<CycScalar, ScalarError> {
        let n = self.ctx.conductor();
        let m = target.conductor();
        if m % n != 0 {
            return Err(ScalarError::NotASubfield(n, m));
        }
        if n == m {
            return Ok(self.clone());
        }
        let step = (m / n) as i64;
        let mut out = target.zero();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = target.root(k as i64 * step);
            term.num.iter_mut().for_each(|x| *x *= c);
            out = out.add(&term);
        }
        out.den = &out.den * &self.den;
        Ok(out.normalized())
    }

    /// Multiplicative order if self is a root of unity in this field
    /// (order divides 2N), else None.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let bound = 2 * self.ctx.conductor();
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_one() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    /// An in-field n-th root when self = zeta^j is a root of unity with an
    /// in-field n-th root; used by the surjectivity decompositions.
    pub fn nth_root_in_field(&self, n: u32) -> Result<CycScalar, ScalarError> {
        let cond = self.ctx.conductor() as i64;
        for j in 0..cond {
            let cand = self.ctx.root(j);
            if cand.pow(n as i64) == *self {
                return Ok(cand);
            }
            let cand = cand.neg();
            if cand.pow(n as i64) == *self {
                return Ok(cand);
            }
        }
        Err(ScalarError::NoInFieldRoot {
            n,
            what: self.to_string(),
            conductor: self.ctx.conductor(),
        })
    }
}

fn big_to_f64(b: &BigInt) -> f64 {
    b.to_f64().unwrap_or(f64::NAN)
}

impl FieldElem for CycScalar {
    fn zero_like(&self) -> Self {
        self.ctx.zero()
    }
    fn one_like(&self) -> Self {
        self.ctx.one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn div_ref(&self, o: &Self) -> Self {
        self.try_div(o).expect("division by zero in elimination")
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c36() -> Ctx {
        Ctx::default36()
    }

    #[test]
    fn cyclotomic_polynomials() {
        // Phi_36 = x^12 - x^6 + 1
        let phi = cyclotomic_poly(36);
        let expect: Vec<i64> = vec![1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1];
        assert_eq!(phi, expect.into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(cyclotomic_poly(180).len() - 1, 48);
    }

    #[test]
    fn root_orders() {
        let ctx = c36();
        let z3 = ctx.root_of_unity(1, 3).unwrap();
        assert!(z3.pow(3).is_one());
        assert!(!z3.pow(1).is_one());
        assert!(!z3.pow(2).is_one());

        let nu = ctx.nu();
        assert!(nu.pow(9).is_one());
        assert!(!nu.pow(3).is_one());
        assert_eq!(nu.pow(3), ctx.omega());
        assert_eq!(nu.root_of_unity_order(), Some(9));
    }

    #[test]
    fn sqrt3_squares_to_three() {
        let ctx = c36();
        let s = ctx.sqrt3();
        assert_eq!(s.mul(&s), ctx.integer(3));
        // cross-check with floating evaluation
        let f = s.to_float();
        assert!((f.re - 3f64.sqrt()).abs() < 1e-12 && f.im.abs() < 1e-12);
    }

    #[test]
    fn omega_sum_identity() {
        // 1 + omega + omega^2 = 0
        let ctx = c36();
        let w = ctx.omega();
        let sum = ctx.one().add(&w).add(&w.pow(2));
        assert!(sum.is_zero());
        // arith(omega, omega^2, add) = -1
        assert_eq!(w.add(&w.pow(2)), ctx.integer(-1));
    }

    #[test]
    fn conjugation() {
        let ctx = c36();
        let i = ctx.i_unit();
        assert_eq!(i.conj(), i.neg());
        let nu = ctx.nu();
        assert_eq!(nu.conj(), nu.pow(8));
        assert!(nu.mul(&nu.conj()).is_one());
        assert_eq!(ctx.sqrt3().conj(), ctx.sqrt3());
        assert!(ctx.sqrt3().is_real());
        // involution
        let x = ctx.root(7).add(&ctx.ratio(3, 5));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn division() {
        let ctx = c36();
        assert!(matches!(
            ctx.one().try_div(&ctx.zero()),
            Err(ScalarError::DivisionByZero(36))
        ));
        let x = ctx.root(5).add(&ctx.integer(2));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
    }

    #[test]
    fn to_float_embedding() {
        let ctx = c36();
        let w = ctx.omega();
        let f = w.to_float();
        assert!((f.re + 0.5).abs() < 1e-12);
        assert!((f.im - 0.8660254037844386).abs() < 1e-12);
        assert_eq!(ctx.zero().to_float(), Complex64::new(0.0, 0.0));
        let d = (ctx.nu().pow(3).to_float() - w.to_float()).norm();
        assert!(d < 1e-12);
    }

    #[test]
    fn embedding_into_larger_conductor() {
        let c36 = c36();
        let c180 = Ctx::new(EXTENDED_CONDUCTOR);
        let x = c36.omega().add(&c36.sqrt3().scale_ratio(1, 2));
        let y = x.embed(&c180).unwrap();
        assert!((x.to_float() - y.to_float()).norm() < 1e-12);
        assert_eq!(y.pow(0), c180.one());
        // zeta_5 exists only in the larger field
        let z5 = c180.root_of_unity(1, 5).unwrap();
        assert_eq!(z5.root_of_unity_order(), Some(5));
        assert!(c36.root_of_unity(1, 5).is_err());
    }

    #[test]
    fn canonical_form_idempotent() {
        let ctx = c36();
        let x = ctx.ratio(6, 4);
        let y = x.clone().normalized();
        assert_eq!(x, y);
        assert_eq!(x, ctx.ratio(3, 2));
    }

    #[test]
    fn nth_root_in_field_works() {
        let ctx = c36();
        let w = ctx.omega();
        let r = w.nth_root_in_field(3).unwrap();
        assert_eq!(r.pow(3), w);
        let c180 = Ctx::new(180);
        let one = c180.one();
        let r5 = one.nth_root_in_field(5).unwrap();
        assert!(r5.pow(5).is_one());
    }

    fn random_scalar(ctx: &Ctx, rng: &mut ChaCha8Rng) -> CycScalar {
        let mut acc = ctx.zero();
        for _ in 0..3 {
            let k = rng.gen_range(0..36);
            let p = rng.gen_range(-4i64..=4);
            let q = rng.gen_range(1i64..=4);
            acc = acc.add(&ctx.root(k).scale_ratio(p, q));
        }
        acc
    }

    #[test]
    fn random_field_laws() {
        let ctx = c36();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = random_scalar(&ctx, &mut rng);
            let b = random_scalar(&ctx, &mut rng);
            let c = random_scalar(&ctx, &mut rng);
            // conj is multiplicative
            assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
            // distributivity
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            // associativity
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            // exact inverse
            if !a.is_zero() {
                assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn embedding_consistency_numeric() {
        let ctx = c36();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let a = random_scalar(&ctx, &mut rng);
            let b = random_scalar(&ctx, &mut rng);
            let lhs = a.mul(&b).to_float();
            let rhs = a.to_float() * b.to_float();
            assert!((lhs - rhs).norm() <= 1e-9);
        }
    }
}
