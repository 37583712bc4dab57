//! Linear maps on the (complexified) Cayley and Jordan algebras with exact
//! membership predicates for the compact groups of type G2, F4 and E6.
//!
//! A map is certified into a group by finitely many exact conditions on the
//! standard basis; certificates are computed once and cached on the value.

use std::sync::OnceLock;

use crate::cayley::{oct_table, Octonion};
use crate::jordan::{self, JordanElem, DIM};
use crate::matrix::CycMat;
use crate::par;
use crate::scalar::{Ctx, CycScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("space mismatch: map on {0:?} applied to {1:?}")]
    SpaceMismatch(Space, Space),
    #[error("singular matrix")]
    Singular,
    #[error("fixed-subspace query requires a certified map")]
    Uncertified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Space {
    Cayley8,
    Jordan27,
}

impl Space {
    pub fn dim(self) -> usize {
        match self {
            Space::Cayley8 => 8,
            Space::Jordan27 => DIM,
        }
    }
}

/// Certificate of membership in one of the three groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupName {
    G2,
    F4,
    E6,
}

#[derive(Default)]
struct Certs {
    g2: OnceLock<bool>,
    f4: OnceLock<bool>,
    e6: OnceLock<bool>,
}

impl Clone for Certs {
    fn clone(&self) -> Self {
        let c = Certs::default();
        if let Some(v) = self.g2.get() {
            let _ = c.g2.set(*v);
        }
        if let Some(v) = self.f4.get() {
            let _ = c.f4.set(*v);
        }
        if let Some(v) = self.e6.get() {
            let _ = c.e6.set(*v);
        }
        c
    }
}

/// A linear map on the 8- or 27-dimensional module, as a dense matrix in
/// the standard basis.
#[derive(Clone)]
pub struct AlgMap {
    pub space: Space,
    pub mat: CycMat,
    certs: Certs,
}

impl PartialEq for AlgMap {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.mat == other.mat
    }
}
impl Eq for AlgMap {}

impl std::fmt::Debug for AlgMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AlgMap({:?}, {:?})", self.space, self.mat)
    }
}

impl AlgMap {
    pub fn from_matrix(space: Space, mat: CycMat) -> Self {
        assert_eq!(mat.rows, space.dim());
        assert_eq!(mat.cols, space.dim());
        AlgMap { space, mat, certs: Certs::default() }
    }

    pub fn identity(space: Space, ctx: &Ctx) -> Self {
        AlgMap::from_matrix(space, CycMat::identity(ctx, space.dim()))
    }

    /// Build from an action on octonions.
    pub fn from_octonion_map(ctx: &Ctx, f: impl Fn(&Octonion) -> Octonion) -> Self {
        let mut mat = CycMat::zero(ctx, 8, 8);
        for j in 0..8 {
            let img = f(&Octonion::basis(ctx, j));
            for r in 0..8 {
                *mat.at_mut(r, j) = img.c[r].clone();
            }
        }
        AlgMap::from_matrix(Space::Cayley8, mat)
    }

    /// Build from an action on Jordan elements.
    pub fn from_jordan_map(ctx: &Ctx, f: impl Fn(&JordanElem) -> JordanElem) -> Self {
        let mut mat = CycMat::zero(ctx, DIM, DIM);
        for (j, b) in jordan::basis(ctx).iter().enumerate() {
            let img = f(b);
            for (r, v) in img.to_vec().into_iter().enumerate() {
                *mat.at_mut(r, j) = v;
            }
        }
        AlgMap::from_matrix(Space::Jordan27, mat)
    }

    /// The natural inclusion G2 -> F4: act entrywise on the off-diagonal
    /// octonions, fix the diagonal.
    pub fn extend_to_jordan(&self) -> AlgMap {
        assert_eq!(self.space, Space::Cayley8);
        let ctx = self.mat.ctx();
        let mut mat = CycMat::zero(ctx, DIM, DIM);
        for i in 0..3 {
            *mat.at_mut(i, i) = ctx.one();
        }
        for blk in 0..3 {
            for r in 0..8 {
                for c in 0..8 {
                    *mat.at_mut(3 + 8 * blk + r, 3 + 8 * blk + c) = self.mat.at(r, c).clone();
                }
            }
        }
        AlgMap::from_matrix(Space::Jordan27, mat)
    }

    pub fn ctx(&self) -> &Ctx {
        self.mat.ctx()
    }

    pub fn apply_octonion(&self, x: &Octonion) -> Result<Octonion, GroupError> {
        if self.space != Space::Cayley8 {
            return Err(GroupError::SpaceMismatch(self.space, Space::Cayley8));
        }
        let v = self.mat.apply(&x.c.to_vec());
        Ok(Octonion::from_coords(std::array::from_fn(|k| v[k].clone())))
    }

    pub fn apply_jordan(&self, x: &JordanElem) -> Result<JordanElem, GroupError> {
        if self.space != Space::Jordan27 {
            return Err(GroupError::SpaceMismatch(self.space, Space::Jordan27));
        }
        let v = self.mat.apply(&x.to_vec());
        Ok(JordanElem::from_vec(self.ctx(), &v))
    }

    /// Composition self after other.
    pub fn compose(&self, other: &AlgMap) -> AlgMap {
        assert_eq!(self.space, other.space);
        AlgMap::from_matrix(self.space, self.mat.mul(&other.mat))
    }

    pub fn inverse(&self) -> Result<AlgMap, GroupError> {
        let inv = self.mat.inverse().ok_or(GroupError::Singular)?;
        Ok(AlgMap::from_matrix(self.space, inv))
    }

    pub fn power_is_identity(&self, n: u64) -> bool {
        self.mat.pow(n).is_identity()
    }

    /// f^n = s * id for the given scalar.
    pub fn power_is_scalar(&self, n: u64, s: &CycScalar) -> bool {
        let p = self.mat.pow(n);
        let expect = CycMat::identity(self.ctx(), self.space.dim()).scale(s);
        p == expect
    }

    /// tau-conjugation: entrywise scalar conjugation of the matrix.
    pub fn tau_conj(&self) -> AlgMap {
        AlgMap::from_matrix(self.space, self.mat.conj_entries())
    }

    pub fn equal(&self, other: &AlgMap) -> bool {
        self == other
    }

    pub fn commutes(&self, other: &AlgMap) -> bool {
        assert_eq!(self.space, other.space);
        self.mat.mul(&other.mat) == other.mat.mul(&self.mat)
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    fn column(&self, j: usize) -> Vec<CycScalar> {
        (0..self.mat.rows).map(|r| self.mat.at(r, j).clone()).collect()
    }

    fn check_g2(&self) -> bool {
        if self.space != Space::Cayley8 {
            return false;
        }
        if !self.mat.is_real() || self.mat.inverse().is_none() {
            return false;
        }
        let ctx = self.ctx();
        let table = oct_table();
        let cols: Vec<Octonion> = (0..8)
            .map(|j| {
                let v = self.column(j);
                Octonion::from_coords(std::array::from_fn(|k| v[k].clone()))
            })
            .collect();
        par::all_pairs(8, 8, |i, j| {
            let (s, k) = table[i][j];
            let lhs = if s > 0 { cols[k].clone() } else { cols[k].neg() };
            lhs == cols[i].mul(&cols[j])
        }) && {
            let _ = ctx;
            true
        }
    }

    fn check_f4(&self) -> bool {
        if self.space != Space::Jordan27 {
            return false;
        }
        if !self.mat.is_real() || self.mat.inverse().is_none() {
            return false;
        }
        let ctx = self.ctx();
        let t = jordan::tables();
        let cols: Vec<Vec<CycScalar>> = (0..DIM).map(|j| self.column(j)).collect();
        // alpha(b_i o b_j) = alpha(b_i) o alpha(b_j) on unordered pairs
        par::all_sym_pairs(DIM, |i, j| {
            let lhs = {
                let mut acc = vec![ctx.zero(); DIM];
                for (s, r) in &t.circ[i][j] {
                    for (row, v) in cols[*s].iter().enumerate() {
                        if !v.is_zero() {
                            acc[row] = acc[row].add(&v.scale_rational(r));
                        }
                    }
                }
                acc
            };
            let rhs = jordan::bilinear(&t.circ, &cols[i], &cols[j], ctx);
            lhs == rhs
        })
    }

    fn check_e6(&self) -> bool {
        if self.space != Space::Jordan27 {
            return false;
        }
        if self.mat.inverse().is_none() {
            return false;
        }
        let ctx = self.ctx();
        let t = jordan::tables();
        let cols: Vec<Vec<CycScalar>> = (0..DIM).map(|j| self.column(j)).collect();
        // Hermitian form preservation: <alpha b_i, alpha b_j> = <b_i, b_j>
        let form_ok = par::all_sym_pairs(DIM, |i, j| {
            let mut acc = ctx.zero();
            for s in 0..DIM {
                if cols[i][s].is_zero() || cols[j][s].is_zero() {
                    continue;
                }
                let w = jordan::basis_weight(s);
                acc = acc.add(&cols[i][s].conj().mul(&cols[j][s]).scale_ratio(w, 1));
            }
            if i == j {
                acc == ctx.integer(jordan::basis_weight(i))
            } else {
                acc.is_zero()
            }
        });
        if !form_ok {
            return false;
        }
        // cross-product twist: alpha b_i x alpha b_j = tau alpha tau (b_i x b_j)
        par::all_sym_pairs(DIM, |i, j| {
            let rhs = {
                let mut acc = vec![ctx.zero(); DIM];
                for (s, r) in &t.cross[i][j] {
                    for (row, v) in cols[*s].iter().enumerate() {
                        if !v.is_zero() {
                            acc[row] = acc[row].add(&v.scale_rational(r));
                        }
                    }
                }
                acc.into_iter().map(|v| v.conj()).collect::<Vec<_>>()
            };
            let lhs = jordan::bilinear(&t.cross, &cols[i], &cols[j], ctx);
            lhs == rhs
        })
    }

    /// Membership in the automorphism group of the Cayley algebra.
    pub fn is_g2(&self) -> bool {
        *self.certs.g2.get_or_init(|| self.check_g2())
    }

    /// Membership in the automorphism group of the Jordan algebra.
    pub fn is_f4(&self) -> bool {
        *self.certs.f4.get_or_init(|| self.check_f4())
    }

    /// Membership in the isometry group of the determinant form (polarized
    /// characterization plus Hermitian-form preservation).
    pub fn is_e6(&self) -> bool {
        *self.certs.e6.get_or_init(|| self.check_e6())
    }

    pub fn is_member(&self, g: GroupName) -> bool {
        match g {
            GroupName::G2 => self.is_g2(),
            GroupName::F4 => self.is_f4(),
            GroupName::E6 => self.is_e6(),
        }
    }

    /// Exact fixing of each listed element.
    pub fn stabilizes(&self, targets: &[JordanElem]) -> bool {
        targets
            .iter()
            .all(|t| self.apply_jordan(t).map(|img| img == *t).unwrap_or(false))
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
    fn apply_and_space_checks() {
        let c = ctx();
        let id = AlgMap::identity(Space::Jordan27, &c);
        let e1 = JordanElem::e(&c, 0);
        assert_eq!(id.apply_jordan(&e1).unwrap(), e1);
        let x = Octonion::basis(&c, 3);
        assert!(matches!(id.apply_octonion(&x), Err(GroupError::SpaceMismatch(_, _))));
    }

    #[test]
    fn gamma_family_in_g2() {
        let c = ctx();
        let gamma = AlgMap::named(Named::Gamma, Space::Cayley8, &c);
        let gamma3 = AlgMap::named(Named::Gamma3, Space::Cayley8, &c);
        let w3 = AlgMap::named(Named::W3, Space::Cayley8, &c);
        assert!(gamma.is_g2());
        assert!(gamma3.is_g2());
        assert!(w3.is_g2());
        assert!(gamma.power_is_identity(2));
        assert!(gamma3.power_is_identity(3));
        assert!(!gamma3.power_is_identity(1));
        assert!(w3.power_is_identity(3));
        // negating only e7 is not an automorphism
        let bad = AlgMap::from_octonion_map(&c, |x| {
            let mut y = x.clone();
            y.c[7] = y.c[7].neg();
            y
        });
        assert!(!bad.is_g2());
    }

    #[test]
    fn f4_members_and_counterexample() {
        let c = ctx();
        let id = AlgMap::identity(Space::Jordan27, &c);
        assert!(id.is_f4());
        let sigma3 = AlgMap::named(Named::Sigma3, Space::Jordan27, &c);
        assert!(sigma3.is_f4());
        // scaling E1 by 2 breaks idempotency
        let mut mat = CycMat::identity(&c, DIM);
        *mat.at_mut(0, 0) = c.integer(2);
        let bad = AlgMap::from_matrix(Space::Jordan27, mat);
        assert!(!bad.is_f4());
    }

    #[test]
    fn e6_members_and_counterexample() {
        let c = ctx();
        let mu3 = AlgMap::named(Named::Mu3, Space::Jordan27, &c);
        assert!(mu3.is_e6());
        assert!(!mu3.is_f4()); // not real
        let sigma3 = AlgMap::named(Named::Sigma3, Space::Jordan27, &c);
        assert!(sigma3.is_e6()); // F4 subset E6
        let two = AlgMap::from_matrix(Space::Jordan27, CycMat::identity(&c, DIM).scale(&c.integer(2)));
        assert!(!two.is_e6());
    }

    #[test]
    fn order_and_scalar_powers() {
        let c = ctx();
        let nu3 = AlgMap::named(Named::Nu3, Space::Jordan27, &c);
        assert!(!nu3.power_is_identity(3));
        assert!(nu3.power_is_identity(9));
        assert!(nu3.power_is_scalar(3, &c.omega()));
        let sigma = AlgMap::named(Named::Sigma, Space::Jordan27, &c);
        assert_eq!(sigma.inverse().unwrap(), sigma);
    }

    #[test]
    fn commutation_checks() {
        let c = ctx();
        let gamma3 = AlgMap::named(Named::Gamma3, Space::Cayley8, &c);
        let w3 = AlgMap::named(Named::W3, Space::Cayley8, &c);
        assert!(gamma3.commutes(&w3));
        let sigma3 = AlgMap::named(Named::Sigma3, Space::Jordan27, &c);
        let w3j = AlgMap::named(Named::W3, Space::Jordan27, &c);
        assert!(sigma3.commutes(&w3j));
        let sigma = AlgMap::named(Named::Sigma, Space::Jordan27, &c);
        let d_i = crate::autohoms::d_map(&crate::cayley::Cx::new(c.zero(), c.one())).unwrap();
        assert!(sigma.commutes(&d_i));
    }

    #[test]
    fn stabilizer_checks() {
        let c = ctx();
        let id = AlgMap::identity(Space::Jordan27, &c);
        let e1 = JordanElem::e(&c, 0);
        assert!(id.stabilizes(&[e1.clone()]));
        let sigma3 = AlgMap::named(Named::Sigma3, Space::Jordan27, &c);
        assert!(sigma3.stabilizes(&[e1.clone()]));
        // D_a fixes the diagonal but acts on F1(x) by x -> conj(a) x conj(a),
        // so a general phase does not stabilize F1(1); sigma = D_{-1} does.
        let a = crate::cayley::Cx::exp_turn(&c, 1, 36);
        let da = crate::autohoms::d_map(&a).unwrap();
        let f11 = JordanElem::f(0, Octonion::one(&c));
        let f1e1 = JordanElem::f(0, Octonion::basis(&c, 1));
        assert!(da.stabilizes(&[e1.clone()]));
        assert!(!da.stabilizes(&[e1.clone(), f11.clone(), f1e1.clone()]));
        let sigma = AlgMap::named(Named::Sigma, Space::Jordan27, &c);
        assert!(sigma.stabilizes(&[e1, f11, f1e1]));
    }

    #[test]
    fn g2_extends_to_f4_extends_to_e6() {
        let c = ctx();
        for name in [Named::Gamma, Named::Gamma3, Named::W3] {
            let g = AlgMap::named(name, Space::Cayley8, &c);
            assert!(g.is_g2());
            let ext = g.extend_to_jordan();
            assert!(ext.is_f4());
            assert!(ext.is_e6());
            assert_eq!(ext, AlgMap::named(name, Space::Jordan27, &c));
        }
    }

    #[test]
    fn certified_inverses_stay_certified() {
        let c = ctx();
        for name in [Named::Sigma3, Named::W3, Named::Gamma3] {
            let g = AlgMap::named(name, Space::Jordan27, &c);
            assert!(g.is_f4());
            assert!(g.inverse().unwrap().is_f4());
        }
        let nu3 = AlgMap::named(Named::Nu3, Space::Jordan27, &c);
        assert!(nu3.is_e6());
        assert!(nu3.inverse().unwrap().is_e6());
    }

    #[test]
    fn det_preserved_by_certified_e6_maps() {
        use rand::SeedableRng;
        let c = ctx();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(59);
        let maps = [
            AlgMap::named(Named::Mu3, Space::Jordan27, &c),
            AlgMap::named(Named::Nu3, Space::Jordan27, &c),
            AlgMap::named(Named::W3, Space::Jordan27, &c),
        ];
        for m in &maps {
            assert!(m.is_e6());
            for _ in 0..17 {
                let x = crate::jordan::tests::random_elem(&c, &mut rng);
                assert_eq!(m.apply_jordan(&x).unwrap().det(), x.det());
            }
        }
    }
}
