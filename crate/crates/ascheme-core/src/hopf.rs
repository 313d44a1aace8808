//! Hopf algebra structure on the adjacency algebra of a thin scheme, and
//! comodule-algebra coactions induced by morphisms into thin schemes.
//!
//! Everything here is extensional: each coalgebra axiom is an equality of
//! exact rational matrices over the distinguished bases, assembled from
//! Kronecker products of the comultiplication, counit, antipode,
//! multiplication, unit and swap maps.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{alg_hom, tensor_iso, Algebra, AlgebraMap, Rational};
use crate::bridge::quo_group;
use crate::closed;
use crate::error::{Error, Result};
use crate::morphism::{self, Morphism};
use crate::scheme::Scheme;

/// A raw rational matrix, row-major. Used to compose the structural maps
/// of the (co)algebra axioms without tracking algebra descriptors.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Mat {
    rows: usize,
    cols: usize,
    a: Vec<Rational>,
}

impl Mat {
    fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, a: vec![Rational::from_integer(0); rows * cols] }
    }

    fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.a[i * n + i] = Rational::from_integer(1);
        }
        m
    }

    fn from_map(map: &AlgebraMap) -> Mat {
        Mat { rows: map.cod().dim(), cols: map.dom().dim(), a: map.matrix().to_vec() }
    }

    /// `self` after `other`.
    fn mul(&self, other: &Mat) -> Mat {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let v = self.a[r * self.cols + k];
                if v == Rational::from_integer(0) {
                    continue;
                }
                for c in 0..other.cols {
                    out.a[r * other.cols + c] += v * other.a[k * other.cols + c];
                }
            }
        }
        out
    }

    fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let v = self.a[r1 * self.cols + c1];
                if v == Rational::from_integer(0) {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        out.a[(r1 * other.rows + r2) * out.cols + (c1 * other.cols + c2)] =
                            v * other.a[r2 * other.cols + c2];
                    }
                }
            }
        }
        out
    }
}

/// Multiplication `nabla: A (x) A -> A` of an algebra, as a matrix with
/// column `(p, q)` the basis expansion of the product of basis `p` and
/// basis `q`.
fn multiplication_matrix(alg: &Algebra) -> Mat {
    let d = alg.dim();
    let mut m = Mat::zero(d, d * d);
    for p in 0..d {
        for q in 0..d {
            for r in 0..d {
                let k = alg.structure_constant(p, q, r);
                if k > 0 {
                    m.a[r * d * d + (p * d + q)] = Rational::from_integer(k as i64);
                }
            }
        }
    }
    m
}

/// Unit `eta: k -> A`, the single column of the unit basis element.
fn unit_matrix(alg: &Algebra) -> Mat {
    let mut m = Mat::zero(alg.dim(), 1);
    m.a[0] = Rational::from_integer(1);
    m
}

/// Swap `tau: A (x) B -> B (x) A` on pair indices.
fn swap_matrix(da: usize, db: usize) -> Mat {
    let mut m = Mat::zero(da * db, da * db);
    for a in 0..da {
        for b in 0..db {
            m.a[(b * da + a) * da * db + (a * db + b)] = Rational::from_integer(1);
        }
    }
    m
}

/// Per-axiom outcome of the Hopf verification on a thin scheme.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HopfChecks {
    pub coassociative: bool,
    pub counit_left: bool,
    pub counit_right: bool,
    pub antipode_left: bool,
    pub antipode_right: bool,
    pub cocommutative: bool,
    pub comultiplication_is_algebra_map: bool,
    pub counit_is_algebra_map: bool,
    /// The basis bijection onto the group algebra of the thin quotient
    /// group is an algebra isomorphism respecting comultiplication, counit
    /// and antipode.
    pub group_algebra_isomorphism: bool,
}

impl HopfChecks {
    pub fn all_hold(&self) -> bool {
        self.coassociative
            && self.counit_left
            && self.counit_right
            && self.antipode_left
            && self.antipode_right
            && self.cocommutative
            && self.comultiplication_is_algebra_map
            && self.counit_is_algebra_map
            && self.group_algebra_isomorphism
    }
}

/// The Hopf algebra carried by the adjacency algebra of a thin scheme:
/// comultiplication `sigma_t -> sigma_t (x) sigma_t`, counit
/// `sigma_t -> 1`, antipode `sigma_t -> sigma_{t*}`.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub scheme: Scheme,
    pub comultiplication: AlgebraMap,
    pub counit: AlgebraMap,
    pub antipode: AlgebraMap,
    pub checks: HopfChecks,
}

pub fn hopf_structure(t: &Scheme) -> Result<HopfData> {
    if !t.is_thin() {
        return Err(Error::NotThin);
    }
    let d = t.rank();
    let alg = Algebra::Scheme(t.clone());
    let tensor = Algebra::Tensor(t.clone(), t.clone());
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);

    let mut delta = vec![zero; d * d * d];
    for s in 0..d {
        delta[(s * d + s) * d + s] = one;
    }
    let comultiplication = AlgebraMap::new(alg.clone(), tensor, delta)?;

    let counit = AlgebraMap::new(alg.clone(), Algebra::Scalar, vec![one; d])?;

    let mut anti = vec![zero; d * d];
    for s in 0..d {
        anti[t.star(s) * d + s] = one;
    }
    let antipode = AlgebraMap::new(alg.clone(), alg.clone(), anti)?;

    let dm = Mat::from_map(&comultiplication);
    let em = Mat::from_map(&counit);
    let sm = Mat::from_map(&antipode);
    let nabla = multiplication_matrix(&alg);
    let eta = unit_matrix(&alg);
    let id = Mat::identity(d);
    let tau = swap_matrix(d, d);

    let coassociative = dm.kron(&id).mul(&dm) == id.kron(&dm).mul(&dm);
    let counit_left = em.kron(&id).mul(&dm) == id;
    let counit_right = id.kron(&em).mul(&dm) == id;
    let eta_eps = eta.mul(&em);
    let antipode_left = nabla.mul(&sm.kron(&id)).mul(&dm) == eta_eps;
    let antipode_right = nabla.mul(&id.kron(&sm)).mul(&dm) == eta_eps;
    let cocommutative = tau.mul(&dm) == dm;
    let comultiplication_is_algebra_map =
        comultiplication.is_unital() && comultiplication.is_multiplicative();
    let counit_is_algebra_map = counit.is_unital() && counit.is_multiplicative();

    // basis bijection sigma_t -> class of t in the group of the thin
    // quotient; for thin T the residue is trivial, but the construction
    // goes through the quotient so it matches the general definition.
    let quo = quo_group(t)?;
    let group_algebra_isomorphism = {
        let grp = Algebra::Group(quo.group.clone());
        let mut phi = vec![zero; d * d];
        for s in 0..d {
            phi[quo.element_of_relation(s) * d + s] = one;
        }
        match AlgebraMap::new(alg.clone(), grp.clone(), phi) {
            Ok(map) => {
                let pm = Mat::from_map(&map);
                // group-side structural maps
                let dg = quo.group.order();
                let mut gdelta = Mat::zero(dg * dg, dg);
                for g in 0..dg {
                    gdelta.a[(g * dg + g) * dg + g] = one;
                }
                let geps = Mat { rows: 1, cols: dg, a: vec![one; dg] };
                let mut gs = Mat::zero(dg, dg);
                for g in 0..dg {
                    gs.a[quo.group.inverse(g) * dg + g] = one;
                }
                map.is_unital()
                    && map.is_multiplicative()
                    && map.is_linear_isomorphism()
                    && gdelta.mul(&pm) == pm.kron(&pm).mul(&dm)
                    && geps.mul(&pm) == em
                    && gs.mul(&pm) == pm.mul(&sm)
            }
            Err(_) => false,
        }
    };

    Ok(HopfData {
        scheme: t.clone(),
        comultiplication,
        counit,
        antipode,
        checks: HopfChecks {
            coassociative,
            counit_left,
            counit_right,
            antipode_left,
            antipode_right,
            cocommutative,
            comultiplication_is_algebra_map,
            counit_is_algebra_map,
            group_algebra_isomorphism,
        },
    })
}

/// Per-equation outcome of the comodule-algebra verification.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ComoduleChecks {
    /// `(Delta (x) id) . rho = (id (x) rho) . rho`
    pub coassociative: bool,
    /// `(epsilon (x) id) . rho = id`
    pub counital: bool,
    /// `rho . nabla_M = (nabla_A (x) nabla_M) . (id (x) tau (x) id) . (rho (x) rho)`
    pub multiplicative: bool,
    /// `rho(1) = 1 (x) 1`
    pub unital: bool,
    /// the counit-weighted map `sigma_p -> n_p sigma_{phi(p)}` equals the
    /// pushforward of the morphism
    pub counit_map_is_pushforward: bool,
    /// `rho` equals `mu^-1 . A(delta)` for the graph morphism
    /// `x -> (phi(x), x)`
    pub factors_through_product: bool,
}

impl ComoduleChecks {
    pub fn all_hold(&self) -> bool {
        self.coassociative
            && self.counital
            && self.multiplicative
            && self.unital
            && self.counit_map_is_pushforward
            && self.factors_through_product
    }
}

/// The comodule-algebra structure on `A(S)` over the Hopf algebra of a
/// thin codomain: `rho(sigma_p) = sigma_{phi(p)} (x) sigma_p`.
#[derive(Clone, Debug)]
pub struct Coaction {
    pub morphism: Morphism,
    /// `A(S) -> A(T) (x) A(S)`
    pub rho: AlgebraMap,
    /// `sigma_p -> n_p sigma_{phi(p)}`
    pub counit_map: AlgebraMap,
    pub checks: ComoduleChecks,
}

pub fn comodule_coaction(phi: &Morphism) -> Result<Coaction> {
    let (s, t) = (phi.dom(), phi.cod());
    if !t.is_thin() {
        return Err(Error::CodomainNotThin);
    }
    // every morphism into a thin scheme is admissible; a failure here is a
    // library bug
    phi.require_admissible()
        .map_err(|_| Error::InternalInconsistency("morphism into thin scheme not admissible"))?;
    let (ds, dt) = (s.rank(), t.rank());
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);

    let s_alg = Algebra::Scheme(s.clone());
    let tensor = Algebra::Tensor(t.clone(), s.clone());
    let mut rho_m = vec![zero; dt * ds * ds];
    for p in 0..ds {
        rho_m[(phi.apply_rel(p) * ds + p) * ds + p] = one;
    }
    let rho = AlgebraMap::new(s_alg.clone(), tensor, rho_m)?;

    let mut eps_m = vec![zero; dt * ds];
    for p in 0..ds {
        eps_m[phi.apply_rel(p) * ds + p] = Rational::from_integer(s.valency(p) as i64);
    }
    let counit_map = AlgebraMap::new(s_alg.clone(), Algebra::Scheme(t.clone()), eps_m)?;

    let hopf = hopf_structure(t)?;
    let rm = Mat::from_map(&rho);
    let dm = Mat::from_map(&hopf.comultiplication);
    let em = Mat::from_map(&hopf.counit);
    let id_s = Mat::identity(ds);
    let id_t = Mat::identity(dt);

    let coassociative = dm.kron(&id_s).mul(&rm) == id_t.kron(&rm).mul(&rm);
    let counital = em.kron(&id_s).mul(&rm) == id_s;

    let nabla_s = multiplication_matrix(&s_alg);
    let nabla_t = multiplication_matrix(&Algebra::Scheme(t.clone()));
    // id_A (x) tau_{M,A} (x) id_M on A (x) M (x) A (x) M
    let mid = id_t.kron(&swap_matrix(ds, dt)).kron(&id_s);
    let lhs = rm.mul(&nabla_s);
    let rhs = nabla_t.kron(&nabla_s).mul(&mid).mul(&rm.kron(&rm));
    let multiplicative = lhs == rhs && rho.is_unital() && rho.is_multiplicative();

    let unital = {
        let unit_img = rho.apply_basis(0);
        let expected = crate::algebra::AlgebraElement::basis(rho.cod(), 0);
        unit_img == expected
    };

    let counit_map_is_pushforward = counit_map == alg_hom(phi)?;

    // the graph morphism x -> (phi(x), x) into T x S
    let prod = t.direct_product(s);
    let graph_map: Vec<usize> = (0..s.n()).map(|x| phi.apply(x) * s.n() + x).collect();
    let graph = Morphism::from_point_map(s, &prod, graph_map)?;
    let mu = tensor_iso(t, s)?;
    let factors_through_product = graph.is_admissible()
        && mu.inverse()?.compose(&alg_hom(&graph)?)? == rho;

    Ok(Coaction {
        morphism: phi.clone(),
        rho,
        counit_map,
        checks: ComoduleChecks {
            coassociative,
            counital,
            multiplicative,
            unital,
            counit_map_is_pushforward,
            factors_through_product,
        },
    })
}

/// The coaction over the thin quotient by the thin residue, along the
/// natural projection.
pub fn canonical_coaction(s: &Scheme) -> Result<Coaction> {
    let residue = closed::thin_residue(s)?;
    let (_, projection) = closed::quotient(s, &residue)?;
    comodule_coaction(&projection)
}

/// Whether the diagonal `x -> (x, x)` into the product square is
/// admissible; this holds exactly for thin schemes.
pub fn check_diagonal_admissibility(s: &Scheme) -> bool {
    morphism::diagonal(s).is_admissible()
}

/// Negative control: the first basis pair on which the naive
/// comultiplication `sigma_p -> sigma_p (x) sigma_p` fails to be
/// multiplicative. `None` exactly when the scheme is thin.
pub fn naive_diagonal_failure(s: &Scheme) -> Option<(usize, usize)> {
    let d = s.rank();
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    let mut naive = vec![zero; d * d * d];
    for p in 0..d {
        naive[(p * d + p) * d + p] = one;
    }
    let map = AlgebraMap::new(
        Algebra::Scheme(s.clone()),
        Algebra::Tensor(s.clone(), s.clone()),
        naive,
    )
    .expect("naive comultiplication has the right shape");
    for p in 0..d {
        for q in 0..d {
            let bp = crate::algebra::AlgebraElement::basis(map.dom(), p);
            let bq = crate::algebra::AlgebraElement::basis(map.dom(), q);
            let lhs = map.apply(&crate::algebra::alg_product(map.dom(), &bp, &bq));
            let rhs = crate::algebra::alg_product(
                map.cod(),
                &map.apply(&bp),
                &map.apply(&bq),
            );
            if lhs != rhs {
                return Some((p, q));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{group_scheme, Group};

    fn c3() -> Scheme {
        group_scheme(&Group::cyclic(3))
    }

    fn k3() -> Scheme {
        Scheme::complete(3).unwrap()
    }

    #[test]
    fn trivial_hopf() {
        let h = hopf_structure(&Scheme::trivial()).unwrap();
        assert!(h.checks.all_hold());
    }

    #[test]
    fn c2_hopf_antipode_is_identity() {
        let sc2 = group_scheme(&Group::cyclic(2));
        let h = hopf_structure(&sc2).unwrap();
        assert!(h.checks.all_hold());
        // every element of C2 is self-inverse
        assert_eq!(h.antipode, AlgebraMap::identity(&Algebra::Scheme(sc2)));
    }

    #[test]
    fn s3_hopf_antipode_is_inversion() {
        let s3 = group_scheme(&Group::symmetric3());
        let h = hopf_structure(&s3).unwrap();
        assert!(h.checks.all_hold());
        for s in 0..6 {
            assert_eq!(h.antipode.apply_basis(s).coeff(s3.star(s)), Rational::from_integer(1));
        }
    }

    #[test]
    fn non_thin_is_rejected() {
        assert!(matches!(hopf_structure(&k3()), Err(Error::NotThin)));
    }

    #[test]
    fn identity_coaction_is_comultiplication() {
        let t = c3();
        let c = comodule_coaction(&Morphism::identity(&t)).unwrap();
        assert!(c.checks.all_hold());
        let h = hopf_structure(&t).unwrap();
        assert_eq!(c.rho.matrix(), h.comultiplication.matrix());
    }

    #[test]
    fn product_projection_coaction() {
        let prod = c3().direct_product(&k3());
        let c = canonical_coaction(&prod).unwrap();
        assert!(c.checks.all_hold());
        // rho(sigma_[1,1]) = sigma_phi([1,1]) (x) sigma_[1,1]
        let img = c.rho.apply_basis(3);
        let t_rel = c.morphism.apply_rel(3);
        assert_eq!(img.coeff(t_rel * 6 + 3), Rational::from_integer(1));
        assert_eq!(
            img.coeffs().iter().filter(|&&v| v != Rational::from_integer(0)).count(),
            1
        );
    }

    #[test]
    fn coaction_to_trivial_scheme() {
        let s3 = group_scheme(&Group::symmetric3());
        let phi = Morphism::from_point_map(&s3, &Scheme::trivial(), vec![0; 6]).unwrap();
        let c = comodule_coaction(&phi).unwrap();
        assert!(c.checks.all_hold());
    }

    #[test]
    fn canonical_coaction_on_k3_is_trivial() {
        // the residue is everything, so the quotient is the trivial scheme
        let c = canonical_coaction(&k3()).unwrap();
        assert_eq!(c.morphism.cod().rank(), 1);
        assert!(c.checks.all_hold());
    }

    #[test]
    fn coaction_requires_thin_codomain() {
        let id = Morphism::identity(&k3());
        assert!(matches!(comodule_coaction(&id), Err(Error::CodomainNotThin)));
    }

    #[test]
    fn diagonal_admissibility_equals_thinness() {
        for s in [Scheme::trivial(), c3(), k3(), c3().direct_product(&k3())] {
            assert_eq!(check_diagonal_admissibility(&s), s.is_thin());
        }
    }

    #[test]
    fn naive_diagonal_fails_on_non_thin() {
        // K3: sigma_1 sigma_1 = 2 sigma_0 + sigma_1, but the naive image
        // squares to 2 sigma_0 (x) sigma_0 + sigma_1 (x) sigma_1
        let (p, q) = naive_diagonal_failure(&k3()).unwrap();
        assert_eq!((p, q), (1, 1));
        assert!(naive_diagonal_failure(&c3()).is_none());
        assert!(naive_diagonal_failure(&c3().direct_product(&k3())).is_some());
    }
}
