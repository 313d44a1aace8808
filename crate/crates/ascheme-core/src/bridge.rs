//! Thin radicals, thin quotients, and the two adjunctions with finite
//! groups.
//!
//! `S(G)` is the thin scheme of a group, `Rad(S)` the group of thin
//! relations, and `Quo(S)` the group of the quotient by the thin residue.
//! The adjunction checks here are extensional: both Hom-sets are
//! enumerated exhaustively and the unit/counit constructions are verified
//! to be mutually inverse bijections, class by class.

use alloc::vec;
use alloc::vec::Vec;

use crate::closed::{self, ClosedSubset};
use crate::error::{Error, Result};
use crate::group::{group_scheme, Group, GroupHom};
use crate::morphism::{self, Morphism};
use crate::scheme::Scheme;

/// The thin radical as a group, with `label[i]` the relation index of
/// group element `i`. Element 0 is relation 0.
#[derive(Clone, Debug)]
pub struct RadGroup {
    pub group: Group,
    pub label: Vec<usize>,
    elt_of_rel: Vec<Option<usize>>,
}

impl RadGroup {
    pub fn element_of_relation(&self, rel: usize) -> Option<usize> {
        self.elt_of_rel.get(rel).copied().flatten()
    }
}

/// `Rad(S)`: the thin relations under complex product. The product of two
/// thin relations is a singleton, so the table is well-defined.
pub fn rad_group(scheme: &Scheme) -> RadGroup {
    let radical = closed::thin_radical(scheme);
    let label = radical.indices();
    let elt_of = |rel: usize| label.iter().position(|&r| r == rel);
    let rows: Vec<Vec<usize>> = label
        .iter()
        .map(|&p| {
            label
                .iter()
                .map(|&q| {
                    let r = (0..scheme.rank())
                        .find(|&r| scheme.sc(p, q, r) > 0)
                        .expect("complex product of thin relations is nonempty");
                    elt_of(r).expect("product of thin relations is thin")
                })
                .collect()
        })
        .collect();
    let group = Group::from_table(&rows).expect("thin relations form a group");
    let elt_of_rel = (0..scheme.rank()).map(elt_of).collect();
    RadGroup { group, label, elt_of_rel }
}

/// `Quo(S)`: the group of the thin quotient `S // O^theta(S)`, together
/// with the residue, the quotient scheme and its projection.
#[derive(Clone, Debug)]
pub struct QuoGroup {
    pub group: Group,
    /// label[i] = relation index of element `i` in the quotient scheme
    pub label: Vec<usize>,
    pub residue: ClosedSubset,
    pub quotient: Scheme,
    pub projection: Morphism,
}

impl QuoGroup {
    /// The group element of the residue class of a relation of the
    /// original scheme.
    pub fn element_of_relation(&self, rel: usize) -> usize {
        let class = self.projection.apply_rel(rel);
        self.label.iter().position(|&c| c == class).expect("quotient is thin")
    }
}

pub fn quo_group(scheme: &Scheme) -> Result<QuoGroup> {
    let residue = closed::thin_residue(scheme)?;
    let (quotient, projection) = closed::quotient(scheme, &residue)?;
    if !quotient.is_thin() {
        return Err(Error::InternalInconsistency("quotient by thin residue is not thin"));
    }
    let rad = rad_group(&quotient);
    Ok(QuoGroup { group: rad.group, label: rad.label, residue, quotient, projection })
}

/// `Rad(phi)`: the induced map on thin radicals; a group homomorphism for
/// admissible `phi`, and constant on algebraic equivalence classes.
pub fn rad_hom(phi: &Morphism) -> Result<GroupHom> {
    phi.require_admissible()?;
    let rad_dom = rad_group(phi.dom());
    let rad_cod = rad_group(phi.cod());
    let map: Vec<usize> = rad_dom
        .label
        .iter()
        .map(|&rel| {
            rad_cod
                .element_of_relation(phi.apply_rel(rel))
                .ok_or(Error::InternalInconsistency("admissible image of thin is not thin"))
        })
        .collect::<Result<_>>()?;
    GroupHom::new(&rad_dom.group, &rad_cod.group, map)
}

/// `Quo(phi)`: the induced map on thin quotients; well-definedness is
/// re-verified over every relation.
pub fn quo_hom(phi: &Morphism) -> Result<GroupHom> {
    phi.require_admissible()?;
    let quo_dom = quo_group(phi.dom())?;
    let quo_cod = quo_group(phi.cod())?;
    let mut map = vec![usize::MAX; quo_dom.group.order()];
    for s in 0..phi.dom().rank() {
        let src = quo_dom.element_of_relation(s);
        let dst = quo_cod.element_of_relation(phi.apply_rel(s));
        if map[src] == usize::MAX {
            map[src] = dst;
        } else if map[src] != dst {
            return Err(Error::InternalInconsistency("Quo(phi) is not well-defined"));
        }
    }
    GroupHom::new(&quo_dom.group, &quo_cod.group, map)
}

/// `S(f)`: the admissible morphism of thin schemes induced by a group
/// homomorphism. In `S(G)` the relation of `(x, y)` is `x^-1 y`, so
/// relation indices coincide with group elements.
pub fn scheme_hom(dom: &Group, cod: &Group, f: &GroupHom) -> Result<Morphism> {
    if f.dom_order() != dom.order() || f.cod_order() != cod.order() {
        return Err(Error::DomainMismatch);
    }
    let phi = Morphism::from_point_map(&group_scheme(dom), &group_scheme(cod), f.map().to_vec())?;
    phi.require_admissible()?;
    Ok(phi)
}

/// Outcome of the extensional check of the `(S_a, Rad)` adjunction for one
/// `(G, T)` pair. All booleans must hold.
#[derive(Clone, Debug)]
pub struct RadAdjunctionReport {
    pub group_hom_count: usize,
    pub admissible_class_count: usize,
    pub bijection: bool,
    pub naturality: bool,
    /// The unit `G -> Rad(S(G))`, `g -> {g~}`, is a group isomorphism.
    pub unit_is_group_isomorphism: bool,
    /// The counit class in `Hom(S(Rad(T)), T)` exists and maps to the
    /// identity under the unit direction.
    pub counit_class_found: bool,
    /// For thin `T`: every representative of the counit class is a scheme
    /// isomorphism. `None` when `T` is not thin.
    pub counit_representatives_are_isomorphisms: Option<bool>,
}

impl RadAdjunctionReport {
    pub fn all_hold(&self) -> bool {
        self.bijection
            && self.naturality
            && self.unit_is_group_isomorphism
            && self.counit_class_found
            && self.counit_representatives_are_isomorphisms.unwrap_or(true)
    }
}

/// The unit-direction map of the `(S_a, Rad)` adjunction: from an admissible
/// morphism class `S(G) -> T` to a group homomorphism `G -> Rad(T)`.
fn rad_eta(g: &Group, rad_t: &RadGroup, phi: &Morphism) -> Result<GroupHom> {
    let map: Vec<usize> = (0..g.order())
        .map(|elt| {
            rad_t
                .element_of_relation(phi.apply_rel(elt))
                .ok_or(Error::InternalInconsistency("image of thin relation is not thin"))
        })
        .collect::<Result<_>>()?;
    GroupHom::new(g, &rad_t.group, map)
}

/// The counit-direction map: from `chi: G -> Rad(T)` to an admissible
/// morphism `S(G) -> T`, using base point 0 of `T`.
fn rad_epsilon(g: &Group, t: &Scheme, rad_t: &RadGroup, chi: &GroupHom) -> Result<Morphism> {
    let sg = group_scheme(g);
    let map: Vec<usize> = (0..g.order())
        .map(|elt| {
            let rel = rad_t.label[chi.apply(elt)];
            t.neighbors(0, rel).next().expect("thin relation has one neighbor")
        })
        .collect();
    let phi = Morphism::from_point_map(&sg, t, map)?;
    phi.require_admissible()?;
    Ok(phi)
}

pub fn check_rad_adjunction(g: &Group, t: &Scheme) -> Result<RadAdjunctionReport> {
    let rad_t = rad_group(t);
    let group_homs = g.homomorphisms_to(&rad_t.group);
    let sg = group_scheme(g);
    let admissible = morphism::enumerate_morphisms(&sg, t, true)?;
    let classes = morphism::alg_equivalence_classes(&admissible)?;
    let reps: Vec<&Morphism> = classes.iter().map(|c| &admissible[c[0]]).collect();

    // eta followed by epsilon is the identity on classes; epsilon followed
    // by eta is the identity on group homomorphisms; eta is injective and
    // hits every group homomorphism.
    let mut bijection = reps.len() == group_homs.len();
    let mut images: Vec<GroupHom> = Vec::new();
    for rep in &reps {
        let chi = rad_eta(g, &rad_t, rep)?;
        bijection &= group_homs.contains(&chi) && !images.contains(&chi);
        let back = rad_epsilon(g, t, &rad_t, &chi)?;
        bijection &= back.rel_map() == rep.rel_map();
        images.push(chi);
    }
    for chi in &group_homs {
        let phi = rad_epsilon(g, t, &rad_t, chi)?;
        let round = rad_eta(g, &rad_t, &phi)?;
        bijection &= round == *chi;
    }

    // naturality: Rad(psi) . eta(phi) . chi = eta(psi . phi . S(chi)) for
    // group endomorphisms chi of G and admissible endomorphisms psi of T.
    let endos_t = match morphism::enumerate_morphisms(t, t, true) {
        Ok(ms) => ms,
        Err(Error::BudgetExceeded { .. }) => vec![Morphism::identity(t)],
        Err(e) => return Err(e),
    };
    let mut naturality = true;
    for chi in g.homomorphisms_to(g) {
        let s_chi = scheme_hom(g, g, &chi)?;
        for psi in &endos_t {
            let rad_psi = rad_hom(psi)?;
            for rep in &reps {
                let lhs = rad_psi.compose(&rad_eta(g, &rad_t, rep)?)?.compose(&chi)?;
                let composite = psi.compose(&rep.compose(&s_chi)?)?;
                let rhs = rad_eta(g, &rad_t, &composite)?;
                naturality &= lhs == rhs;
            }
        }
    }

    // unit: g -> {g~} is an isomorphism G -> Rad(S(G)).
    let rad_sg = rad_group(&sg);
    let unit_map: Vec<usize> = (0..g.order())
        .map(|elt| rad_sg.element_of_relation(elt).expect("group scheme is thin"))
        .collect();
    let unit_is_group_isomorphism = GroupHom::new(g, &rad_sg.group, unit_map)
        .map(|h| h.is_bijective())
        .unwrap_or(false);

    // counit: the class in Hom(S(Rad(T)), T) mapping to the identity of
    // Rad(T) under eta.
    let s_rad_t = group_scheme(&rad_t.group);
    let counit_candidates = morphism::enumerate_morphisms(&s_rad_t, t, true)?;
    let counit_classes = morphism::alg_equivalence_classes(&counit_candidates)?;
    let id_rad = GroupHom::identity(&rad_t.group);
    let counit_class = counit_classes.iter().find(|c| {
        rad_eta(&rad_t.group, &rad_t, &counit_candidates[c[0]])
            .map(|h| h == id_rad)
            .unwrap_or(false)
    });
    let counit_representatives_are_isomorphisms = if t.is_thin() {
        Some(counit_class.is_some_and(|c| {
            c.iter().all(|&i| counit_candidates[i].is_bijective())
        }))
    } else {
        None
    };

    Ok(RadAdjunctionReport {
        group_hom_count: group_homs.len(),
        admissible_class_count: reps.len(),
        bijection,
        naturality,
        unit_is_group_isomorphism,
        counit_class_found: counit_class.is_some(),
        counit_representatives_are_isomorphisms,
    })
}

/// Outcome of the extensional check of the `(Quo, S_a)` adjunction for one
/// `(T, G)` pair.
#[derive(Clone, Debug)]
pub struct QuoAdjunctionReport {
    pub group_hom_count: usize,
    pub admissible_class_count: usize,
    pub bijection: bool,
    pub naturality: bool,
    /// The counit `Quo(S(G)) -> G` is a group isomorphism.
    pub counit_is_group_isomorphism: bool,
    /// The kernel of the unit `T -> S(Quo(T))` is the thin residue.
    pub unit_kernel_is_thin_residue: bool,
    /// For thin `T`: every representative of the unit class is a scheme
    /// isomorphism. `None` when `T` is not thin.
    pub unit_representatives_are_isomorphisms: Option<bool>,
}

impl QuoAdjunctionReport {
    pub fn all_hold(&self) -> bool {
        self.bijection
            && self.naturality
            && self.counit_is_group_isomorphism
            && self.unit_kernel_is_thin_residue
            && self.unit_representatives_are_isomorphisms.unwrap_or(true)
    }
}

/// The unit-direction map of the `(Quo, S_a)` adjunction: from
/// `chi: Quo(T) -> G` to an admissible morphism `T -> S(G)`, with base
/// point 0 of `T`.
fn quo_eta(t: &Scheme, g: &Group, quo_t: &QuoGroup, chi: &GroupHom) -> Result<Morphism> {
    let sg = group_scheme(g);
    let map: Vec<usize> = (0..t.n())
        .map(|y| chi.apply(quo_t.element_of_relation(t.color(0, y))))
        .collect();
    let phi = Morphism::from_point_map(t, &sg, map)?;
    phi.require_admissible()?;
    Ok(phi)
}

/// The counit-direction map: from an admissible morphism class
/// `T -> S(G)` to a group homomorphism `Quo(T) -> G`; well-definedness is
/// re-verified over every relation of `T`.
fn quo_epsilon(g: &Group, quo_t: &QuoGroup, phi: &Morphism) -> Result<GroupHom> {
    let mut map = vec![usize::MAX; quo_t.group.order()];
    for s in 0..phi.dom().rank() {
        let src = quo_t.element_of_relation(s);
        let dst = phi.apply_rel(s); // relations of S(G) are group elements
        if map[src] == usize::MAX {
            map[src] = dst;
        } else if map[src] != dst {
            return Err(Error::InternalInconsistency("counit direction not well-defined"));
        }
    }
    GroupHom::new(&quo_t.group, g, map)
}

pub fn check_quo_adjunction(t: &Scheme, g: &Group) -> Result<QuoAdjunctionReport> {
    let quo_t = quo_group(t)?;
    let group_homs = quo_t.group.homomorphisms_to(g);
    let sg = group_scheme(g);
    let admissible = morphism::enumerate_morphisms(t, &sg, true)?;
    let classes = morphism::alg_equivalence_classes(&admissible)?;
    let reps: Vec<&Morphism> = classes.iter().map(|c| &admissible[c[0]]).collect();

    let mut bijection = reps.len() == group_homs.len();
    let mut images: Vec<GroupHom> = Vec::new();
    for rep in &reps {
        let chi = quo_epsilon(g, &quo_t, rep)?;
        bijection &= group_homs.contains(&chi) && !images.contains(&chi);
        let back = quo_eta(t, g, &quo_t, &chi)?;
        bijection &= back.rel_map() == rep.rel_map();
        images.push(chi);
    }
    for chi in &group_homs {
        let phi = quo_eta(t, g, &quo_t, chi)?;
        let round = quo_epsilon(g, &quo_t, &phi)?;
        bijection &= round == *chi;
    }

    // naturality: S(chi) . eta(phi) . psi ~alg eta(chi . phi . Quo(psi))
    // for group endomorphisms chi of G and admissible endomorphisms psi of
    // T.
    let endos_t = match morphism::enumerate_morphisms(t, t, true) {
        Ok(ms) => ms,
        Err(Error::BudgetExceeded { .. }) => vec![Morphism::identity(t)],
        Err(e) => return Err(e),
    };
    let mut naturality = true;
    for chi in g.homomorphisms_to(g) {
        let s_chi = scheme_hom(g, g, &chi)?;
        for psi in &endos_t {
            let quo_psi = quo_hom(psi)?;
            for hom in &group_homs {
                let lhs = s_chi.compose(&quo_eta(t, g, &quo_t, hom)?.compose(psi)?)?;
                let composed_hom = chi.compose(hom)?.compose(&quo_psi)?;
                let rhs = quo_eta(t, g, &quo_t, &composed_hom)?;
                naturality &= lhs.rel_map() == rhs.rel_map();
            }
        }
    }

    // counit at the group G: Quo(S(G)) -> G is an isomorphism.
    let quo_sg = quo_group(&sg)?;
    let counit_map: Vec<usize> = (0..quo_sg.group.order())
        .map(|i| {
            // the class of g~ in the trivial-residue quotient is g itself
            let class = quo_sg.label[i];
            (0..g.order())
                .find(|&rel| quo_sg.projection.apply_rel(rel) == class)
                .expect("projection is surjective on relations")
        })
        .collect();
    let counit_is_group_isomorphism = GroupHom::new(&quo_sg.group, g, counit_map)
        .map(|h| h.is_bijective())
        .unwrap_or(false);

    // unit at the scheme T: eta(id_{Quo(T)}), with kernel the thin residue.
    let unit = quo_eta(t, &quo_t.group.clone(), &quo_t, &GroupHom::identity(&quo_t.group))?;
    let unit_kernel_is_thin_residue = unit.kernel().members() == quo_t.residue.members();
    let unit_representatives_are_isomorphisms = if t.is_thin() {
        // all representatives share the unit's relation map
        let s_quo = group_scheme(&quo_t.group);
        let all = morphism::enumerate_morphisms(t, &s_quo, true)?;
        Some(
            all.iter()
                .filter(|m| m.rel_map() == unit.rel_map())
                .all(Morphism::is_bijective),
        )
    } else {
        None
    };

    Ok(QuoAdjunctionReport {
        group_hom_count: group_homs.len(),
        admissible_class_count: reps.len(),
        bijection,
        naturality,
        counit_is_group_isomorphism,
        unit_kernel_is_thin_residue,
        unit_representatives_are_isomorphisms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relset::RelSet;

    fn k3() -> Scheme {
        Scheme::complete(3).unwrap()
    }

    #[test]
    fn rad_group_examples() {
        let s3 = group_scheme(&Group::symmetric3());
        let rad = rad_group(&s3);
        assert!(rad.group.is_isomorphic_to(&Group::symmetric3()));

        assert_eq!(rad_group(&k3()).group.order(), 1);

        let prod = group_scheme(&Group::cyclic(3)).direct_product(&k3());
        assert!(rad_group(&prod).group.is_isomorphic_to(&Group::cyclic(3)));
    }

    #[test]
    fn quo_group_examples() {
        let s3 = group_scheme(&Group::symmetric3());
        assert!(quo_group(&s3).unwrap().group.is_isomorphic_to(&Group::symmetric3()));
        assert_eq!(quo_group(&k3()).unwrap().group.order(), 1);
        let prod = group_scheme(&Group::cyclic(3)).direct_product(&k3());
        assert!(quo_group(&prod).unwrap().group.is_isomorphic_to(&Group::cyclic(3)));
    }

    #[test]
    fn rad_hom_of_sign_projection() {
        let s3 = group_scheme(&Group::symmetric3());
        let a3 = closed::closure(&s3, &RelSet::singleton(6, 3));
        let (_, pi) = closed::quotient(&s3, &a3).unwrap();
        let h = rad_hom(&pi).unwrap();
        assert_eq!(h.dom_order(), 6);
        assert_eq!(h.cod_order(), 2);
        // the sign homomorphism: kernel has 3 elements
        assert_eq!(h.map().iter().filter(|&&v| v == 0).count(), 3);
    }

    #[test]
    fn rad_hom_requires_admissibility() {
        let c3 = group_scheme(&Group::cyclic(3));
        let phi = Morphism::from_point_map(&c3, &k3(), vec![0, 1, 2]).unwrap();
        assert!(matches!(rad_hom(&phi), Err(Error::NotAdmissible { .. })));
    }

    #[test]
    fn quo_hom_of_product_projection() {
        let c3 = group_scheme(&Group::cyclic(3));
        let prod = c3.direct_product(&k3());
        let t = closed::closure(&prod, &RelSet::from_indices(6, [0, 1]));
        let (_, pi) = closed::quotient(&prod, &t).unwrap();
        let h = quo_hom(&pi).unwrap();
        assert!(h.is_bijective());
        assert_eq!(h.dom_order(), 3);
    }

    #[test]
    fn scheme_hom_of_sign() {
        let s3 = Group::symmetric3();
        let c2 = Group::cyclic(2);
        let sign = s3
            .homomorphisms_to(&c2)
            .into_iter()
            .find(|h| h.map().iter().any(|&v| v != 0))
            .unwrap();
        let phi = scheme_hom(&s3, &c2, &sign).unwrap();
        assert!(phi.is_admissible());
        assert!(phi.is_surjective());
    }

    #[test]
    fn rad_adjunction_small_cases() {
        let c2 = Group::cyclic(2);
        let r = check_rad_adjunction(&c2, &group_scheme(&c2)).unwrap();
        assert_eq!((r.group_hom_count, r.admissible_class_count), (2, 2));
        assert!(r.all_hold());

        let r = check_rad_adjunction(&c2, &k3()).unwrap();
        assert_eq!((r.group_hom_count, r.admissible_class_count), (1, 1));
        assert!(r.all_hold());

        let r = check_rad_adjunction(&Group::trivial(), &k3()).unwrap();
        assert_eq!((r.group_hom_count, r.admissible_class_count), (1, 1));
        assert!(r.all_hold());
    }

    #[test]
    fn quo_adjunction_small_cases() {
        let c2 = Group::cyclic(2);
        let r = check_quo_adjunction(&k3(), &c2).unwrap();
        assert_eq!((r.group_hom_count, r.admissible_class_count), (1, 1));
        assert!(r.all_hold());

        let c3 = Group::cyclic(3);
        let r = check_quo_adjunction(&group_scheme(&c3), &c3).unwrap();
        assert_eq!((r.group_hom_count, r.admissible_class_count), (3, 3));
        assert!(r.all_hold());

        let r = check_quo_adjunction(&Scheme::trivial(), &c3).unwrap();
        assert_eq!((r.group_hom_count, r.admissible_class_count), (1, 1));
        assert!(r.all_hold());
    }
}
