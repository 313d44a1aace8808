//! Morphisms of schemes, admissibility, and the first isomorphism theorem.

use alloc::vec;
use alloc::vec::Vec;

use crate::closed::{self, ClosedSubset};
use crate::error::{Error, Result};
use crate::relset::RelSet;
use crate::scheme::Scheme;

/// Default budget on raw point-map candidates for morphism enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 10_000_000;

/// A morphism of schemes, induced from a point map. The relation map and
/// admissibility status are decided eagerly at construction; the first
/// admissibility counterexample is kept for diagnostics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    dom: Scheme,
    cod: Scheme,
    point_map: Vec<usize>,
    rel_map: Vec<usize>,
    /// `None` when admissible, otherwise an `(x, y, s)` witness with
    /// `(phi(x), y) in phi(s)` but no preimage of `y` in `x s`.
    witness: Option<(usize, usize, usize)>,
}

impl Morphism {
    /// Induces the relation map from a point map, verifying
    /// well-definedness over all point pairs.
    pub fn from_point_map(dom: &Scheme, cod: &Scheme, point_map: Vec<usize>) -> Result<Morphism> {
        if point_map.len() != dom.n() {
            return Err(Error::IndexOutOfRange { index: point_map.len(), bound: dom.n() });
        }
        if let Some(&bad) = point_map.iter().find(|&&y| y >= cod.n()) {
            return Err(Error::IndexOutOfRange { index: bad, bound: cod.n() });
        }
        let d = dom.rank();
        let mut rel_map = vec![usize::MAX; d];
        let mut first_pair = vec![(0usize, 0usize); d];
        for x1 in 0..dom.n() {
            for x2 in 0..dom.n() {
                let s = dom.color(x1, x2);
                let t = cod.color(point_map[x1], point_map[x2]);
                if rel_map[s] == usize::MAX {
                    rel_map[s] = t;
                    first_pair[s] = (x1, x2);
                } else if rel_map[s] != t {
                    return Err(Error::NotAMorphism { pair_a: first_pair[s], pair_b: (x1, x2) });
                }
            }
        }
        let witness = admissibility_witness(dom, cod, &point_map, &rel_map);
        Ok(Morphism { dom: dom.clone(), cod: cod.clone(), point_map, rel_map, witness })
    }

    pub fn identity(s: &Scheme) -> Morphism {
        Morphism::from_point_map(s, s, (0..s.n()).collect()).expect("identity is a morphism")
    }

    pub fn dom(&self) -> &Scheme {
        &self.dom
    }

    pub fn cod(&self) -> &Scheme {
        &self.cod
    }

    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }

    pub fn rel_map(&self) -> &[usize] {
        &self.rel_map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.point_map[x]
    }

    pub fn apply_rel(&self, s: usize) -> usize {
        self.rel_map[s]
    }

    pub fn is_admissible(&self) -> bool {
        self.witness.is_none()
    }

    /// The `(x, y, s)` counterexample when not admissible.
    pub fn admissibility_witness(&self) -> Option<(usize, usize, usize)> {
        self.witness
    }

    pub fn require_admissible(&self) -> Result<()> {
        match self.witness {
            None => Ok(()),
            Some(w) => Err(Error::NotAdmissible { witness: w }),
        }
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen_pt = vec![false; self.cod.n()];
        self.point_map.iter().for_each(|&y| seen_pt[y] = true);
        let mut seen_rel = vec![false; self.cod.rank()];
        self.rel_map.iter().for_each(|&t| seen_rel[t] = true);
        self.dom.n() == self.cod.n()
            && self.dom.rank() == self.cod.rank()
            && seen_pt.iter().all(|&b| b)
            && seen_rel.iter().all(|&b| b)
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.n()];
        self.point_map.iter().for_each(|&y| seen[y] = true);
        seen.iter().all(|&b| b)
    }

    /// `self` after `inner`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if inner.cod != self.dom {
            return Err(Error::DomainMismatch);
        }
        let map: Vec<usize> = inner.point_map.iter().map(|&y| self.point_map[y]).collect();
        let composed = Morphism::from_point_map(&inner.dom, &self.cod, map)?;
        if inner.is_admissible() && self.is_admissible() && !composed.is_admissible() {
            return Err(Error::InternalInconsistency(
                "composition of admissible morphisms must be admissible",
            ));
        }
        Ok(composed)
    }

    /// `ker phi = {s : phi(s) = 1}`; normal for admissible morphisms.
    pub fn kernel(&self) -> ClosedSubset {
        let members = RelSet::from_indices(
            self.dom.rank(),
            (0..self.dom.rank()).filter(|&s| self.rel_map[s] == 0),
        );
        let k = ClosedSubset::new(&self.dom, members).expect("kernel is closed");
        debug_assert!(!self.is_admissible() || k.is_normal());
        k
    }

    /// Relative valency `n_s^phi = a_{sK}^s`, cross-checked against
    /// `n_s / n_{phi(s)}` and against a direct fiber count.
    pub fn relative_valency(&self, s: usize) -> Result<usize> {
        self.require_admissible()?;
        if s >= self.dom.rank() {
            return Err(Error::IndexOutOfRange { index: s, bound: self.dom.rank() });
        }
        let k = self.kernel();
        let a_sk_s: usize = k.members().iter().map(|t| self.dom.sc(s, t, s)).sum();

        let (ns, nphis) = (self.dom.valency(s), self.cod.valency(self.rel_map[s]));
        if ns % nphis != 0 || ns / nphis != a_sk_s {
            return Err(Error::InternalInconsistency("relative valency formulas disagree"));
        }

        // direct fiber count for one witness (x0 = 0, first y)
        let x0 = 0;
        let y = self
            .cod
            .neighbors(self.point_map[x0], self.rel_map[s])
            .next()
            .expect("relations are nonempty");
        let fiber = (0..self.dom.n())
            .filter(|&x| self.point_map[x] == y && self.dom.color(x0, x) == s)
            .count();
        if fiber != a_sk_s {
            return Err(Error::InternalInconsistency("relative valency fiber count disagrees"));
        }
        Ok(a_sk_s)
    }

    /// The image subscheme on the coset `phi(X)` of `phi(S)`, with the
    /// corestriction onto it and the admissible inclusion back into the
    /// codomain.
    pub fn image(&self) -> Result<(Scheme, Morphism, Morphism)> {
        self.require_admissible()?;
        let u = RelSet::from_indices(self.cod.rank(), self.rel_map.iter().copied());
        let u = ClosedSubset::new(&self.cod, u)
            .map_err(|_| Error::InternalInconsistency("image of admissible morphism not closed"))?;
        let (im, inclusion) = closed::subscheme(&self.cod, &u, self.point_map[0])?;
        let position = |y: usize| {
            inclusion
                .point_map()
                .iter()
                .position(|&p| p == y)
                .expect("image point lies in the image coset")
        };
        let corestriction = Morphism::from_point_map(
            &self.dom,
            &im,
            self.point_map.iter().map(|&y| position(y)).collect(),
        )?;
        Ok((im, corestriction, inclusion))
    }

    /// First isomorphism theorem factorization
    /// `phi = iota . phibar . pi_K`, with `phibar` a verified isomorphism
    /// from `dom // ker phi` onto the image.
    pub fn factorize(&self) -> Result<(Morphism, Morphism, Morphism)> {
        self.require_admissible()?;
        let k = self.kernel();
        let (quot, pi) = closed::quotient(&self.dom, &k)?;
        let (im, corestriction, inclusion) = self.image()?;
        // phibar(xK) = phi(x), via the least representative of each block
        let mut rep = vec![usize::MAX; quot.n()];
        for x in 0..self.dom.n() {
            let b = pi.apply(x);
            if rep[b] == usize::MAX {
                rep[b] = x;
            }
        }
        let phibar = Morphism::from_point_map(
            &quot,
            &im,
            rep.iter().map(|&x| corestriction.apply(x)).collect(),
        )?;
        if !phibar.is_bijective() || !phibar.is_admissible() {
            return Err(Error::InternalInconsistency("induced map is not an isomorphism"));
        }
        let recomposed = inclusion.compose(&phibar.compose(&pi)?)?;
        if recomposed.point_map() != self.point_map {
            return Err(Error::InternalInconsistency("factorization does not recompose"));
        }
        Ok((pi, phibar, inclusion))
    }

    /// The unique morphism on quotients making the square with the two
    /// projections commute, for normal closed subsets with
    /// `phi(S') <= T'`.
    pub fn induced_quotient_morphism(
        &self,
        dom_sub: &ClosedSubset,
        cod_sub: &ClosedSubset,
    ) -> Result<Morphism> {
        self.require_admissible()?;
        if !dom_sub.is_normal() || !cod_sub.is_normal() {
            return Err(Error::NotNormal);
        }
        let image = RelSet::from_indices(
            self.cod.rank(),
            dom_sub.members().iter().map(|s| self.rel_map[s]),
        );
        if !image.is_subset(cod_sub.members()) {
            return Err(Error::ImageNotContained);
        }
        let (qdom, pi_dom) = closed::quotient(&self.dom, dom_sub)?;
        let (qcod, pi_cod) = closed::quotient(&self.cod, cod_sub)?;
        let mut map = vec![usize::MAX; qdom.n()];
        for x in 0..self.dom.n() {
            let b = pi_dom.apply(x);
            let target = pi_cod.apply(self.point_map[x]);
            if map[b] == usize::MAX {
                map[b] = target;
            } else if map[b] != target {
                return Err(Error::InternalInconsistency(
                    "induced quotient morphism is not well-defined",
                ));
            }
        }
        let induced = Morphism::from_point_map(&qdom, &qcod, map)?;
        induced.require_admissible()?;
        // commuting square: induced . pi_dom = pi_cod . phi
        let left = induced.compose(&pi_dom)?;
        let right = pi_cod.compose(self)?;
        if left.point_map() != right.point_map() {
            return Err(Error::InternalInconsistency("quotient square does not commute"));
        }
        Ok(induced)
    }
}

fn admissibility_witness(
    dom: &Scheme,
    cod: &Scheme,
    point_map: &[usize],
    rel_map: &[usize],
) -> Option<(usize, usize, usize)> {
    for x in 0..dom.n() {
        for s in 0..dom.rank() {
            let t = rel_map[s];
            'targets: for y in cod.neighbors(point_map[x], t) {
                for xp in dom.neighbors(x, s) {
                    if point_map[xp] == y {
                        continue 'targets;
                    }
                }
                return Some((x, y, s));
            }
        }
    }
    None
}

/// The diagonal morphism `S -> S (x) S`, `x -> (x, x)`; admissible exactly
/// when `S` is thin.
pub fn diagonal(s: &Scheme) -> Morphism {
    let prod = s.direct_product(s);
    let map = (0..s.n()).map(|x| x * s.n() + x).collect();
    Morphism::from_point_map(s, &prod, map).expect("diagonal is a morphism")
}

/// Product morphism `phi (x) psi` between the direct product schemes.
pub fn product_morphism(phi: &Morphism, psi: &Morphism) -> Morphism {
    let dom = phi.dom().direct_product(psi.dom());
    let cod = phi.cod().direct_product(psi.cod());
    let (n2, m2) = (psi.dom().n(), psi.cod().n());
    let map = (0..dom.n())
        .map(|x| phi.apply(x / n2) * m2 + psi.apply(x % n2))
        .collect();
    Morphism::from_point_map(&dom, &cod, map).expect("product of morphisms is a morphism")
}

/// All point maps from `dom` to `cod` that induce morphisms, in
/// lexicographic point-map order, by depth-first search with prefix
/// pruning. Refuses when the raw candidate count exceeds the budget.
pub fn enumerate_morphisms(
    dom: &Scheme,
    cod: &Scheme,
    admissible_only: bool,
) -> Result<Vec<Morphism>> {
    enumerate_morphisms_with_budget(dom, cod, admissible_only, DEFAULT_ENUMERATION_BUDGET)
}

pub fn enumerate_morphisms_with_budget(
    dom: &Scheme,
    cod: &Scheme,
    admissible_only: bool,
    budget: u128,
) -> Result<Vec<Morphism>> {
    let mut candidates: u128 = 1;
    for _ in 0..dom.n() {
        candidates = candidates.saturating_mul(cod.n() as u128);
        if candidates > budget {
            return Err(Error::BudgetExceeded { candidates, budget });
        }
    }
    let mut out = Vec::new();
    let mut map = vec![0usize; dom.n()];
    let mut rel_map = vec![usize::MAX; dom.rank()];
    search(dom, cod, admissible_only, &mut map, &mut rel_map, 0, &mut out);
    Ok(out)
}

fn search(
    dom: &Scheme,
    cod: &Scheme,
    admissible_only: bool,
    map: &mut Vec<usize>,
    rel_map: &mut Vec<usize>,
    at: usize,
    out: &mut Vec<Morphism>,
) {
    if at == dom.n() {
        let m = Morphism::from_point_map(dom, cod, map.clone())
            .expect("prefix pruning only admits morphisms");
        if !admissible_only || m.is_admissible() {
            out.push(m);
        }
        return;
    }
    'candidate: for img in 0..cod.n() {
        map[at] = img;
        let mut assigned: Vec<usize> = Vec::new();
        for prev in 0..=at {
            for (a, b) in [(prev, at), (at, prev)] {
                let s = dom.color(a, b);
                let t = cod.color(map[a], map[b]);
                if rel_map[s] == usize::MAX {
                    rel_map[s] = t;
                    assigned.push(s);
                } else if rel_map[s] != t {
                    for &s in &assigned {
                        rel_map[s] = usize::MAX;
                    }
                    continue 'candidate;
                }
            }
        }
        search(dom, cod, admissible_only, map, rel_map, at + 1, out);
        for &s in &assigned {
            rel_map[s] = usize::MAX;
        }
    }
}

/// Partition of morphisms (sharing domain and codomain) by equal relation
/// map. Returns classes of indices into the input; each class is ordered
/// with its lexicographically least point map first, and classes are
/// ordered by their representatives.
pub fn alg_equivalence_classes(ms: &[Morphism]) -> Result<Vec<Vec<usize>>> {
    if let Some(first) = ms.first() {
        if ms.iter().any(|m| m.dom() != first.dom() || m.cod() != first.cod()) {
            return Err(Error::MixedSignatures);
        }
    }
    let mut order: Vec<usize> = (0..ms.len()).collect();
    order.sort_by(|&a, &b| ms[a].point_map().cmp(ms[b].point_map()));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match classes.iter_mut().find(|c| ms[c[0]].rel_map() == ms[i].rel_map()) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    Ok(classes)
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

    /// The point-identity morphism from the C3 scheme onto the complete
    /// scheme on 3 points: a morphism, but not admissible.
    fn collapse_c3_to_k3() -> Morphism {
        Morphism::from_point_map(&c3(), &k3(), vec![0, 1, 2]).unwrap()
    }

    #[test]
    fn identity_is_admissible() {
        let id = Morphism::identity(&c3());
        assert!(id.is_admissible());
        assert_eq!(id.rel_map(), &[0, 1, 2]);
    }

    #[test]
    fn thin_to_rank2_collapse_is_not_admissible() {
        let phi = collapse_c3_to_k3();
        assert_eq!(phi.rel_map(), &[0, 1, 1]);
        assert!(!phi.is_admissible());
        let (x, y, s) = phi.admissibility_witness().unwrap();
        // the witness is genuine: (phi(x), y) in phi(s) with no preimage
        assert_eq!(phi.cod().color(phi.apply(x), y), phi.apply_rel(s));
        assert!((0..3).all(|xp| phi.apply(xp) != y || phi.dom().color(x, xp) != s));
    }

    #[test]
    fn constant_map_to_trivial_is_admissible() {
        let s3 = group_scheme(&Group::symmetric3());
        let phi = Morphism::from_point_map(&s3, &Scheme::trivial(), vec![0; 6]).unwrap();
        assert!(phi.is_admissible());
    }

    #[test]
    fn non_morphism_is_rejected() {
        // collapsing two of three points of C3 does not induce a relation map
        let err = Morphism::from_point_map(&c3(), &c3(), vec![0, 0, 1]).unwrap_err();
        assert!(matches!(err, Error::NotAMorphism { .. }));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Morphism::identity(&c3()).kernel().indices(), vec![0]);
        let s3 = group_scheme(&Group::symmetric3());
        let a3 = closed::closure(&s3, &RelSet::singleton(6, 3));
        let (_, pi) = closed::quotient(&s3, &a3).unwrap();
        assert_eq!(pi.kernel().indices(), a3.indices());
    }

    #[test]
    fn relative_valency_examples() {
        let id = Morphism::identity(&c3());
        assert_eq!(id.relative_valency(1).unwrap(), 1);

        let prod = c3().direct_product(&k3());
        let t = closed::closure(&prod, &RelSet::from_indices(6, [0, 1]));
        let (q, pi) = closed::quotient(&prod, &t).unwrap();
        assert_eq!(q.n(), 3);
        // s = [1,1] has valency 2 and thin image
        assert_eq!(pi.relative_valency(1 * 2 + 1).unwrap(), 2);

        let s3 = group_scheme(&Group::symmetric3());
        let a3 = closed::closure(&s3, &RelSet::singleton(6, 3));
        let (_, pi3) = closed::quotient(&s3, &a3).unwrap();
        for s in 0..6 {
            assert_eq!(pi3.relative_valency(s).unwrap(), 1);
        }

        assert!(collapse_c3_to_k3().relative_valency(1).is_err());
    }

    #[test]
    fn image_examples() {
        let s3 = group_scheme(&Group::symmetric3());
        let a3 = closed::closure(&s3, &RelSet::singleton(6, 3));
        let (_, pi) = closed::quotient(&s3, &a3).unwrap();
        let (im, corest, _) = pi.image().unwrap();
        assert_eq!(im.n(), 2); // surjective: image is the whole codomain
        assert!(corest.is_surjective());

        let (sub, incl) = closed::subscheme(&s3, &a3, 0).unwrap();
        let (im2, _, _) = incl.image().unwrap();
        assert_eq!(im2, sub);
    }

    #[test]
    fn factorization_examples() {
        // an isomorphism factors with trivial kernel
        let id = Morphism::identity(&c3());
        let (pi, phibar, iota) = id.factorize().unwrap();
        assert_eq!(pi.kernel().indices(), vec![0]);
        assert!(phibar.is_bijective() && iota.is_bijective());

        let prod = c3().direct_product(&k3());
        let t = closed::closure(&prod, &RelSet::from_indices(6, [0, 1]));
        let (_, pi) = closed::quotient(&prod, &t).unwrap();
        let (_, phibar, _) = pi.factorize().unwrap();
        assert!(phibar.is_bijective());

        assert!(collapse_c3_to_k3().factorize().is_err());
    }

    #[test]
    fn induced_quotient_morphism_examples() {
        let s3 = group_scheme(&Group::symmetric3());
        let id = Morphism::identity(&s3);
        let a3 = closed::closure(&s3, &RelSet::singleton(6, 3));
        let induced = id.induced_quotient_morphism(&a3, &a3).unwrap();
        assert_eq!(induced.dom().n(), 2);
        assert!(induced.is_bijective());
    }

    #[test]
    fn enumeration_examples() {
        // Hom(trivial, T): one per point of T, all admissible
        let k3 = k3();
        let ms = enumerate_morphisms(&Scheme::trivial(), &k3, false).unwrap();
        assert_eq!(ms.len(), 3);
        assert!(ms.iter().all(Morphism::is_admissible));

        // morphisms C3 -> K3 exist but none are admissible
        let all = enumerate_morphisms(&c3(), &k3, false).unwrap();
        let adm = enumerate_morphisms(&c3(), &k3, true).unwrap();
        assert!(!all.is_empty());
        // only the constant maps survive the admissibility filter
        assert!(adm.iter().all(|m| m.point_map().windows(2).all(|w| w[0] == w[1])));
        // the collapse morphism is found but filtered out
        assert!(all.iter().any(|m| m.point_map() == [0, 1, 2]));
        assert!(!adm.iter().any(|m| m.point_map() == [0, 1, 2]));

        // |Hom_adm(S(C2), S(C2))| = 4, falling into 2 algebraic classes
        let sc2 = group_scheme(&Group::cyclic(2));
        let adm2 = enumerate_morphisms(&sc2, &sc2, true).unwrap();
        assert_eq!(adm2.len(), 4);
        let classes = alg_equivalence_classes(&adm2).unwrap();
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn budget_guard() {
        let s3 = group_scheme(&Group::symmetric3());
        let err = enumerate_morphisms_with_budget(&s3, &s3, true, 1000).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn diagonal_admissibility_matches_thinness() {
        assert!(diagonal(&c3()).is_admissible());
        assert!(!diagonal(&k3()).is_admissible());
        assert!(diagonal(&Scheme::trivial()).is_admissible());
    }

    #[test]
    fn composition_preserves_admissibility() {
        let s3 = group_scheme(&Group::symmetric3());
        let a3 = closed::closure(&s3, &RelSet::singleton(6, 3));
        let (_, pi) = closed::quotient(&s3, &a3).unwrap();
        let composed = pi.compose(&Morphism::identity(&s3)).unwrap();
        assert_eq!(composed.point_map(), pi.point_map());
        assert!(composed.is_admissible());
    }
}
