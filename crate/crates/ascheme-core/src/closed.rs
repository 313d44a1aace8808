//! Complex products, closed subsets, cosets, subschemes and quotients.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::relset::RelSet;
use crate::scheme::Scheme;

/// Rank bound for exhaustive closed-subset enumeration.
pub const ENUMERATION_RANK_BOUND: usize = 16;

/// A closed subset of relations, with normality flags computed at
/// construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedSubset {
    members: RelSet,
    is_normal: bool,
    is_strongly_normal: bool,
}

impl ClosedSubset {
    /// Wraps a relation set after verifying it is closed.
    pub fn new(scheme: &Scheme, members: RelSet) -> Result<ClosedSubset> {
        if !is_closed(scheme, &members) {
            return Err(Error::NotClosed);
        }
        Ok(ClosedSubset {
            is_normal: is_normal(scheme, &members),
            is_strongly_normal: is_strongly_normal(scheme, &members),
            members,
        })
    }

    pub fn members(&self) -> &RelSet {
        &self.members
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn is_strongly_normal(&self) -> bool {
        self.is_strongly_normal
    }

    /// Number of points in each geometric coset.
    pub fn coset_size(&self, scheme: &Scheme) -> usize {
        self.members.iter().map(|t| scheme.valency(t)).sum()
    }
}

/// Complex product `PQ = {r : a_{pq}^r > 0 for some p in P, q in Q}`.
pub fn complex_product(scheme: &Scheme, p: &RelSet, q: &RelSet) -> RelSet {
    let d = scheme.rank();
    let mut out = RelSet::empty(d);
    for a in p.iter() {
        for b in q.iter() {
            for r in 0..d {
                if scheme.sc(a, b, r) > 0 {
                    out.insert(r);
                }
            }
        }
    }
    out
}

pub fn is_closed(scheme: &Scheme, t: &RelSet) -> bool {
    !t.is_empty() && complex_product(scheme, t, t) == *t
}

/// `pT = Tp` for every relation `p`.
pub fn is_normal(scheme: &Scheme, t: &RelSet) -> bool {
    let d = scheme.rank();
    (0..d).all(|p| {
        let ps = RelSet::singleton(d, p);
        complex_product(scheme, &ps, t) == complex_product(scheme, t, &ps)
    })
}

/// `p* T p = T` for every relation `p`.
pub fn is_strongly_normal(scheme: &Scheme, t: &RelSet) -> bool {
    let d = scheme.rank();
    (0..d).all(|p| {
        let ps = RelSet::singleton(d, p);
        let star = RelSet::singleton(d, scheme.star(p));
        complex_product(scheme, &complex_product(scheme, &star, t), &ps) == *t
    })
}

/// Smallest closed subset containing `r`, its stars, and the identity;
/// computed by fixpoint iteration of complex products.
pub fn closure(scheme: &Scheme, r: &RelSet) -> ClosedSubset {
    let d = scheme.rank();
    let mut t = RelSet::singleton(d, 0);
    t.union_with(r);
    for s in r.iter() {
        t.insert(scheme.star(s));
    }
    loop {
        let mut next = complex_product(scheme, &t, &t);
        next.union_with(&t);
        for s in next.clone().iter() {
            next.insert(scheme.star(s));
        }
        if next == t {
            break;
        }
        t = next;
    }
    ClosedSubset::new(scheme, t).expect("fixpoint of complex product is closed")
}

/// Geometric cosets `xT` as a partition of the points, blocks ordered by
/// least member and members ascending.
pub fn geometric_cosets(scheme: &Scheme, t: &ClosedSubset) -> Vec<Vec<usize>> {
    let n = scheme.n();
    let mut block_of = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for x in 0..n {
        if block_of[x] != usize::MAX {
            continue;
        }
        let block: Vec<usize> =
            (0..n).filter(|&y| t.members().contains(scheme.color(x, y))).collect();
        for &y in &block {
            block_of[y] = blocks.len();
        }
        blocks.push(block);
    }
    blocks
}

/// The subscheme on the coset `xT`, together with the admissible inclusion
/// morphism into `scheme`. Relations are the nonempty restrictions of the
/// members of `T`, renumbered in increasing original index.
pub fn subscheme(scheme: &Scheme, t: &ClosedSubset, x: usize) -> Result<(Scheme, Morphism)> {
    if x >= scheme.n() {
        return Err(Error::IndexOutOfRange { index: x, bound: scheme.n() });
    }
    let points: Vec<usize> =
        (0..scheme.n()).filter(|&y| t.members().contains(scheme.color(x, y))).collect();
    let mut occurring: Vec<usize> = Vec::new();
    for &a in &points {
        for &b in &points {
            let c = scheme.color(a, b);
            if !occurring.contains(&c) {
                occurring.push(c);
            }
        }
    }
    occurring.sort_unstable();
    let relabel = |c: usize| occurring.iter().position(|&o| o == c).unwrap();
    let rows: Vec<Vec<usize>> = points
        .iter()
        .map(|&a| points.iter().map(|&b| relabel(scheme.color(a, b))).collect())
        .collect();
    let sub = Scheme::from_color_matrix(&rows)?;
    let inclusion = Morphism::from_point_map(&sub, scheme, points)?;
    Ok((sub, inclusion))
}

/// The quotient scheme `S//T` on the geometric cosets, with the projection
/// morphism. Quotient relations are the classes of `TsT`, numbered by least
/// representative, so the identity class is relation 0. The projection is
/// admissible exactly when `T` is normal.
pub fn quotient(scheme: &Scheme, t: &ClosedSubset) -> Result<(Scheme, Morphism)> {
    let d = scheme.rank();
    let blocks = geometric_cosets(scheme, t);
    let mut block_of = vec![0usize; scheme.n()];
    for (i, block) in blocks.iter().enumerate() {
        for &x in block {
            block_of[x] = i;
        }
    }
    // p^T = q^T iff TpT = TqT
    let mut class_reps: Vec<RelSet> = Vec::new();
    let mut class_of = vec![0usize; d];
    for s in 0..d {
        let tst = complex_product(
            scheme,
            &complex_product(scheme, t.members(), &RelSet::singleton(d, s)),
            t.members(),
        );
        class_of[s] = match class_reps.iter().position(|r| *r == tst) {
            Some(i) => i,
            None => {
                class_reps.push(tst);
                class_reps.len() - 1
            }
        };
    }
    let rows: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b1| blocks.iter().map(|b2| class_of[scheme.color(b1[0], b2[0])]).collect())
        .collect();
    let quot = Scheme::from_color_matrix(&rows)?;
    let projection = Morphism::from_point_map(scheme, &quot, block_of)?;
    Ok((quot, projection))
}

/// The closed subset of thin relations.
pub fn thin_radical(scheme: &Scheme) -> ClosedSubset {
    let d = scheme.rank();
    let members = RelSet::from_indices(d, (0..d).filter(|&s| scheme.valency(s) == 1));
    ClosedSubset::new(scheme, members).expect("thin radical is closed")
}

/// The thin residue: the smallest strongly normal closed subset.
///
/// Computed as the closure of the union of the sets `s* s`. When the rank
/// permits exhaustive enumeration, the result is cross-checked against the
/// intersection of all strongly normal closed subsets; disagreement is a
/// library bug.
pub fn thin_residue(scheme: &Scheme) -> Result<ClosedSubset> {
    let d = scheme.rank();
    let mut seed = RelSet::empty(d);
    for s in 0..d {
        let single = RelSet::singleton(d, s);
        let star = RelSet::singleton(d, scheme.star(s));
        seed.union_with(&complex_product(scheme, &star, &single));
    }
    let result = closure(scheme, &seed);
    if d <= ENUMERATION_RANK_BOUND {
        let mut minimal = RelSet::full(d);
        for c in enumerate_closed_subsets(scheme)? {
            if c.is_strongly_normal() {
                minimal.intersect_with(c.members());
            }
        }
        if minimal != *result.members() {
            return Err(Error::InternalInconsistency(
                "thin residue: closure of union of s*s differs from minimal strongly normal subset",
            ));
        }
    }
    Ok(result)
}

/// All closed subsets, by closing every subset of relations containing 0
/// and deduplicating. Every closed subset is its own closure, so the sweep
/// is complete. Results are sorted.
pub fn enumerate_closed_subsets(scheme: &Scheme) -> Result<Vec<ClosedSubset>> {
    let d = scheme.rank();
    if d > ENUMERATION_RANK_BOUND {
        return Err(Error::RankTooLarge { rank: d, bound: ENUMERATION_RANK_BOUND });
    }
    let mut found: Vec<RelSet> = Vec::new();
    for mask in 0..(1u32 << d) {
        let seed = RelSet::from_indices(d, (0..d).filter(|&i| mask >> i & 1 == 1));
        let closed = closure(scheme, &seed);
        if !found.contains(closed.members()) {
            found.push(closed.members().clone());
        }
    }
    found.sort();
    found
        .into_iter()
        .map(|m| ClosedSubset::new(scheme, m))
        .collect()
}
