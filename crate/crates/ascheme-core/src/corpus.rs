//! The standard test corpus: a deterministic family of small schemes and
//! groups closed under quotients and point-0 subschemes, used by the
//! acceptance suite and the CLI selftest.

use alloc::vec::Vec;

use crate::closed;
use crate::group::{group_scheme, Group};
use crate::scheme::Scheme;

/// One group per isomorphism class of order at most 8.
pub fn small_groups() -> Vec<Group> {
    let c = Group::cyclic;
    let mut out = Vec::new();
    out.extend((1..=8).map(c));
    out.push(c(2).direct_product(&c(2))); // Klein four
    out.push(c(2).direct_product(&c(4)));
    out.push(c(2).direct_product(&c(2)).direct_product(&c(2)));
    out.push(Group::symmetric3());
    out.push(Group::dihedral4());
    out.push(Group::quaternion8());
    out
}

/// The named base schemes: trivial, complete on 2..=6 points, group
/// schemes of every group of order at most 8, and the pairwise direct
/// products of the 3-point thin scheme, the complete 3-point scheme and
/// the 2-point thin scheme.
pub fn base_schemes() -> Vec<Scheme> {
    let mut out = Vec::new();
    out.push(Scheme::trivial());
    for n in 2..=6 {
        out.push(Scheme::complete(n).expect("n >= 1"));
    }
    for g in small_groups() {
        out.push(group_scheme(&g));
    }
    let factors = [
        group_scheme(&Group::cyclic(3)),
        Scheme::complete(3).expect("3 points"),
        group_scheme(&Group::cyclic(2)),
    ];
    for a in &factors {
        for b in &factors {
            out.push(a.direct_product(b));
        }
    }
    dedupe(out)
}

/// The full corpus: the base schemes together with every quotient by a
/// normal closed subset and every subscheme at point 0, deduplicated by
/// exact equality. Deterministic: construction order is fixed and
/// duplicates keep their first occurrence.
pub fn corpus() -> Vec<Scheme> {
    let base = base_schemes();
    let mut out = base.clone();
    for s in &base {
        let subsets = closed::enumerate_closed_subsets(s)
            .expect("corpus ranks are within the enumeration bound");
        for t in &subsets {
            if t.is_normal() {
                let (q, _) = closed::quotient(s, t).expect("quotient of valid scheme");
                out.push(q);
            }
            let (sub, _) = closed::subscheme(s, t, 0).expect("subscheme at point 0");
            out.push(sub);
        }
    }
    dedupe(out)
}

fn dedupe(schemes: Vec<Scheme>) -> Vec<Scheme> {
    let mut out: Vec<Scheme> = Vec::new();
    for s in schemes {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}
