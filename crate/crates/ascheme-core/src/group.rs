//! Finite groups by Cayley table, and the thin scheme `S(G)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scheme::Scheme;

/// A finite group given by its Cayley table, with element 0 the identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl Group {
    /// Validates identity, associativity and inverses.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup { reason: "empty table" });
        }
        for row in rows {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::NotAGroup { reason: "table is not square over 0..n" });
            }
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        let mul = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            if mul(0, a) != a || mul(a, 0) != a {
                return Err(Error::NotAGroup { reason: "element 0 is not an identity" });
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| mul(a, b) == 0 && mul(b, a) == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(Error::NotAGroup { reason: "missing inverse" }),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAGroup { reason: "associativity fails" });
                    }
                }
            }
        }
        Ok(Group { order: n, table, inverse })
    }

    pub fn trivial() -> Group {
        Group::from_table(&[vec![0]]).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Group {
        let rows: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(&rows).expect("cyclic group")
    }

    /// Symmetric group on 3 letters; elements are the permutations of
    /// `[0,1,2]` in lexicographic order of their one-line notation, so the
    /// identity comes first.
    pub fn symmetric3() -> Group {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        // (a * b)(i) = a(b(i))
                        let c = [a[b[0]], a[b[1]], a[b[2]]];
                        index(&c)
                    })
                    .collect()
            })
            .collect();
        Group::from_table(&rows).expect("S3")
    }

    /// Dihedral group of order 8: element `2*i + j` is `r^i f^j` with
    /// `r^4 = f^2 = 1`, `f r = r^-1 f`.
    pub fn dihedral4() -> Group {
        let n = 8;
        let mul = |a: usize, b: usize| {
            let (i1, j1) = (a / 2, a % 2);
            let (i2, j2) = (b / 2, b % 2);
            // r^i1 f^j1 r^i2 f^j2 = r^(i1 - i2) f^(j1+j2) when j1 = 1
            let i = if j1 == 0 { (i1 + i2) % 4 } else { (i1 + 4 - i2) % 4 };
            2 * i + (j1 + j2) % 2
        };
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Group::from_table(&rows).expect("D4")
    }

    /// Quaternion group of order 8: elements 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion8() -> Group {
        // encode as pairs (unit, sign): 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
        let unit = |a: usize| a / 2;
        let sign = |a: usize| a % 2;
        // unit multiplication table with result sign: (u1, u2) -> (u, s)
        let utab: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let rows: Vec<Vec<usize>> = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (u, s) = utab[unit(a)][unit(b)];
                        2 * u + (s + sign(a) + sign(b)) % 2
                    })
                    .collect()
            })
            .collect();
        Group::from_table(&rows).expect("Q8")
    }

    /// Direct product, with element `(a, b)` indexed `a * other.order + b`.
    pub fn direct_product(&self, other: &Group) -> Group {
        let (n1, n2) = (self.order, other.order);
        let rows: Vec<Vec<usize>> = (0..n1 * n2)
            .map(|a| {
                (0..n1 * n2)
                    .map(|b| self.mul(a / n2, b / n2) * n2 + other.mul(a % n2, b % n2))
                    .collect()
            })
            .collect();
        Group::from_table(&rows).expect("product group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    /// All homomorphisms into `other`, by exhaustive map search.
    pub fn homomorphisms_to(&self, other: &Group) -> Vec<GroupHom> {
        let mut out = Vec::new();
        let mut map = vec![0usize; self.order];
        self.hom_search(other, &mut map, 1, &mut out);
        out
    }

    fn hom_search(&self, other: &Group, map: &mut Vec<usize>, at: usize, out: &mut Vec<GroupHom>) {
        if at == self.order {
            out.push(GroupHom {
                dom_order: self.order,
                cod_order: other.order,
                map: map.clone(),
            });
            return;
        }
        'candidate: for img in 0..other.order {
            map[at] = img;
            // check all products among the assigned prefix
            for a in 0..=at {
                for b in 0..=at {
                    let c = self.mul(a, b);
                    if c <= at && other.mul(map[a], map[b]) != map[c] {
                        continue 'candidate;
                    }
                }
            }
            self.hom_search(other, map, at + 1, out);
        }
        map[at] = 0;
    }

    /// Exhaustive isomorphism search; desk scale only.
    pub fn is_isomorphic_to(&self, other: &Group) -> bool {
        self.order == other.order
            && self
                .homomorphisms_to(other)
                .iter()
                .any(|h| h.is_bijective())
    }
}

/// A homomorphism between groups, checked at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupHom {
    dom_order: usize,
    cod_order: usize,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(dom: &Group, cod: &Group, map: Vec<usize>) -> Result<GroupHom> {
        if map.len() != dom.order() || map.iter().any(|&v| v >= cod.order()) {
            return Err(Error::NotAHomomorphism { g: 0, h: 0 });
        }
        for a in 0..dom.order() {
            for b in 0..dom.order() {
                if cod.mul(map[a], map[b]) != map[dom.mul(a, b)] {
                    return Err(Error::NotAHomomorphism { g: a, h: b });
                }
            }
        }
        Ok(GroupHom { dom_order: dom.order(), cod_order: cod.order(), map })
    }

    pub fn identity(g: &Group) -> GroupHom {
        GroupHom { dom_order: g.order(), cod_order: g.order(), map: (0..g.order()).collect() }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn dom_order(&self) -> usize {
        self.dom_order
    }

    pub fn cod_order(&self) -> usize {
        self.cod_order
    }

    pub fn is_bijective(&self) -> bool {
        self.dom_order == self.cod_order && {
            let mut seen = vec![false; self.cod_order];
            self.map.iter().for_each(|&v| seen[v] = true);
            seen.iter().all(|&b| b)
        }
    }

    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.cod_order != self.dom_order {
            return Err(Error::DomainMismatch);
        }
        Ok(GroupHom {
            dom_order: inner.dom_order,
            cod_order: self.cod_order,
            map: inner.map.iter().map(|&v| self.map[v]).collect(),
        })
    }
}

/// The thin scheme `S(G)` on the points of `G`, with `color[x][y]` the
/// unique `g` such that `y = x g`.
pub fn group_scheme(g: &Group) -> Scheme {
    let n = g.order();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| g.mul(g.inverse(x), y)).collect())
        .collect();
    Scheme::from_color_matrix(&rows).expect("group scheme is a valid scheme")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_groups_are_groups() {
        for g in [
            Group::trivial(),
            Group::cyclic(8),
            Group::symmetric3(),
            Group::dihedral4(),
            Group::quaternion8(),
            Group::cyclic(2).direct_product(&Group::cyclic(4)),
        ] {
            // from_table already validated; double-check round trip
            assert!(Group::from_table(&g.table_rows()).is_ok());
        }
        assert!(!Group::dihedral4().is_isomorphic_to(&Group::quaternion8()));
        assert!(!Group::cyclic(4).is_isomorphic_to(&Group::cyclic(2).direct_product(&Group::cyclic(2))));
        assert!(Group::cyclic(6).is_isomorphic_to(&Group::cyclic(2).direct_product(&Group::cyclic(3))));
    }

    #[test]
    fn trivial_group_scheme() {
        assert_eq!(group_scheme(&Group::trivial()), Scheme::trivial());
    }

    #[test]
    fn c3_scheme_matches() {
        let s = group_scheme(&Group::cyclic(3));
        assert_eq!(s.color(0, 1), 1);
        assert_eq!(s.sc(1, 1, 2), 1);
        assert!(s.is_thin());
    }

    #[test]
    fn s3_scheme_is_thin() {
        let s = group_scheme(&Group::symmetric3());
        assert_eq!((s.n(), s.rank()), (6, 6));
        assert!(s.is_thin());
    }

    #[test]
    fn hom_enumeration_counts() {
        let c2 = Group::cyclic(2);
        let c3 = Group::cyclic(3);
        assert_eq!(c2.homomorphisms_to(&c2).len(), 2);
        assert_eq!(c2.homomorphisms_to(&c3).len(), 1);
        assert_eq!(c3.homomorphisms_to(&c3).len(), 3);
        // S3 -> C2: trivial and sign
        assert_eq!(Group::symmetric3().homomorphisms_to(&c2).len(), 2);
        // endomorphisms of S3: 1 trivial + 3 onto C2-like + 6 inner = 10
        let s3 = Group::symmetric3();
        assert_eq!(s3.homomorphisms_to(&s3).len(), 10);
    }

    #[test]
    fn hom_rejects_non_hom() {
        let c4 = Group::cyclic(4);
        let c2 = Group::cyclic(2);
        assert!(GroupHom::new(&c4, &c2, vec![0, 1, 0, 1]).is_ok());
        assert!(GroupHom::new(&c4, &c2, vec![0, 1, 1, 0]).is_err());
    }
}
