//! Association schemes as validated color matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite association scheme on points `0..n`.
///
/// Relations are indices `0..d`, with relation `0` reserved for the
/// identity relation. The structure-constant tensor, involution and
/// valencies are computed once at construction by direct counting and the
/// value is immutable afterwards.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scheme {
    n: usize,
    d: usize,
    color: Vec<usize>,
    /// Flat `d*d*d` tensor, `[p][q][r]` at `(p*d + q)*d + r`.
    p: Vec<usize>,
    star: Vec<usize>,
    valency: Vec<usize>,
}

impl Scheme {
    /// Validates the four scheme axioms on a color matrix and computes the
    /// derived data. Relation `0` must be the identity relation; matrices
    /// with a different identity color are rejected, not relabeled.
    pub fn from_color_matrix(rows: &[Vec<usize>]) -> Result<Scheme> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NonSquareInput { rows: 0, cols: 0 });
        }
        for row in rows {
            if row.len() != n {
                return Err(Error::NonSquareInput { rows: n, cols: row.len() });
            }
        }
        let d = 1 + rows.iter().flatten().copied().max().unwrap_or(0);
        let color: Vec<usize> = rows.iter().flatten().copied().collect();
        let at = |x: usize, y: usize| color[x * n + y];

        // Axiom 2: relation 0 is the diagonal.
        for x in 0..n {
            if at(x, x) != 0 {
                return Err(Error::AxiomViolation { axiom: 2, witness: (x, x, 0) });
            }
            for y in 0..n {
                if x != y && at(x, y) == 0 {
                    return Err(Error::AxiomViolation { axiom: 2, witness: (x, y, 0) });
                }
            }
        }

        // Axiom 1: every relation index occurs (S partitions X x X into
        // nonempty cells; the matrix form already forces disjoint cover).
        let mut seen = vec![false; d];
        for &c in &color {
            seen[c] = true;
        }
        if let Some(s) = seen.iter().position(|&b| !b) {
            return Err(Error::AxiomViolation { axiom: 1, witness: (s, 0, 0) });
        }

        // Axiom 3: transposition permutes relations.
        let mut star = vec![usize::MAX; d];
        for x in 0..n {
            for y in 0..n {
                let s = at(x, y);
                let t = at(y, x);
                if star[s] == usize::MAX {
                    star[s] = t;
                } else if star[s] != t {
                    return Err(Error::AxiomViolation { axiom: 3, witness: (x, y, s) });
                }
            }
        }

        // Axiom 4: path counts depend only on the relation of (x, z).
        // Counts are taken from the first representative pair of each
        // relation and every other pair is checked against them.
        let mut reference: Vec<Option<Vec<usize>>> = vec![None; d];
        let mut counts = vec![0usize; d * d];
        for x in 0..n {
            for z in 0..n {
                let r = at(x, z);
                counts.iter_mut().for_each(|c| *c = 0);
                for y in 0..n {
                    counts[at(x, y) * d + at(y, z)] += 1;
                }
                match &reference[r] {
                    None => reference[r] = Some(counts.clone()),
                    Some(expected) => {
                        if *expected != counts {
                            return Err(Error::AxiomViolation { axiom: 4, witness: (x, z, r) });
                        }
                    }
                }
            }
        }

        let mut p = vec![0usize; d * d * d];
        for r in 0..d {
            let reference = reference[r].as_ref().expect("every relation occurs");
            for q_idx in 0..d * d {
                p[q_idx * d + r] = reference[q_idx];
            }
        }

        let valency: Vec<usize> = (0..d).map(|s| p[(s * d + star[s]) * d]).collect();

        Ok(Scheme { n, d, color, p, star, valency })
    }

    /// The one-point identity scheme.
    pub fn trivial() -> Scheme {
        Scheme::from_color_matrix(&[vec![0]]).expect("trivial scheme is valid")
    }

    /// The scheme on `n` points whose non-identity pairs all share one
    /// relation (rank 2 for `n >= 2`, the trivial scheme for `n = 1`).
    pub fn complete(n: usize) -> Result<Scheme> {
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, bound: 1 });
        }
        let rows: Vec<Vec<usize>> =
            (0..n).map(|x| (0..n).map(|y| usize::from(x != y)).collect()).collect();
        Scheme::from_color_matrix(&rows)
    }

    /// Direct product scheme on `n * m` points. Point `(x1, x2)` is indexed
    /// `x1 * m + x2` and relation `[s, t]` is indexed `s * d_other + t`.
    pub fn direct_product(&self, other: &Scheme) -> Scheme {
        let (n1, n2) = (self.n, other.n);
        let rows: Vec<Vec<usize>> = (0..n1 * n2)
            .map(|x| {
                (0..n1 * n2)
                    .map(|y| {
                        self.color(x / n2, y / n2) * other.d + other.color(x % n2, y % n2)
                    })
                    .collect()
            })
            .collect();
        Scheme::from_color_matrix(&rows).expect("product of valid schemes is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank `|S|`, the number of relations.
    pub fn rank(&self) -> usize {
        self.d
    }

    /// The relation containing the pair `(x, y)`.
    pub fn color(&self, x: usize, y: usize) -> usize {
        self.color[x * self.n + y]
    }

    pub fn color_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.color[x * self.n..(x + 1) * self.n].to_vec()).collect()
    }

    pub fn star(&self, s: usize) -> usize {
        self.star[s]
    }

    pub fn valency(&self, s: usize) -> usize {
        self.valency[s]
    }

    pub fn valencies(&self) -> &[usize] {
        &self.valency
    }

    /// Structure constant `a_{pq}^r`, with index checking.
    pub fn structure_constant(&self, p: usize, q: usize, r: usize) -> Result<usize> {
        for idx in [p, q, r] {
            if idx >= self.d {
                return Err(Error::IndexOutOfRange { index: idx, bound: self.d });
            }
        }
        Ok(self.sc(p, q, r))
    }

    /// Structure constant `a_{pq}^r` without index checks.
    #[inline]
    pub fn sc(&self, p: usize, q: usize, r: usize) -> usize {
        debug_assert!(p < self.d && q < self.d && r < self.d);
        self.p[(p * self.d + q) * self.d + r]
    }

    /// A scheme is thin when every relation has valency 1.
    pub fn is_thin(&self) -> bool {
        self.valency.iter().all(|&v| v == 1)
    }

    /// All points `y` with `(x, y)` in relation `s`.
    pub fn neighbors(&self, x: usize, s: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&y| self.color(x, y) == s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn c3_scheme() -> Scheme {
        let rows: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| (3 + y - x) % 3).collect()).collect();
        Scheme::from_color_matrix(&rows).unwrap()
    }

    #[test]
    fn trivial_scheme() {
        let s = Scheme::trivial();
        assert_eq!((s.n(), s.rank()), (1, 1));
        assert_eq!(s.structure_constant(0, 0, 0).unwrap(), 1);
    }

    #[test]
    fn c3_group_scheme_constants() {
        let s = c3_scheme();
        assert_eq!(s.rank(), 3);
        // a_{g~ h~}^{k~} = 1 iff gh = k
        assert_eq!(s.sc(1, 1, 2), 1);
        assert_eq!(s.sc(1, 2, 0), 1);
        assert_eq!(s.sc(1, 1, 0), 0);
        assert_eq!(s.star(1), 2);
        assert!(s.is_thin());
    }

    #[test]
    fn k3_rank_two() {
        let s = Scheme::complete(3).unwrap();
        assert_eq!(s.rank(), 2);
        // brute-force path counts over all triples
        assert_eq!(s.sc(1, 1, 0), 2);
        assert_eq!(s.sc(1, 1, 1), 1);
        assert_eq!(s.valency(1), 2);
        assert!(!s.is_thin());
    }

    #[test]
    fn complete_small() {
        assert_eq!(Scheme::complete(1).unwrap(), Scheme::trivial());
        let s2 = Scheme::complete(2).unwrap();
        assert!(s2.is_thin());
        assert!(Scheme::complete(0).is_err());
    }

    #[test]
    fn rejects_star_inconsistency() {
        // transpose of relation 1 is relation 2, but relation entries are
        // inconsistent: (0,1) -> 1 while (1,0) -> 2 and d = 3 with relation
        // indices not all present / counts failing.
        let err = Scheme::from_color_matrix(&[vec![0, 1], vec![2, 0]]).unwrap_err();
        match err {
            Error::AxiomViolation { .. } => {}
            other => panic!("expected axiom violation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_diagonal() {
        let err = Scheme::from_color_matrix(&[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: 2, .. }));
    }

    #[test]
    fn rejects_non_square() {
        let err = Scheme::from_color_matrix(&[vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::NonSquareInput { .. }));
    }

    #[test]
    fn rejects_non_constant_counts() {
        // path graph coloring: (0,2) and (0,1) both in relation 1 but with
        // different common-neighbor counts
        let rows = vec![vec![0, 1, 1, 1], vec![1, 0, 1, 1], vec![1, 1, 0, 2], vec![1, 1, 2, 0]];
        let err = Scheme::from_color_matrix(&rows).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { .. }));
    }

    #[test]
    fn direct_product_constants_multiply() {
        let c3 = c3_scheme();
        let k3 = Scheme::complete(3).unwrap();
        let prod = c3.direct_product(&k3);
        assert_eq!((prod.n(), prod.rank()), (9, 6));
        for p1 in 0..3 {
            for q1 in 0..3 {
                for r1 in 0..3 {
                    for p2 in 0..2 {
                        for q2 in 0..2 {
                            for r2 in 0..2 {
                                assert_eq!(
                                    prod.sc(p1 * 2 + p2, q1 * 2 + q2, r1 * 2 + r2),
                                    c3.sc(p1, q1, r1) * k3.sc(p2, q2, r2)
                                );
                            }
                        }
                    }
                }
            }
        }
        // n_{[1,1]} = 1 * 2
        assert_eq!(prod.valency(1 * 2 + 1), 2);
    }

    #[test]
    fn product_with_trivial_is_relabeling() {
        let k3 = Scheme::complete(3).unwrap();
        let prod = Scheme::trivial().direct_product(&k3);
        assert_eq!(prod, k3);
    }

    #[test]
    fn double_counting_identity() {
        for s in [c3_scheme(), Scheme::complete(5).unwrap()] {
            let d = s.rank();
            for p in 0..d {
                for q in 0..d {
                    let lhs: usize = (0..d).map(|r| s.sc(p, q, r) * s.valency(r)).sum();
                    assert_eq!(lhs, s.valency(p) * s.valency(q));
                }
            }
        }
    }
}
