//! Adjacency algebras over the rationals, the pushforward of an admissible
//! morphism, the tensor decomposition for direct products, and the
//! identification of a thin scheme's algebra with a group algebra.
//!
//! All arithmetic is exact (`Ratio<i64>`); every named map is verified to
//! be unital and multiplicative at construction time.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::morphism::Morphism;
use crate::scheme::Scheme;

pub type Rational = num_rational::Ratio<i64>;

fn rat(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}

/// A finite-dimensional algebra with a distinguished basis whose structure
/// constants are nonnegative integers and whose unit is basis element 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Algebra {
    /// The adjacency algebra of a scheme: basis `sigma_p`, products given
    /// by the scheme's structure constants.
    Scheme(Scheme),
    /// The tensor square structure `A(S) (x) A(T)` with basis
    /// `sigma_p (x) sigma_q` indexed `p * rank(T) + q`.
    Tensor(Scheme, Scheme),
    /// The group algebra: basis the group elements, products from the
    /// Cayley table.
    Group(Group),
    /// The scalars: one-dimensional, for counits.
    Scalar,
}

impl Algebra {
    pub fn dim(&self) -> usize {
        match self {
            Algebra::Scheme(s) => s.rank(),
            Algebra::Tensor(s, t) => s.rank() * t.rank(),
            Algebra::Group(g) => g.order(),
            Algebra::Scalar => 1,
        }
    }

    /// Structure constant of the basis: coefficient of basis `r` in the
    /// product of basis `p` and basis `q`.
    pub fn structure_constant(&self, p: usize, q: usize, r: usize) -> usize {
        match self {
            Algebra::Scheme(s) => s.sc(p, q, r),
            Algebra::Tensor(s, t) => {
                let dt = t.rank();
                s.sc(p / dt, q / dt, r / dt) * t.sc(p % dt, q % dt, r % dt)
            }
            Algebra::Group(g) => usize::from(g.mul(p, q) == r),
            Algebra::Scalar => 1,
        }
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::basis(self, 0)
    }
}

/// An element of an algebra, as exact rational coordinates in the
/// distinguished basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    coeffs: Vec<Rational>,
}

impl AlgebraElement {
    pub fn zero(alg: &Algebra) -> AlgebraElement {
        AlgebraElement { coeffs: vec![Rational::from_integer(0); alg.dim()] }
    }

    pub fn basis(alg: &Algebra, i: usize) -> AlgebraElement {
        let mut e = AlgebraElement::zero(alg);
        e.coeffs[i] = Rational::from_integer(1);
        e
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> AlgebraElement {
        AlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs[i]
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: Rational) -> AlgebraElement {
        AlgebraElement { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

/// Product in the algebra, by bilinear extension of the basis structure
/// constants.
pub fn alg_product(alg: &Algebra, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let d = alg.dim();
    let mut out = AlgebraElement::zero(alg);
    for p in 0..d {
        if a.coeffs[p] == Rational::from_integer(0) {
            continue;
        }
        for q in 0..d {
            if b.coeffs[q] == Rational::from_integer(0) {
                continue;
            }
            let c = a.coeffs[p] * b.coeffs[q];
            for r in 0..d {
                let k = alg.structure_constant(p, q, r);
                if k > 0 {
                    out.coeffs[r] += c * rat(k);
                }
            }
        }
    }
    out
}

/// A linear map between algebras, stored as a dense matrix over the
/// distinguished bases: `matrix[r * dom.dim() + p]` is the coefficient of
/// codomain basis `r` in the image of domain basis `p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraMap {
    dom: Algebra,
    cod: Algebra,
    matrix: Vec<Rational>,
}

impl AlgebraMap {
    pub fn new(dom: Algebra, cod: Algebra, matrix: Vec<Rational>) -> Result<AlgebraMap> {
        if matrix.len() != dom.dim() * cod.dim() {
            return Err(Error::IndexOutOfRange {
                index: matrix.len(),
                bound: dom.dim() * cod.dim(),
            });
        }
        Ok(AlgebraMap { dom, cod, matrix })
    }

    pub fn identity(alg: &Algebra) -> AlgebraMap {
        let d = alg.dim();
        let mut matrix = vec![Rational::from_integer(0); d * d];
        for i in 0..d {
            matrix[i * d + i] = Rational::from_integer(1);
        }
        AlgebraMap { dom: alg.clone(), cod: alg.clone(), matrix }
    }

    pub fn dom(&self) -> &Algebra {
        &self.dom
    }

    pub fn cod(&self) -> &Algebra {
        &self.cod
    }

    pub fn entry(&self, r: usize, p: usize) -> Rational {
        self.matrix[r * self.dom.dim() + p]
    }

    /// Row-major matrix over the distinguished bases, `cod.dim()` rows by
    /// `dom.dim()` columns.
    pub fn matrix(&self) -> &[Rational] {
        &self.matrix
    }

    pub fn apply(&self, a: &AlgebraElement) -> AlgebraElement {
        let (rows, cols) = (self.cod.dim(), self.dom.dim());
        let mut out = AlgebraElement::zero(&self.cod);
        for r in 0..rows {
            let mut acc = Rational::from_integer(0);
            for p in 0..cols {
                acc += self.matrix[r * cols + p] * a.coeffs[p];
            }
            out.coeffs[r] = acc;
        }
        out
    }

    pub fn apply_basis(&self, p: usize) -> AlgebraElement {
        self.apply(&AlgebraElement::basis(&self.dom, p))
    }

    /// `self` after `inner`.
    pub fn compose(&self, inner: &AlgebraMap) -> Result<AlgebraMap> {
        if inner.cod != self.dom {
            return Err(Error::DomainMismatch);
        }
        let (m, k, n) = (self.cod.dim(), self.dom.dim(), inner.dom.dim());
        let mut matrix = vec![Rational::from_integer(0); m * n];
        for r in 0..m {
            for c in 0..n {
                let mut acc = Rational::from_integer(0);
                for j in 0..k {
                    acc += self.matrix[r * k + j] * inner.matrix[j * n + c];
                }
                matrix[r * n + c] = acc;
            }
        }
        Ok(AlgebraMap { dom: inner.dom.clone(), cod: self.cod.clone(), matrix })
    }

    /// Sends the unit to the unit.
    pub fn is_unital(&self) -> bool {
        self.apply(&self.dom.unit()) == self.cod.unit()
    }

    /// `f(ab) = f(a) f(b)` on all pairs of basis elements; bilinearity
    /// extends this to the whole algebra.
    pub fn is_multiplicative(&self) -> bool {
        let d = self.dom.dim();
        (0..d).all(|p| {
            let fp = self.apply_basis(p);
            (0..d).all(|q| {
                let lhs = self.apply(&alg_product(
                    &self.dom,
                    &AlgebraElement::basis(&self.dom, p),
                    &AlgebraElement::basis(&self.dom, q),
                ));
                lhs == alg_product(&self.cod, &fp, &self.apply_basis(q))
            })
        })
    }

    /// Invertibility as a linear map, by Gaussian elimination over the
    /// rationals.
    pub fn is_linear_isomorphism(&self) -> bool {
        let (rows, cols) = (self.cod.dim(), self.dom.dim());
        if rows != cols {
            return false;
        }
        let mut m = self.matrix.clone();
        let zero = Rational::from_integer(0);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != zero) else {
                continue;
            };
            for c in 0..cols {
                m.swap(pivot * cols + c, rank * cols + c);
            }
            let inv = m[rank * cols + col].recip();
            for c in 0..cols {
                m[rank * cols + c] *= inv;
            }
            for r in 0..rows {
                if r != rank && m[r * cols + col] != zero {
                    let factor = m[r * cols + col];
                    for c in 0..cols {
                        let v = m[rank * cols + c] * factor;
                        m[r * cols + c] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank == cols
    }

    /// The inverse map; the map must be a linear isomorphism.
    pub fn inverse(&self) -> Result<AlgebraMap> {
        let n = self.cod.dim();
        if n != self.dom.dim() {
            return Err(Error::DomainMismatch);
        }
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        // augmented [M | I] reduced to [I | M^-1]
        let mut m = self.matrix.clone();
        let mut inv = vec![zero; n * n];
        for i in 0..n {
            inv[i * n + i] = one;
        }
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != zero) else {
                return Err(Error::InternalInconsistency("matrix is singular"));
            };
            for c in 0..n {
                m.swap(pivot * n + c, col * n + c);
                inv.swap(pivot * n + c, col * n + c);
            }
            let f = m[col * n + col].recip();
            for c in 0..n {
                m[col * n + c] *= f;
                inv[col * n + c] *= f;
            }
            for r in 0..n {
                if r != col && m[r * n + col] != zero {
                    let factor = m[r * n + col];
                    for c in 0..n {
                        let (a, b) = (m[col * n + c] * factor, inv[col * n + c] * factor);
                        m[r * n + c] -= a;
                        inv[r * n + c] -= b;
                    }
                }
            }
        }
        Ok(AlgebraMap { dom: self.cod.clone(), cod: self.dom.clone(), matrix: inv })
    }
}

/// Kronecker product of two maps between scheme algebras, as a map between
/// the corresponding tensor algebras.
pub fn tensor_map(f: &AlgebraMap, g: &AlgebraMap) -> Result<AlgebraMap> {
    let (Algebra::Scheme(fd), Algebra::Scheme(gd)) = (f.dom(), g.dom()) else {
        return Err(Error::DomainMismatch);
    };
    let (Algebra::Scheme(fc), Algebra::Scheme(gc)) = (f.cod(), g.cod()) else {
        return Err(Error::DomainMismatch);
    };
    let dom = Algebra::Tensor(fd.clone(), gd.clone());
    let cod = Algebra::Tensor(fc.clone(), gc.clone());
    let (fr, fcn) = (fc.rank(), fd.rank());
    let (gr, gcn) = (gc.rank(), gd.rank());
    let mut matrix = vec![Rational::from_integer(0); dom.dim() * cod.dim()];
    for r1 in 0..fr {
        for r2 in 0..gr {
            for c1 in 0..fcn {
                for c2 in 0..gcn {
                    matrix[(r1 * gr + r2) * (fcn * gcn) + (c1 * gcn + c2)] =
                        f.entry(r1, c1) * g.entry(r2, c2);
                }
            }
        }
    }
    AlgebraMap::new(dom, cod, matrix)
}

/// The pushforward `A(phi)` of an admissible morphism:
/// `sigma_p -> n_p^phi sigma_{phi(p)}`. Verified unital and multiplicative
/// before returning.
pub fn alg_hom(phi: &Morphism) -> Result<AlgebraMap> {
    phi.require_admissible()?;
    let dom = Algebra::Scheme(phi.dom().clone());
    let cod = Algebra::Scheme(phi.cod().clone());
    let (rows, cols) = (cod.dim(), dom.dim());
    let mut matrix = vec![Rational::from_integer(0); rows * cols];
    for p in 0..cols {
        matrix[phi.apply_rel(p) * cols + p] = rat(phi.relative_valency(p)?);
    }
    let map = AlgebraMap::new(dom, cod, matrix)?;
    if !map.is_unital() || !map.is_multiplicative() {
        return Err(Error::InternalInconsistency("pushforward is not an algebra map"));
    }
    Ok(map)
}

/// Direct verification of the pushforward identity
/// `sum_{s : phi(s) = t} a_{pq}^s n_s^phi = a_{phi(p) phi(q)}^t n_p^phi n_q^phi`
/// over every `(p, q, t)`. Returns the first failing triple, if any.
pub fn check_pushforward_identity(phi: &Morphism) -> Result<Option<(usize, usize, usize)>> {
    phi.require_admissible()?;
    let (dom, cod) = (phi.dom(), phi.cod());
    let relval: Vec<usize> =
        (0..dom.rank()).map(|s| phi.relative_valency(s)).collect::<Result<_>>()?;
    for p in 0..dom.rank() {
        for q in 0..dom.rank() {
            for t in 0..cod.rank() {
                let lhs: usize = (0..dom.rank())
                    .filter(|&s| phi.apply_rel(s) == t)
                    .map(|s| dom.sc(p, q, s) * relval[s])
                    .sum();
                let rhs =
                    cod.sc(phi.apply_rel(p), phi.apply_rel(q), t) * relval[p] * relval[q];
                if lhs != rhs {
                    return Ok(Some((p, q, t)));
                }
            }
        }
    }
    Ok(None)
}

/// The isomorphism `mu: A(S) (x) A(T) -> A(S x T)`,
/// `sigma_p (x) sigma_q -> sigma_{[p,q]}`. With the product relation
/// `[p, q]` indexed `p * rank(T) + q` this is the identity matrix on
/// indices; it is still verified to be a unital multiplicative linear
/// isomorphism before returning.
pub fn tensor_iso(s: &Scheme, t: &Scheme) -> Result<AlgebraMap> {
    let dom = Algebra::Tensor(s.clone(), t.clone());
    let cod = Algebra::Scheme(s.direct_product(t));
    let d = dom.dim();
    let mut matrix = vec![Rational::from_integer(0); d * d];
    for i in 0..d {
        matrix[i * d + i] = Rational::from_integer(1);
    }
    let map = AlgebraMap::new(dom, cod, matrix)?;
    if !map.is_unital() || !map.is_multiplicative() || !map.is_linear_isomorphism() {
        return Err(Error::InternalInconsistency("tensor map is not an algebra isomorphism"));
    }
    Ok(map)
}

/// The isomorphism `A(S(G)) -> k[G]`, `sigma_{g~} -> g`. Relations of the
/// group scheme are indexed by group elements, so the matrix is the
/// identity; verified multiplicative against the group algebra's own
/// structure constants.
pub fn group_algebra_iso(g: &Group) -> Result<AlgebraMap> {
    let dom = Algebra::Scheme(crate::group::group_scheme(g));
    let cod = Algebra::Group(g.clone());
    let d = g.order();
    let mut matrix = vec![Rational::from_integer(0); d * d];
    for i in 0..d {
        matrix[i * d + i] = Rational::from_integer(1);
    }
    let map = AlgebraMap::new(dom, cod, matrix)?;
    if !map.is_unital() || !map.is_multiplicative() || !map.is_linear_isomorphism() {
        return Err(Error::InternalInconsistency(
            "group scheme algebra does not match the group algebra",
        ));
    }
    Ok(map)
}
