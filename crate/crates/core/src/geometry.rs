//! Projective points, linear subspaces, monomial bases and homogeneous
//! forms, plus the evaluation matrix that turns a point set into linear
//! algebra.
//!
//! Points are kept in a canonical normalization (first nonzero coordinate
//! equal to one) so that equality of points is plain equality of coordinate
//! vectors. The monomial order is graded-lexicographic with `x0 > x1 > ...`,
//! fixed once here; every coefficient vector in the crate refers to it.

use std::collections::HashSet;

use crate::error::{GeometryError, LinalgError};
use crate::field::Scalar;
use crate::linalg::Matrix;

/// A point of P^n in canonical normalization.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjectivePoint<K: Scalar> {
    coords: Vec<K>,
}

impl<K: Scalar> ProjectivePoint<K> {
    /// Normalizes homogeneous coordinates: the first nonzero coordinate is
    /// scaled to one. Fails on the zero vector.
    pub fn new(coords: Vec<K>) -> Result<Self, GeometryError> {
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(GeometryError::ZeroPoint)?;
        let inv = lead.inv().expect("nonzero scalar");
        let coords = coords.iter().map(|c| c.mul(&inv)).collect();
        Ok(ProjectivePoint { coords })
    }

    pub fn from_ints(field: &K::Field, coords: &[i64]) -> Result<Self, GeometryError> {
        ProjectivePoint::new(coords.iter().map(|&v| K::from_int(field, v)).collect())
    }

    pub fn coords(&self) -> &[K] {
        &self.coords
    }

    /// Projective ambient dimension n (one less than the coordinate count).
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn field(&self) -> K::Field {
        self.coords[0].field()
    }

    /// Canonical order on normalized coordinates; used only to sort
    /// generated point sets deterministically.
    pub fn cmp_key(&self, other: &Self) -> std::cmp::Ordering {
        for (a, b) in self.coords.iter().zip(other.coords.iter()) {
            match a.cmp_key(b) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.coords.len().cmp(&other.coords.len())
    }
}

/// A finite set of distinct points of P^n over one field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet<K: Scalar> {
    field: K::Field,
    ambient_dim: usize,
    points: Vec<ProjectivePoint<K>>,
}

impl<K: Scalar> PointSet<K> {
    pub fn new(
        field: K::Field,
        ambient_dim: usize,
        points: Vec<ProjectivePoint<K>>,
    ) -> Result<Self, GeometryError> {
        if ambient_dim == 0 {
            return Err(GeometryError::AmbientMismatch { expected: 1, got: 0 });
        }
        let mut seen = HashSet::new();
        for p in &points {
            if p.ambient_dim() != ambient_dim {
                return Err(GeometryError::AmbientMismatch {
                    expected: ambient_dim,
                    got: p.ambient_dim(),
                });
            }
            if !seen.insert(p.coords().to_vec()) {
                return Err(GeometryError::DuplicatePoint);
            }
        }
        Ok(PointSet { field, ambient_dim, points })
    }

    pub fn from_ints(field: K::Field, ambient_dim: usize, pts: &[&[i64]]) -> Result<Self, GeometryError> {
        let points = pts
            .iter()
            .map(|coords| ProjectivePoint::from_ints(&field, coords))
            .collect::<Result<Vec<_>, _>>()?;
        PointSet::new(field, ambient_dim, points)
    }

    pub fn field(&self) -> &K::Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint<K>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &ProjectivePoint<K> {
        &self.points[i]
    }

    pub fn contains_point(&self, p: &ProjectivePoint<K>) -> bool {
        self.points.iter().any(|q| q == p)
    }

    /// The subset with the i-th point removed.
    pub fn without_index(&self, i: usize) -> PointSet<K> {
        let mut points = self.points.clone();
        points.remove(i);
        PointSet { field: self.field, ambient_dim: self.ambient_dim, points }
    }

    pub fn subset(&self, indices: &[usize]) -> PointSet<K> {
        let points = indices.iter().map(|&i| self.points[i].clone()).collect();
        PointSet { field: self.field, ambient_dim: self.ambient_dim, points }
    }

    /// Indices sorted by the canonical coordinate order; generators use this
    /// to emit byte-reproducible sets.
    pub fn sorted(&self) -> PointSet<K> {
        let mut points = self.points.clone();
        points.sort_by(|a, b| a.cmp_key(b));
        PointSet { field: self.field, ambient_dim: self.ambient_dim, points }
    }

    /// Coordinate matrix with one row per point.
    pub fn coordinate_matrix(&self) -> Matrix<K> {
        let rows = self.points.iter().map(|p| p.coords().to_vec()).collect();
        Matrix::from_rows(self.field, rows).expect("uniform coordinate length")
    }
}

/// A linear subspace of P^n presented by a reduced-echelon basis of
/// homogeneous coordinate rows. The projective dimension is `rank - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearSubspace<K: Scalar> {
    ambient_dim: usize,
    basis: Matrix<K>,
    pivots: Vec<usize>,
}

impl<K: Scalar> LinearSubspace<K> {
    /// Smallest subspace containing the given (non-empty) point list.
    pub fn span_of(points: &[ProjectivePoint<K>]) -> Result<Self, GeometryError> {
        let first = points.first().ok_or(GeometryError::EmptySet)?;
        let field = first.field();
        let ambient_dim = first.ambient_dim();
        let rows: Vec<Vec<K>> = points.iter().map(|p| p.coords().to_vec()).collect();
        let m = Matrix::from_rows(field, rows).map_err(|_| GeometryError::AmbientMismatch {
            expected: ambient_dim,
            got: 0,
        })?;
        let rref = m.rref();
        let rank = rref.pivots.len();
        let basis_rows: Vec<Vec<K>> = (0..rank).map(|i| rref.matrix.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(field, basis_rows).expect("rank rows");
        Ok(LinearSubspace { ambient_dim, basis, pivots: rref.pivots })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Projective dimension (0 = point, 1 = line, 2 = plane, ...).
    pub fn dim(&self) -> usize {
        self.basis.rows() - 1
    }

    /// Reduced-echelon basis rows.
    pub fn basis(&self) -> &Matrix<K> {
        &self.basis
    }

    pub fn contains(&self, p: &ProjectivePoint<K>) -> Result<bool, GeometryError> {
        if p.ambient_dim() != self.ambient_dim {
            return Err(GeometryError::AmbientMismatch {
                expected: self.ambient_dim,
                got: p.ambient_dim(),
            });
        }
        let mut rows = self.basis.row_vecs();
        rows.push(p.coords().to_vec());
        let m = Matrix::from_rows(*self.basis.field(), rows).expect("uniform length");
        Ok(m.rank() == self.basis.rows())
    }

    /// Coordinates of a contained point with respect to the echelon basis.
    /// Because the basis is reduced, the coefficient of basis row `r` is just
    /// the point's coordinate at that row's pivot column.
    pub fn coordinates_of(&self, p: &ProjectivePoint<K>) -> Result<Vec<K>, GeometryError> {
        if !self.contains(p)? {
            return Err(GeometryError::PointOutsideSubspace);
        }
        let coords: Vec<K> = self.pivots.iter().map(|&c| p.coords()[c].clone()).collect();
        Ok(coords)
    }
}

/// All exponent tuples of total degree k in n+1 variables, in
/// graded-lexicographic order with `x0 > x1 > ... > xn`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialBasis {
    ambient_dim: usize,
    degree: usize,
    exponents: Vec<Vec<u32>>,
}

impl MonomialBasis {
    pub fn new(ambient_dim: usize, degree: usize) -> MonomialBasis {
        assert!(ambient_dim >= 1, "ambient dimension must be at least 1");
        let mut exponents = Vec::new();
        let mut current = vec![0u32; ambient_dim + 1];
        fill_exponents(&mut exponents, &mut current, 0, degree as u32);
        debug_assert_eq!(exponents.len(), binomial(ambient_dim + degree, ambient_dim));
        MonomialBasis { ambient_dim, degree, exponents }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    /// Value of the j-th monomial at the given coordinates.
    pub fn eval_at<K: Scalar>(&self, j: usize, coords: &[K]) -> K {
        let field = coords[0].field();
        let mut acc = K::one(&field);
        for (c, &e) in coords.iter().zip(self.exponents[j].iter()) {
            if e > 0 {
                acc = acc.mul(&c.pow(e));
            }
        }
        acc
    }
}

fn fill_exponents(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    // Descending leading exponent gives lexicographic order with x0 largest.
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_exponents(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Enumeration of the degree-k monomials on P^n.
pub fn monomials(ambient_dim: usize, degree: usize) -> MonomialBasis {
    MonomialBasis::new(ambient_dim, degree)
}

/// A homogeneous form of fixed degree, stored as coefficients over a
/// [`MonomialBasis`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousForm<K: Scalar> {
    basis: MonomialBasis,
    coeffs: Vec<K>,
}

impl<K: Scalar> HomogeneousForm<K> {
    pub fn new(basis: MonomialBasis, coeffs: Vec<K>) -> HomogeneousForm<K> {
        assert_eq!(basis.len(), coeffs.len(), "coefficient vector must match the monomial basis");
        HomogeneousForm { basis, coeffs }
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.basis.degree()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ambient_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(K::is_zero)
    }

    /// Value at the canonical normalization of `p`; zero exactly when the
    /// point lies on the hypersurface cut out by the form.
    pub fn eval(&self, p: &ProjectivePoint<K>) -> K {
        self.eval_coords(p.coords())
    }

    pub fn eval_coords(&self, coords: &[K]) -> K {
        assert_eq!(coords.len(), self.basis.ambient_dim() + 1);
        let field = coords[0].field();
        let mut acc = K::zero(&field);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&c.mul(&self.basis.eval_at(j, coords)));
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> HomogeneousForm<K> {
        assert!(self.degree() >= 1, "cannot differentiate a constant form");
        let field = self.coeffs.first().map(K::field).expect("nonempty basis");
        let lower = MonomialBasis::new(self.ambient_dim(), self.degree() - 1);
        let mut out = vec![K::zero(&field); lower.len()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exps = &self.basis.exponents()[j];
            if exps[var] == 0 {
                continue;
            }
            let mut lowered = exps.clone();
            lowered[var] -= 1;
            let idx = lower
                .exponents()
                .iter()
                .position(|e| e == &lowered)
                .expect("lowered exponent exists in the smaller basis");
            let factor = K::from_int(&field, exps[var] as i64);
            out[idx] = out[idx].add(&c.mul(&factor));
        }
        HomogeneousForm::new(lower, out)
    }
}

/// The |Γ| x C(n+k, n) matrix of degree-k monomials evaluated at the points.
/// Its kernel is the degree-k piece of the ideal of Γ.
pub fn evaluation_matrix<K: Scalar>(gamma: &PointSet<K>, degree: usize) -> Matrix<K> {
    let basis = MonomialBasis::new(gamma.ambient_dim(), degree);
    let mut rows = Vec::with_capacity(gamma.len());
    for p in gamma.points() {
        let row: Vec<K> = (0..basis.len()).map(|j| basis.eval_at(j, p.coords())).collect();
        rows.push(row);
    }
    if rows.is_empty() {
        return Matrix::zero(*gamma.field(), 0, basis.len());
    }
    Matrix::from_rows(*gamma.field(), rows).expect("uniform rows")
}

/// Smallest linear subspace through a non-empty subset of points.
pub fn span<K: Scalar>(points: &[ProjectivePoint<K>]) -> Result<LinearSubspace<K>, GeometryError> {
    LinearSubspace::span_of(points)
}

pub fn subspace_contains<K: Scalar>(
    subspace: &LinearSubspace<K>,
    p: &ProjectivePoint<K>,
) -> Result<bool, GeometryError> {
    subspace.contains(p)
}

/// Image of a point set under an invertible change of coordinates
/// (points as column vectors, so each point maps to `A p`).
pub fn apply_projectivity<K: Scalar>(
    gamma: &PointSet<K>,
    a: &Matrix<K>,
) -> Result<PointSet<K>, GeometryError> {
    let n = gamma.ambient_dim();
    if a.rows() != n + 1 || a.cols() != n + 1 {
        return Err(GeometryError::AmbientMismatch { expected: n + 1, got: a.rows() });
    }
    if !a.is_invertible() {
        return Err(GeometryError::SingularProjectivity);
    }
    let mut points = Vec::with_capacity(gamma.len());
    for p in gamma.points() {
        let coords = a.mul_vec(p.coords()).map_err(map_linalg)?;
        points.push(ProjectivePoint::new(coords)?);
    }
    PointSet::new(*gamma.field(), n, points)
}

fn map_linalg(e: LinalgError) -> GeometryError {
    match e {
        LinalgError::DimensionMismatch(_) => GeometryError::AmbientMismatch { expected: 0, got: 0 },
        LinalgError::Singular => GeometryError::SingularProjectivity,
    }
}

/// Re-coordinatizes Γ inside its own span: the result lives in P^t where t
/// is the span dimension, with coordinates taken against the echelon basis
/// of the span. Linear incidence patterns are preserved.
pub fn restrict_to_span<K: Scalar>(gamma: &PointSet<K>) -> Result<PointSet<K>, GeometryError> {
    let subspace = span(gamma.points())?;
    let t = subspace.dim();
    if t == 0 {
        return Err(GeometryError::DegenerateSpan);
    }
    restrict_to_subspace(gamma, &subspace)
}

/// Like [`restrict_to_span`] but against a caller-supplied subspace that
/// must contain every point.
pub fn restrict_to_subspace<K: Scalar>(
    gamma: &PointSet<K>,
    subspace: &LinearSubspace<K>,
) -> Result<PointSet<K>, GeometryError> {
    let t = subspace.dim();
    let mut points = Vec::with_capacity(gamma.len());
    for p in gamma.points() {
        let coords = subspace.coordinates_of(p)?;
        // Exactness guard: the reduced basis reconstructs the point.
        debug_assert!({
            let lift = lift_coordinates(subspace, &coords);
            ProjectivePoint::new(lift).unwrap() == *p
        });
        points.push(ProjectivePoint::new(coords)?);
    }
    PointSet::new(*gamma.field(), t, points)
}

/// Ambient coordinates of a point given by coefficients against the
/// subspace basis rows.
pub fn lift_coordinates<K: Scalar>(subspace: &LinearSubspace<K>, coords: &[K]) -> Vec<K> {
    let basis = subspace.basis();
    let field = *basis.field();
    let mut out = vec![K::zero(&field); subspace.ambient_dim() + 1];
    for (r, c) in coords.iter().enumerate() {
        for j in 0..basis.cols() {
            out[j] = out[j].add(&c.mul(basis.get(r, j)));
        }
    }
    out
}
