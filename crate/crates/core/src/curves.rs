//! Search for low-degree curves through a point set, by explicit component
//! decompositions: lines, plane curves and rational normal curves.
//!
//! Soundness: every `Found` witness re-verifies, by exact evaluation, that
//! each point lies on its assigned component and that the component degrees
//! stay within the requested budget.
//!
//! Decisiveness: `AbsentDecisive` is only produced by exhaustive searches.
//! For budgets 1..3 the search is exhaustive outright — the reduced curves
//! of degree at most 3 are classified (lines, plane conics and cubics,
//! unions of few lines, conic plus line, twisted cubics), and each class is
//! enumerated. At budget 4 only the coplanar branch is exhaustive (a plane
//! quartic through the set exists whenever any quartic curve contains it);
//! elsewhere a failed search returns `Undecided` with Hilbert-function and
//! quadric-ideal evidence, because irreducible space quartics other than
//! rational normal ones are not decided here.

use crate::error::CurveError;
use crate::field::Scalar;
use crate::forms::{squarefree_status, SquarefreeStatus};
use crate::geometry::{
    evaluation_matrix, restrict_to_subspace, span, HomogeneousForm, LinearSubspace, MonomialBasis,
    PointSet, ProjectivePoint,
};
use crate::linalg::Matrix;
use crate::poly::Poly;

/// A rational normal curve of degree t inside its t-dimensional span,
/// parametrized through the standard frame by x_i(t) = prod_{j != i}
/// (t - beta_j).
#[derive(Clone, Debug)]
pub struct RationalNormalCurve<K: Scalar> {
    span: LinearSubspace<K>,
    to_standard: Matrix<K>,
    from_standard: Matrix<K>,
    beta: Vec<K>,
}

impl<K: Scalar> RationalNormalCurve<K> {
    pub fn degree(&self) -> usize {
        self.span.dim()
    }

    pub fn span(&self) -> &LinearSubspace<K> {
        &self.span
    }

    pub fn beta(&self) -> &[K] {
        &self.beta
    }

    pub fn frame(&self) -> &Matrix<K> {
        &self.to_standard
    }

    /// Curve point for a finite parameter, or the all-ones point for `None`
    /// (the parameter at infinity), in standard coordinates.
    fn standard_point_at(&self, t: Option<&K>) -> Vec<K> {
        let field = self.beta[0].field();
        match t {
            None => vec![K::one(&field); self.beta.len()],
            Some(t) => (0..self.beta.len())
                .map(|i| {
                    let mut acc = K::one(&field);
                    for (j, b) in self.beta.iter().enumerate() {
                        if j != i {
                            acc = acc.mul(&t.sub(b));
                        }
                    }
                    acc
                })
                .collect(),
        }
    }

    /// Ambient representative of the curve point at parameter `t`.
    pub fn point_at(&self, t: Option<&K>) -> ProjectivePoint<K> {
        let standard = self.standard_point_at(t);
        let span_coords = self.from_standard.mul_vec(&standard).expect("square frame");
        let ambient = crate::geometry::lift_coordinates(&self.span, &span_coords);
        ProjectivePoint::new(ambient).expect("curve points are nonzero")
    }
}

fn proportional<K: Scalar>(a: &[K], b: &[K]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let lead = (0..a.len()).find(|&i| !a[i].is_zero() || !b[i].is_zero());
    let Some(i0) = lead else {
        return false; // both zero vectors: not points
    };
    if a[i0].is_zero() || b[i0].is_zero() {
        return false;
    }
    for j in 0..a.len() {
        if a[i0].mul(&b[j]) != a[j].mul(&b[i0]) {
            return false;
        }
    }
    true
}

/// Membership of an ambient point on the curve: true when some parameter
/// t in the field or at infinity reproduces the point. The pair polynomials
/// y_j x_i(t) - y_i x_j(t) are combined by a polynomial gcd whose roots are
/// the candidate parameters; over a prime field the roots are found by
/// enumeration, over Q the single candidate root is solved for directly
/// from a pair relation and checked against the gcd.
pub fn rnc_contains<K: Scalar>(curve: &RationalNormalCurve<K>, p: &ProjectivePoint<K>) -> bool {
    if p.ambient_dim() != curve.span.ambient_dim() {
        return false;
    }
    match curve.span.contains(p) {
        Ok(true) => {}
        _ => return false,
    }
    let span_coords = curve.span.coordinates_of(p).expect("checked containment");
    let y = curve.to_standard.mul_vec(&span_coords).expect("square frame");
    let field = y[0].field();
    let ones = vec![K::one(&field); y.len()];
    if proportional(&y, &ones) {
        return true; // parameter at infinity
    }
    let x_polys: Vec<Poly<K>> = (0..curve.beta.len())
        .map(|i| {
            let mut acc = Poly::constant(K::one(&field));
            for (j, b) in curve.beta.iter().enumerate() {
                if j != i {
                    acc = acc.mul(&Poly::linear_from_root(&field, b));
                }
            }
            acc
        })
        .collect();
    let mut gcd = Poly::zero();
    for i in 0..y.len() {
        for j in i + 1..y.len() {
            let pair = x_polys[i].scale(&y[j]).sub(&x_polys[j].scale(&y[i]));
            gcd = if gcd.is_zero() { pair } else { gcd.gcd(&pair) };
        }
    }
    if gcd.is_zero() {
        // All pair polynomials vanish identically: at most one nonzero
        // coordinate, so the point is a frame vertex e_i = x(beta_i).
        return y.iter().filter(|v| !v.is_zero()).count() == 1;
    }
    if gcd.degree() == Some(0) {
        return false;
    }
    let char = K::spec(&field).characteristic();
    let candidates: Vec<K> = if char != 0 {
        let mut roots = Vec::new();
        let mut t = K::zero(&field);
        let one = K::one(&field);
        for _ in 0..char {
            if gcd.eval(&t).is_zero() {
                roots.push(t.clone());
            }
            t = t.add(&one);
        }
        roots
    } else {
        rational_candidates(&y, &curve.beta, &field)
            .into_iter()
            .filter(|t| gcd.eval(t).is_zero())
            .collect()
    };
    candidates
        .iter()
        .any(|t| proportional(&y, &curve.standard_point_at(Some(t))))
}

/// Candidate finite parameters over Q. A point on the curve with all
/// coordinates nonzero satisfies y_i (t - beta_i) = y_j (t - beta_j) for all
/// pairs, so the first non-degenerate pair pins t by a linear equation; a
/// point with zero coordinates can only sit at a branch value beta_i.
fn rational_candidates<K: Scalar>(y: &[K], beta: &[K], field: &K::Field) -> Vec<K> {
    if y.iter().any(K::is_zero) {
        return beta.to_vec();
    }
    for i in 1..y.len() {
        if y[i] != y[0] {
            let num = y[i].mul(&beta[i]).sub(&y[0].mul(&beta[0]));
            let den = y[i].sub(&y[0]);
            return vec![num.div(&den)];
        }
    }
    let _ = field;
    Vec::new() // all equal: the all-ones case, already handled
}

/// Fits the unique rational normal curve through exactly n+3 points of P^n:
/// the first n+2 points are sent to the standard frame and the last point's
/// normalized coordinates q determine beta_i = -1/q_i. Returns `Ok(None)`
/// when q has a zero or repeated coordinate (no curve through this
/// configuration), and an error when the frame itself is degenerate.
pub fn fit_rnc<K: Scalar>(points: &[ProjectivePoint<K>]) -> Result<Option<RationalNormalCurve<K>>, CurveError> {
    let first = points.first().ok_or(CurveError::Geometry(crate::error::GeometryError::EmptySet))?;
    let n = first.ambient_dim();
    if points.len() != n + 3 {
        return Err(CurveError::Geometry(crate::error::GeometryError::AmbientMismatch {
            expected: n + 3,
            got: points.len(),
        }));
    }
    let subspace = span(points)?;
    if subspace.dim() != n {
        return Err(CurveError::SingularFrame);
    }
    fit_rnc_in_span(points, &subspace)
}

/// Fit against an explicit span; `points` must number `span.dim() + 3`.
fn fit_rnc_in_span<K: Scalar>(
    points: &[ProjectivePoint<K>],
    subspace: &LinearSubspace<K>,
) -> Result<Option<RationalNormalCurve<K>>, CurveError> {
    let t = subspace.dim();
    debug_assert_eq!(points.len(), t + 3);
    let field = points[0].field();
    let restricted: Vec<Vec<K>> = points
        .iter()
        .map(|p| subspace.coordinates_of(p).map_err(CurveError::Geometry))
        .collect::<Result<_, _>>()?;

    // Columns of m are the first t+1 points.
    let mut m = Matrix::zero(field, t + 1, t + 1);
    for (col, coords) in restricted.iter().take(t + 1).enumerate() {
        for row in 0..=t {
            *m.get_mut(row, col) = coords[row].clone();
        }
    }
    let m_inv = m.inverse().map_err(|_| CurveError::SingularFrame)?;
    let lambda = m_inv.mul_vec(&restricted[t + 1]).expect("square");
    if lambda.iter().any(K::is_zero) {
        return Err(CurveError::SingularFrame);
    }
    // f maps the standard frame to the input points; its inverse sends the
    // configuration to standard position.
    let mut f = m;
    for col in 0..=t {
        for row in 0..=t {
            let v = f.get(row, col).mul(&lambda[col]);
            *f.get_mut(row, col) = v;
        }
    }
    let to_standard = f.inverse().map_err(|_| CurveError::SingularFrame)?;
    let q_raw = to_standard.mul_vec(&restricted[t + 2]).expect("square");
    if q_raw.iter().any(K::is_zero) {
        return Ok(None);
    }
    // Normalize q so its first coordinate is one; beta is then canonical.
    let q0_inv = q_raw[0].inv().expect("nonzero");
    let q: Vec<K> = q_raw.iter().map(|v| v.mul(&q0_inv)).collect();
    for i in 0..q.len() {
        for j in i + 1..q.len() {
            if q[i] == q[j] {
                return Ok(None);
            }
        }
    }
    let beta: Vec<K> = q.iter().map(|v| v.inv().expect("nonzero").neg()).collect();
    Ok(Some(RationalNormalCurve {
        span: subspace.clone(),
        from_standard: f,
        to_standard,
        beta,
    }))
}

/// One irreducible piece of a curve witness, with the indices of Γ it is
/// responsible for. Every assigned point verifiably lies on the component.
#[derive(Clone, Debug)]
pub enum CurveComponent<K: Scalar> {
    Line {
        line: LinearSubspace<K>,
        assigned: Vec<usize>,
    },
    PlaneCurve {
        plane: LinearSubspace<K>,
        /// Ternary form in the plane's echelon-basis coordinates.
        form: HomogeneousForm<K>,
        degree: usize,
        squarefree: SquarefreeStatus,
        assigned: Vec<usize>,
    },
    RationalNormal {
        curve: RationalNormalCurve<K>,
        assigned: Vec<usize>,
    },
}

impl<K: Scalar> CurveComponent<K> {
    pub fn degree(&self) -> usize {
        match self {
            CurveComponent::Line { .. } => 1,
            CurveComponent::PlaneCurve { degree, .. } => *degree,
            CurveComponent::RationalNormal { curve, .. } => curve.degree(),
        }
    }

    pub fn assigned(&self) -> &[usize] {
        match self {
            CurveComponent::Line { assigned, .. }
            | CurveComponent::PlaneCurve { assigned, .. }
            | CurveComponent::RationalNormal { assigned, .. } => assigned,
        }
    }

    /// Exact containment check for one point of Γ.
    pub fn contains(&self, p: &ProjectivePoint<K>) -> bool {
        match self {
            CurveComponent::Line { line, .. } => line.contains(p).unwrap_or(false),
            CurveComponent::PlaneCurve { plane, form, .. } => match plane.coordinates_of(p) {
                Ok(coords) => form.eval_coords(&coords).is_zero(),
                Err(_) => false,
            },
            CurveComponent::RationalNormal { curve, .. } => rnc_contains(curve, p),
        }
    }
}

/// A verified decomposition of a containing curve.
#[derive(Clone, Debug)]
pub struct CurveWitness<K: Scalar> {
    components: Vec<CurveComponent<K>>,
    total_degree: usize,
}

impl<K: Scalar> CurveWitness<K> {
    /// Builds and fully re-verifies a witness: degree budget, complete
    /// coverage, and exact containment of every assigned point.
    pub fn new(
        gamma: &PointSet<K>,
        components: Vec<CurveComponent<K>>,
        budget: usize,
    ) -> Result<CurveWitness<K>, CurveError> {
        let total_degree: usize = components.iter().map(CurveComponent::degree).sum();
        if total_degree > budget {
            return Err(CurveError::BadMenu(format!(
                "witness degree {total_degree} exceeds budget {budget}"
            )));
        }
        let mut covered = vec![false; gamma.len()];
        for comp in &components {
            for &i in comp.assigned() {
                if !comp.contains(gamma.point(i)) {
                    return Err(CurveError::BadMenu(format!(
                        "point {i} does not lie on its assigned component"
                    )));
                }
                covered[i] = true;
            }
        }
        if covered.iter().any(|c| !c) {
            return Err(CurveError::BadMenu("incomplete coverage".into()));
        }
        Ok(CurveWitness { components, total_degree })
    }

    pub fn components(&self) -> &[CurveComponent<K>] {
        &self.components
    }

    pub fn total_degree(&self) -> usize {
        self.total_degree
    }
}

/// Evidence attached to an `Undecided` outcome: enough to judge whether the
/// set plausibly sits on an undetected space quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndecidedEvidence {
    /// (t, hilbert_function(Γ, t)) for small t.
    pub hilbert_profile: Vec<(usize, usize)>,
    /// Dimension of the degree-2 piece of the ideal.
    pub quadric_ideal_dim: usize,
    /// Span dimension 3 with a pencil of quadrics through Γ: the signature
    /// of a (2,2)-complete-intersection space quartic.
    pub quadric_pencil: bool,
}

#[derive(Clone, Debug)]
pub enum SearchOutcome<K: Scalar> {
    Found(CurveWitness<K>),
    AbsentDecisive,
    Undecided(UndecidedEvidence),
}

impl<K: Scalar> SearchOutcome<K> {
    pub fn found(&self) -> Option<&CurveWitness<K>> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_absent_decisive(&self) -> bool {
        matches!(self, SearchOutcome::AbsentDecisive)
    }
}

/// Component vocabulary for [`cover_by_components`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentKind {
    Line,
    PlaneConic,
    PlaneCubic,
    PlaneQuartic,
    RationalNormal,
}

impl ComponentKind {
    fn min_degree(self) -> usize {
        match self {
            ComponentKind::Line => 1,
            ComponentKind::PlaneConic => 2,
            ComponentKind::PlaneCubic => 3,
            ComponentKind::PlaneQuartic => 4,
            ComponentKind::RationalNormal => 3, // twisted cubic is the smallest beyond conics
        }
    }
}

struct Searcher<'a, K: Scalar> {
    gamma: &'a PointSet<K>,
    menu: Vec<ComponentKind>,
}

impl<'a, K: Scalar> Searcher<'a, K> {
    fn allows(&self, kind: ComponentKind) -> bool {
        self.menu.contains(&kind)
    }

    fn line_through(&self, i: usize, j: usize) -> LinearSubspace<K> {
        span(&[self.gamma.point(i).clone(), self.gamma.point(j).clone()]).expect("two points")
    }

    /// A line through a single point, using a standard basis direction.
    fn aux_line(&self, i: usize) -> LinearSubspace<K> {
        let p = self.gamma.point(i);
        let field = p.field();
        let n = p.ambient_dim();
        for j in 0..=n {
            let mut coords = vec![K::zero(&field); n + 1];
            coords[j] = K::one(&field);
            let e = ProjectivePoint::new(coords).expect("basis vector");
            if &e != p {
                return span(&[p.clone(), e]).expect("distinct points");
            }
        }
        unreachable!("some basis point differs from p")
    }

    fn on_subspace(&self, sub: &LinearSubspace<K>, candidates: &[usize]) -> Vec<usize> {
        candidates
            .iter()
            .copied()
            .filter(|&i| sub.contains(self.gamma.point(i)).unwrap_or(false))
            .collect()
    }

    fn subset_span(&self, indices: &[usize]) -> LinearSubspace<K> {
        let pts: Vec<ProjectivePoint<K>> =
            indices.iter().map(|&i| self.gamma.point(i).clone()).collect();
        span(&pts).expect("non-empty subset")
    }

    /// First kernel form of the given degree through the listed points,
    /// inside the plane's coordinates.
    fn plane_kernel_form(
        &self,
        plane: &LinearSubspace<K>,
        through: &[usize],
        degree: usize,
    ) -> Option<HomogeneousForm<K>> {
        let subset = self.gamma.subset(through);
        let restricted = restrict_to_subspace(&subset, plane).ok()?;
        let m = evaluation_matrix(&restricted, degree);
        let kernel = m.kernel_basis();
        let v = kernel.into_iter().next()?;
        Some(HomogeneousForm::new(MonomialBasis::new(2, degree), v))
    }

    /// Plane-curve component through the given points, with the assignment
    /// extended to every universe point on the same curve.
    fn plane_component(
        &self,
        plane: &LinearSubspace<K>,
        through: &[usize],
        degree: usize,
        universe: &[usize],
    ) -> Option<CurveComponent<K>> {
        let form = self.plane_kernel_form(plane, through, degree)?;
        let assigned: Vec<usize> = universe
            .iter()
            .copied()
            .filter(|&i| match plane.coordinates_of(self.gamma.point(i)) {
                Ok(coords) => form.eval_coords(&coords).is_zero(),
                Err(_) => false,
            })
            .collect();
        let squarefree = squarefree_status(&form);
        Some(CurveComponent::PlaneCurve {
            plane: plane.clone(),
            form,
            degree,
            squarefree,
            assigned,
        })
    }

    /// Rational normal curve through the first t+3 of `indices` (t = span
    /// dimension of that prefix), provided it swallows every listed point.
    fn rnc_component_through_all(&self, indices: &[usize], budget: usize) -> Option<CurveComponent<K>> {
        let sub_span = self.subset_span(indices);
        let t = sub_span.dim();
        if !(3..=4).contains(&t) || t > budget || indices.len() < t + 3 {
            return None;
        }
        let prefix: Vec<ProjectivePoint<K>> =
            indices.iter().take(t + 3).map(|&i| self.gamma.point(i).clone()).collect();
        let prefix_span = span(&prefix).ok()?;
        if prefix_span.dim() != t {
            return None;
        }
        let curve = fit_rnc_in_span(&prefix, &prefix_span).ok().flatten()?;
        let all_on = indices.iter().all(|&i| rnc_contains(&curve, self.gamma.point(i)));
        if !all_on {
            return None;
        }
        Some(CurveComponent::RationalNormal { curve, assigned: indices.to_vec() })
    }

    /// One component through every listed point, if the vocabulary offers
    /// one within the budget. Cheapest kinds first.
    fn whole_set_component(&self, indices: &[usize], budget: usize) -> Option<CurveComponent<K>> {
        if indices.is_empty() {
            return None;
        }
        if self.allows(ComponentKind::Line) {
            if indices.len() == 1 {
                return Some(CurveComponent::Line {
                    line: self.aux_line(indices[0]),
                    assigned: indices.to_vec(),
                });
            }
            let sub_span = self.subset_span(indices);
            if sub_span.dim() == 1 {
                return Some(CurveComponent::Line { line: sub_span, assigned: indices.to_vec() });
            }
        }
        if indices.len() >= 3 {
            let sub_span = self.subset_span(indices);
            if sub_span.dim() == 2 {
                for (kind, d) in [
                    (ComponentKind::PlaneConic, 2),
                    (ComponentKind::PlaneCubic, 3),
                    (ComponentKind::PlaneQuartic, 4),
                ] {
                    if d <= budget && self.allows(kind) {
                        if let Some(c) = self.plane_component(&sub_span, indices, d, indices) {
                            if c.assigned().len() >= indices.len() {
                                return Some(c);
                            }
                        }
                    }
                }
            }
            if self.allows(ComponentKind::RationalNormal) {
                if let Some(c) = self.rnc_component_through_all(indices, budget) {
                    return Some(c);
                }
            }
        }
        None
    }

    /// Deterministic backtracking cover of `indices` within the degree
    /// budget. Components are peeled through the first uncovered point,
    /// which is exhaustive for budgets up to 3: a cover in which that point
    /// sits on some component can always be rearranged so that one of the
    /// enumerated candidates appears, because covers restricted to subsets
    /// stay coverable.
    fn cover(&self, indices: &[usize], budget: usize) -> Option<Vec<CurveComponent<K>>> {
        if indices.is_empty() {
            return Some(Vec::new());
        }
        if budget == 0 {
            return None;
        }
        if let Some(c) = self.whole_set_component(indices, budget) {
            return Some(vec![c]);
        }
        let p0 = indices[0];
        // Lines through the first point.
        if self.allows(ComponentKind::Line) && budget >= 2 {
            for &q in &indices[1..] {
                let line = self.line_through(p0, q);
                let on_line = self.on_subspace(&line, indices);
                if on_line.len() < 2 {
                    continue;
                }
                let rest: Vec<usize> =
                    indices.iter().copied().filter(|i| !on_line.contains(i)).collect();
                if let Some(mut rec) = self.cover(&rest, budget - 1) {
                    let mut out = vec![CurveComponent::Line { line, assigned: on_line }];
                    out.append(&mut rec);
                    return Some(out);
                }
            }
        }
        // Plane curves through the first point: planes from triples, with up
        // to two stray points excluded so that crossings from other
        // components cannot poison the kernel.
        for (kind, d) in [(ComponentKind::PlaneConic, 2), (ComponentKind::PlaneCubic, 3)] {
            if !self.allows(kind) || d + 1 > budget {
                continue;
            }
            for qi in 1..indices.len() {
                for ri in qi + 1..indices.len() {
                    let (q, r) = (indices[qi], indices[ri]);
                    let triple = [p0, q, r];
                    let plane = self.subset_span(&triple);
                    if plane.dim() != 2 {
                        continue;
                    }
                    let in_plane = self.on_subspace(&plane, indices);
                    for strays in stray_subsets(&in_plane, &triple) {
                        let through: Vec<usize> =
                            in_plane.iter().copied().filter(|i| !strays.contains(i)).collect();
                        let Some(c) = self.plane_component(&plane, &through, d, indices) else {
                            continue;
                        };
                        if c.assigned().len() < 2 {
                            continue;
                        }
                        let rest: Vec<usize> = indices
                            .iter()
                            .copied()
                            .filter(|i| !c.assigned().contains(i))
                            .collect();
                        if let Some(mut rec) = self.cover(&rest, budget - d) {
                            let mut out = vec![c];
                            out.append(&mut rec);
                            return Some(out);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Subsets of `in_plane` of size at most 2 that exclude the defining
/// triple, in canonical order (empty set first).
fn stray_subsets(in_plane: &[usize], triple: &[usize]) -> Vec<Vec<usize>> {
    let free: Vec<usize> =
        in_plane.iter().copied().filter(|i| !triple.contains(i)).collect();
    let mut out = vec![Vec::new()];
    for (a, &x) in free.iter().enumerate() {
        out.push(vec![x]);
        for &y in &free[a + 1..] {
            out.push(vec![x, y]);
        }
    }
    out
}

fn all_indices<K: Scalar>(gamma: &PointSet<K>) -> Vec<usize> {
    (0..gamma.len()).collect()
}

fn evidence<K: Scalar>(gamma: &PointSet<K>) -> UndecidedEvidence {
    let m = gamma.len();
    let t_max = m.saturating_sub(1).clamp(1, 8);
    let hilbert_profile = (1..=t_max)
        .map(|t| (t, crate::cb::hilbert_function(gamma, t)))
        .collect();
    let quadric_ideal_dim = crate::cb::h0_ideal(gamma, 2);
    let span_dim = span(gamma.points()).map(|s| s.dim()).unwrap_or(0);
    UndecidedEvidence {
        hilbert_profile,
        quadric_ideal_dim,
        quadric_pencil: span_dim == 3 && quadric_ideal_dim >= 2,
    }
}

const FULL_MENU: [ComponentKind; 5] = [
    ComponentKind::Line,
    ComponentKind::PlaneConic,
    ComponentKind::PlaneCubic,
    ComponentKind::PlaneQuartic,
    ComponentKind::RationalNormal,
];

fn searcher<K: Scalar>(gamma: &PointSet<K>) -> Searcher<'_, K> {
    Searcher { gamma, menu: FULL_MENU.to_vec() }
}

/// Does Γ lie on a line? Exhaustive.
pub fn find_line<K: Scalar>(gamma: &PointSet<K>) -> SearchOutcome<K> {
    assert!(!gamma.is_empty(), "curve search requires a non-empty set");
    let s = searcher(gamma);
    let indices = all_indices(gamma);
    if gamma.len() == 1 {
        let comp = CurveComponent::Line { line: s.aux_line(0), assigned: indices };
        return SearchOutcome::Found(CurveWitness::new(gamma, vec![comp], 1).expect("verified"));
    }
    let sub_span = s.subset_span(&indices);
    if sub_span.dim() == 1 {
        let comp = CurveComponent::Line { line: sub_span, assigned: indices };
        return SearchOutcome::Found(CurveWitness::new(gamma, vec![comp], 1).expect("verified"));
    }
    SearchOutcome::AbsentDecisive
}

/// Does Γ lie on a reduced curve of degree 2 (a plane conic or two lines)?
/// Exhaustive.
pub fn find_degree2<K: Scalar>(gamma: &PointSet<K>) -> SearchOutcome<K> {
    if let SearchOutcome::Found(w) = find_line(gamma) {
        return SearchOutcome::Found(w);
    }
    let s = searcher(gamma);
    let indices = all_indices(gamma);
    if let Some(c) = s.whole_set_component(&indices, 2) {
        return SearchOutcome::Found(CurveWitness::new(gamma, vec![c], 2).expect("verified"));
    }
    let span_dim = s.subset_span(&indices).dim();
    if span_dim == 2 {
        // Coplanar with no conic through the set: two lines would multiply
        // to such a conic, so nothing of degree 2 exists.
        return SearchOutcome::AbsentDecisive;
    }
    let line_only = Searcher { gamma, menu: vec![ComponentKind::Line] };
    match line_only.cover(&indices, 2) {
        Some(components) => {
            SearchOutcome::Found(CurveWitness::new(gamma, components, 2).expect("verified"))
        }
        None => SearchOutcome::AbsentDecisive,
    }
}

/// Does Γ lie on a reduced curve of degree 3? Exhaustive: plane cubics,
/// twisted cubics, three lines and conic-plus-line are all enumerated.
pub fn find_degree3<K: Scalar>(gamma: &PointSet<K>) -> SearchOutcome<K> {
    if let SearchOutcome::Found(w) = find_degree2(gamma) {
        return SearchOutcome::Found(w);
    }
    let s = searcher(gamma);
    let indices = all_indices(gamma);
    if let Some(c) = s.whole_set_component(&indices, 3) {
        return SearchOutcome::Found(CurveWitness::new(gamma, vec![c], 3).expect("verified"));
    }
    if s.subset_span(&indices).dim() == 2 {
        // Coplanar: any degree-3 curve through Γ restricts to a plane cubic,
        // and the kernel is empty.
        return SearchOutcome::AbsentDecisive;
    }
    match s.cover(&indices, 3) {
        Some(components) => {
            SearchOutcome::Found(CurveWitness::new(gamma, components, 3).expect("verified"))
        }
        None => SearchOutcome::AbsentDecisive,
    }
}

/// Does Γ lie on a reduced curve of degree 4? Exhaustive for coplanar sets;
/// otherwise a failed search is honestly `Undecided`, since irreducible
/// space quartics that are not rational normal curves are not searched.
pub fn find_degree4<K: Scalar>(gamma: &PointSet<K>) -> SearchOutcome<K> {
    if let SearchOutcome::Found(w) = find_degree3(gamma) {
        return SearchOutcome::Found(w);
    }
    let s = searcher(gamma);
    let indices = all_indices(gamma);
    if let Some(c) = s.whole_set_component(&indices, 4) {
        return SearchOutcome::Found(CurveWitness::new(gamma, vec![c], 4).expect("verified"));
    }
    let span_dim = s.subset_span(&indices).dim();
    if span_dim == 2 {
        return SearchOutcome::AbsentDecisive; // no plane quartic through Γ
    }
    // Big component plus one line, with the line peeled from anywhere: the
    // big component need not pass through the first point.
    for i in 0..indices.len() {
        for j in i + 1..indices.len() {
            let line = s.line_through(indices[i], indices[j]);
            let on_line = s.on_subspace(&line, &indices);
            if on_line.len() < 2 {
                continue;
            }
            let rest: Vec<usize> =
                indices.iter().copied().filter(|x| !on_line.contains(x)).collect();
            if rest.len() < 3 {
                continue; // small residues are caught by the degree-3 search
            }
            let rest_span = s.subset_span(&rest);
            let mut big: Option<CurveComponent<K>> = None;
            if rest_span.dim() == 2 {
                big = s.plane_component(&rest_span, &rest, 3, &rest);
                if big.as_ref().is_some_and(|c| c.assigned().len() < rest.len()) {
                    big = None;
                }
            } else if rest_span.dim() == 3 {
                big = s.rnc_component_through_all(&rest, 3);
            }
            if let Some(big) = big {
                let comps = vec![CurveComponent::Line { line, assigned: on_line }, big];
                return SearchOutcome::Found(CurveWitness::new(gamma, comps, 4).expect("verified"));
            }
        }
    }
    if let Some(components) = s.cover(&indices, 4) {
        return SearchOutcome::Found(CurveWitness::new(gamma, components, 4).expect("verified"));
    }
    SearchOutcome::Undecided(evidence(gamma))
}

/// Entry point: search for a curve of degree at most `budget` (1..=4)
/// through Γ.
pub fn find_curve<K: Scalar>(gamma: &PointSet<K>, budget: usize) -> Result<SearchOutcome<K>, CurveError> {
    if gamma.is_empty() {
        return Err(CurveError::Geometry(crate::error::GeometryError::EmptySet));
    }
    match budget {
        1 => Ok(find_line(gamma)),
        2 => Ok(find_degree2(gamma)),
        3 => Ok(find_degree3(gamma)),
        4 => Ok(find_degree4(gamma)),
        _ => Err(CurveError::BadMenu(format!("degree budget {budget} not in 1..=4"))),
    }
}

/// Backtracking cover with an explicit component vocabulary. With the full
/// vocabulary this matches [`find_curve`]'s decisive searches; with a
/// restricted menu a failure is only decisive for budgets up to 3 when the
/// menu already contains every kind that can occur at that budget.
pub fn cover_by_components<K: Scalar>(
    gamma: &PointSet<K>,
    menu: &[ComponentKind],
    budget: usize,
) -> Result<SearchOutcome<K>, CurveError> {
    if gamma.is_empty() {
        return Err(CurveError::Geometry(crate::error::GeometryError::EmptySet));
    }
    if !(1..=4).contains(&budget) {
        return Err(CurveError::BadMenu(format!("degree budget {budget} not in 1..=4")));
    }
    if menu.is_empty() {
        return Err(CurveError::BadMenu("empty component vocabulary".into()));
    }
    if let Some(kind) = menu.iter().find(|k| k.min_degree() > budget) {
        return Err(CurveError::BadMenu(format!(
            "component {kind:?} cannot fit in degree budget {budget}"
        )));
    }
    let s = Searcher { gamma, menu: menu.to_vec() };
    let indices = all_indices(gamma);
    if let Some(components) = s.cover(&indices, budget) {
        return Ok(SearchOutcome::Found(CurveWitness::new(gamma, components, budget)?));
    }
    let complete = budget <= 3
        && menu.contains(&ComponentKind::Line)
        && (budget < 2 || menu.contains(&ComponentKind::PlaneConic))
        && (budget < 3
            || (menu.contains(&ComponentKind::PlaneCubic)
                && menu.contains(&ComponentKind::RationalNormal)));
    if complete {
        Ok(SearchOutcome::AbsentDecisive)
    } else {
        Ok(SearchOutcome::Undecided(evidence(gamma)))
    }
}

/// Plane-curve search for a coplanar set: the canonical first kernel form
/// of degree d on the span plane, as a component. Errors when the span is
/// not a plane.
pub fn find_plane_curve<K: Scalar>(
    gamma: &PointSet<K>,
    degree: usize,
) -> Result<Option<CurveComponent<K>>, CurveError> {
    if gamma.is_empty() {
        return Err(CurveError::Geometry(crate::error::GeometryError::EmptySet));
    }
    let sub_span = span(gamma.points())?;
    if sub_span.dim() != 2 {
        return Err(CurveError::SpanDimension { expected: 2, got: sub_span.dim() });
    }
    let s = searcher(gamma);
    let indices = all_indices(gamma);
    Ok(s.plane_component(&sub_span, &indices, degree, &indices))
}
