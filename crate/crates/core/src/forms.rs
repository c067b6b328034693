//! Analysis of ternary homogeneous forms: products, linear substitution,
//! common-factor detection and squarefreeness certification.
//!
//! Both detection routines reduce to one exact resultant computation. A form
//! f(x0,x1,x2) whose pure x0-power coefficient is nonzero stays degree-d in
//! x0 under the specialization x1 = 1, x2 = t, and every factor of f keeps a
//! constant x0-leading coefficient. The resultant of two such specialized
//! forms, taken in x0 over K[t] by fraction-free elimination of the Sylvester
//! matrix, vanishes identically exactly when the forms share a factor of
//! positive degree. When the pure x0 coefficient vanishes, an invertible
//! shear x1 -> x1 + a x0, x2 -> x2 + b x0 restores it without changing
//! either property.

use crate::field::Scalar;
use crate::geometry::{HomogeneousForm, MonomialBasis};
use crate::linalg::Matrix;
use crate::poly::{sylvester_resultant, Poly};

/// Reducedness certificate for a plane-curve witness form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SquarefreeStatus {
    /// The form has no repeated factor; verified by a derivative resultant.
    Certified,
    /// Not certified: repeated factor found, or the field characteristic is
    /// too small for the derivative test to be conclusive.
    Unverified,
}

/// Product of two forms over the same ambient space.
pub fn multiply_forms<K: Scalar>(f: &HomogeneousForm<K>, g: &HomogeneousForm<K>) -> HomogeneousForm<K> {
    let n = f.ambient_dim();
    assert_eq!(n, g.ambient_dim());
    let field = f
        .coeffs()
        .iter()
        .chain(g.coeffs().iter())
        .next()
        .map(K::field)
        .expect("forms have coefficients");
    let out_basis = MonomialBasis::new(n, f.degree() + g.degree());
    let index_of = |exps: &[u32]| -> usize {
        out_basis
            .exponents()
            .iter()
            .position(|e| e == exps)
            .expect("sum of exponents lies in the product basis")
    };
    let mut out = vec![K::zero(&field); out_basis.len()];
    for (i, a) in f.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.coeffs().iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let sum: Vec<u32> = f.basis().exponents()[i]
                .iter()
                .zip(g.basis().exponents()[j].iter())
                .map(|(x, y)| x + y)
                .collect();
            let idx = index_of(&sum);
            out[idx] = out[idx].add(&a.mul(b));
        }
    }
    HomogeneousForm::new(out_basis, out)
}

/// Composes a form with a linear substitution: variable `x_i` is replaced by
/// the linear form whose coefficients are row `i` of `sub`.
pub fn substitute_linear<K: Scalar>(f: &HomogeneousForm<K>, sub: &Matrix<K>) -> HomogeneousForm<K> {
    let n = f.ambient_dim();
    assert_eq!(sub.rows(), n + 1);
    assert_eq!(sub.cols(), n + 1);
    let field = *sub.field();
    let one_basis = MonomialBasis::new(n, 0);
    let unit = HomogeneousForm::new(one_basis, vec![K::one(&field)]);
    let linear_basis = MonomialBasis::new(n, 1);
    let replacements: Vec<HomogeneousForm<K>> = (0..=n)
        .map(|i| HomogeneousForm::new(linear_basis.clone(), sub.row(i).to_vec()))
        .collect();

    let mut acc: Option<HomogeneousForm<K>> = None;
    for (j, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = unit.clone();
        for (var, &e) in f.basis().exponents()[j].iter().enumerate() {
            for _ in 0..e {
                term = multiply_forms(&term, &replacements[var]);
            }
        }
        let scaled = HomogeneousForm::new(
            term.basis().clone(),
            term.coeffs().iter().map(|v| v.mul(c)).collect(),
        );
        acc = Some(match acc {
            None => scaled,
            Some(prev) => HomogeneousForm::new(
                prev.basis().clone(),
                prev.coeffs()
                    .iter()
                    .zip(scaled.coeffs().iter())
                    .map(|(a, b)| a.add(b))
                    .collect(),
            ),
        });
    }
    acc.unwrap_or_else(|| {
        let basis = MonomialBasis::new(n, f.degree());
        HomogeneousForm::new(basis.clone(), vec![K::zero(&field); basis.len()])
    })
}

/// Coefficient of the pure `x0^d` monomial, which is always the first
/// graded-lex basis element.
pub fn x0_lead_coefficient<K: Scalar>(f: &HomogeneousForm<K>) -> K {
    f.coeffs()[0].clone()
}

/// Coefficients of f(x0, 1, t) as polynomials in t, indexed by the x0 power
/// (ascending, length d+1). Ternary forms only.
pub fn pencil_coefficients<K: Scalar>(f: &HomogeneousForm<K>) -> Vec<Poly<K>> {
    assert_eq!(f.ambient_dim(), 2, "pencil specialization is for ternary forms");
    let d = f.degree();
    let field = f.coeffs()[0].field();
    let mut coeffs: Vec<Vec<K>> = vec![vec![K::zero(&field); d + 1]; d + 1];
    for (j, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = &f.basis().exponents()[j];
        let (e0, e2) = (e[0] as usize, e[2] as usize);
        coeffs[e0][e2] = coeffs[e0][e2].add(c);
    }
    coeffs.into_iter().map(Poly::from_coeffs).collect()
}

/// Finds a shear `x1 -> x1 + a x0, x2 -> x2 + b x0` making the pure
/// x0-power coefficient of every given form nonzero, and applies it. The
/// identity shear is preferred. Returns `None` when no shear in the search
/// range works, which can only happen over very small prime fields.
pub fn normalize_x0_lead<K: Scalar>(forms: &[&HomogeneousForm<K>]) -> Option<Vec<HomogeneousForm<K>>> {
    assert!(!forms.is_empty());
    let field = forms[0].coeffs()[0].field();
    if forms.iter().all(|f| !x0_lead_coefficient(f).is_zero()) {
        return Some(forms.iter().map(|f| (*f).clone()).collect());
    }
    let char = K::spec(&field).characteristic();
    let bound: i64 = if char == 0 {
        // Total zero count on the affine probe line is finite; a diagonal
        // sweep of this size always escapes it.
        forms.iter().map(|f| f.degree() as i64).sum::<i64>() + 2
    } else {
        char as i64
    };
    for s in 0..(2 * bound) {
        for a in 0..=s {
            let b = s - a;
            if a >= bound || b >= bound {
                continue;
            }
            let av = K::from_int(&field, a);
            let bv = K::from_int(&field, b);
            let mut shear = Matrix::identity(field, 3);
            *shear.get_mut(1, 0) = av;
            *shear.get_mut(2, 0) = bv;
            let sheared: Vec<HomogeneousForm<K>> =
                forms.iter().map(|f| substitute_linear(f, &shear)).collect();
            if sheared.iter().all(|f| !x0_lead_coefficient(f).is_zero()) {
                return Some(sheared);
            }
        }
    }
    None
}

/// Whether two ternary forms have no common factor of positive degree.
/// Exact; `None` when lead normalization fails (tiny field).
pub fn forms_coprime<K: Scalar>(f: &HomogeneousForm<K>, g: &HomogeneousForm<K>) -> Option<bool> {
    assert_eq!(f.ambient_dim(), 2);
    assert_eq!(g.ambient_dim(), 2);
    assert!(!f.is_zero() && !g.is_zero());
    let normalized = normalize_x0_lead(&[f, g])?;
    let fc = pencil_coefficients(&normalized[0]);
    let gc = pencil_coefficients(&normalized[1]);
    let res = sylvester_resultant(&fc, &gc);
    Some(!res.is_zero())
}

/// Squarefreeness certification for a ternary form. Conclusive only in
/// characteristic zero or when p exceeds the degree; otherwise the status
/// stays `Unverified` regardless of the underlying truth.
pub fn squarefree_status<K: Scalar>(f: &HomogeneousForm<K>) -> SquarefreeStatus {
    assert_eq!(f.ambient_dim(), 2);
    if f.is_zero() {
        return SquarefreeStatus::Unverified;
    }
    let d = f.degree();
    if d <= 1 {
        return SquarefreeStatus::Certified;
    }
    let field = f.coeffs()[0].field();
    let char = K::spec(&field).characteristic();
    if char != 0 && char <= d as u64 {
        return SquarefreeStatus::Unverified;
    }
    let Some(normalized) = normalize_x0_lead(&[f]) else {
        return SquarefreeStatus::Unverified;
    };
    let g = &normalized[0];
    let dg = g.partial(0);
    debug_assert!(!x0_lead_coefficient(g).is_zero());
    let gc = pencil_coefficients(g);
    let dgc = pencil_coefficients(&dg);
    let res = sylvester_resultant(&gc, &dgc);
    if res.is_zero() {
        SquarefreeStatus::Unverified
    } else {
        SquarefreeStatus::Certified
    }
}
