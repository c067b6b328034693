//! Univariate polynomials over a [`Scalar`] field.
//!
//! Coefficients are stored in ascending degree with no trailing zeros; the
//! zero polynomial is the empty coefficient vector, which conveniently needs
//! no field descriptor. Polynomials also implement the fraction-free
//! [`Domain`] contract, so determinants of matrices with polynomial entries
//! (Sylvester resultants) can be computed exactly by Bareiss elimination.

use crate::bareiss::{bareiss_det, Domain};
use crate::field::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<K: Scalar> {
    coeffs: Vec<K>,
}

impl<K: Scalar> Poly<K> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: K) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monic linear polynomial `t - root`.
    pub fn linear_from_root(field: &K::Field, root: &K) -> Self {
        Poly::from_coeffs(vec![root.neg(), K::one(field)])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(K::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (longer, shorter) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = longer.coeffs.clone();
        for (i, c) in shorter.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(K::neg).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let field = self.coeffs[0].field();
        let mut out = vec![K::zero(&field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn eval(&self, t: &K) -> K {
        let field = t.field();
        let mut acc = K::zero(&field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let field = self.coeffs[0].field();
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&K::from_int(&field, i as i64)))
            .collect();
        Poly::from_coeffs(out)
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        if self.is_zero() || self.coeffs.len() < rhs.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let field = rhs.coeffs[0].field();
        let lead_inv = rhs.leading().unwrap().inv().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let dq = self.coeffs.len() - rhs.coeffs.len();
        let mut quot = vec![K::zero(&field); dq + 1];
        for k in (0..=dq).rev() {
            let top = rem[k + rhs.coeffs.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.mul(&lead_inv);
            for (i, b) in rhs.coeffs.iter().enumerate() {
                let t = q.mul(b);
                rem[k + i] = rem[k + i].sub(&t);
            }
            quot[k] = q;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm; gcd(0, 0)
    /// is the zero polynomial.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            None => a,
            Some(lead) => {
                let inv = lead.inv().expect("leading coefficient is nonzero");
                a.scale(&inv)
            }
        }
    }

    /// Product of monic linear factors over the listed candidate roots.
    pub fn roots_among<'a>(&self, candidates: impl Iterator<Item = &'a K>) -> Vec<K>
    where
        K: 'a,
    {
        candidates.filter(|t| self.eval(t).is_zero()).cloned().collect()
    }
}

impl<K: Scalar> Domain for Poly<K> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }

    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(r.is_zero(), "inexact polynomial division in fraction-free elimination");
        q
    }
}

/// Resultant of two polynomials whose coefficients are themselves
/// polynomials: the determinant of the Sylvester matrix over `K[t]`,
/// computed fraction-free. Used to test plane forms for common factors.
///
/// `f` and `g` are given by their coefficient lists in the *outer* variable,
/// ascending; both leading coefficients must be nonzero.
pub fn sylvester_resultant<K: Scalar>(f: &[Poly<K>], g: &[Poly<K>]) -> Poly<K> {
    let df = f.len() - 1;
    let dg = g.len() - 1;
    assert!(!f[df].is_zero() && !g[dg].is_zero(), "leading coefficients must be nonzero");
    if df == 0 {
        // Res(c, g) = c^{deg g}
        let mut acc = Poly::constant_one_like(&f[0]);
        for _ in 0..dg {
            acc = acc.mul(&f[0]);
        }
        return acc;
    }
    if dg == 0 {
        let mut acc = Poly::constant_one_like(&g[0]);
        for _ in 0..df {
            acc = acc.mul(&g[0]);
        }
        return acc;
    }
    let n = df + dg;
    let mut rows = Vec::with_capacity(n);
    for shift in 0..dg {
        let mut row = vec![Poly::zero(); n];
        for (i, c) in f.iter().enumerate() {
            // Row lists coefficients of x^{df + dg - 1 - ...}; descending order.
            row[shift + (df - i)] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..df {
        let mut row = vec![Poly::zero(); n];
        for (i, c) in g.iter().enumerate() {
            row[shift + (dg - i)] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

impl<K: Scalar> Poly<K> {
    fn constant_one_like(sample: &Poly<K>) -> Poly<K> {
        let field = sample
            .coeffs
            .first()
            .map(K::field)
            .expect("need a nonzero sample to infer the field");
        Poly::constant(K::one(&field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField};

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(field: PrimeField, cs: &[i64]) -> Poly<Fp> {
        Poly::from_coeffs(cs.iter().map(|&c| field.element(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let f = fp(13);
        // (t-2)(t-3) and (t-2)(t-5)
        let a = poly(f, &[6, -5, 1]);
        let b = poly(f, &[10, -7, 1]);
        let g = a.gcd(&b);
        assert_eq!(g, poly(f, &[-2, 1]));

        let (q, r) = a.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, poly(f, &[-3, 1]));
    }

    #[test]
    fn eval_and_roots() {
        let f = fp(11);
        let p = poly(f, &[-6, 11, -6, 1]); // (t-1)(t-2)(t-3)
        let all: Vec<Fp> = crate::field::fp_elements(&f).collect();
        let roots = p.roots_among(all.iter());
        assert_eq!(roots, vec![f.element(1), f.element(2), f.element(3)]);
    }

    #[test]
    fn resultant_detects_common_factor() {
        let f = fp(11);
        // Constant coefficient polynomials: plain numeric resultant.
        let lift = |cs: &[i64]| -> Vec<Poly<Fp>> {
            cs.iter().map(|&c| Poly::constant(f.element(c))).collect()
        };
        // Res((t-1)(t-2), (t-1)(t-3)) = 0 via common root t=1.
        let a = lift(&[2, -3, 1]);
        let b = lift(&[3, -4, 1]);
        assert!(sylvester_resultant(&a, &b).is_zero());

        // Res(t^2+1, t+5) over F_11: evaluate t^2+1 at t=-5 -> 26 = 4 (mod 11).
        let a = lift(&[1, 0, 1]);
        let b = lift(&[5, 1]);
        let r = sylvester_resultant(&a, &b);
        assert_eq!(r, Poly::constant(f.element(4)));
    }
}
