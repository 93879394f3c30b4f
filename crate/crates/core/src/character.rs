//! The cluster character `X_M` on objects of the cluster category.
//!
//! An object is seen through its image `FM` in `mod B` together with the
//! multiplicities of the shifted summands `ΣT_i`. The value is
//!
//! ```text
//! X_M = prod_i x_i^{shift_i} * x^{-coind FM} * sum_e χ(Gr_e FM) * prod_i x_i^{<S_i, e>_a}
//! ```
//!
//! and on every call it is compared with the form
//! `sum_e χ(Gr_e FM) prod_i x_i^{<S_i, e>_a - <S_i, FM>}`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::forms::{antisym_form_matrix, coindex, euler_form};
use crate::grassmannian::{submodule_classes_with, GrassmannianOptions};
use crate::laurent::ExponentVector;
use crate::modules::Representation;
use crate::quiver::{simple, Algebra};
use crate::LaurentPoly;

/// An object of the cluster category as seen by the cluster character.
#[derive(Clone, Debug)]
pub struct CCObject {
    module: Representation,
    shifts: Vec<u32>,
}

impl CCObject {
    pub fn new(module: Representation, shifts: Vec<u32>) -> Result<Self> {
        let n = module.algebra().vertex_count();
        if shifts.len() != n {
            return Err(Error::Dimension(format!(
                "{} shift multiplicities for {n} vertices",
                shifts.len()
            )));
        }
        Ok(CCObject { module, shifts })
    }

    pub fn from_module(module: Representation) -> Self {
        let n = module.algebra().vertex_count();
        CCObject {
            module,
            shifts: vec![0; n],
        }
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        Self::from_module(Representation::zero(algebra))
    }

    /// The object `ΣT_i`.
    pub fn shifted_projective(algebra: Arc<Algebra>, i: usize) -> Self {
        let mut obj = Self::zero(algebra);
        obj.shifts[i] = 1;
        obj
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.module.algebra()
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero() && self.shifts.iter().all(|&s| s == 0)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Ok(CCObject {
            module: self.module.direct_sum(&other.module)?,
            shifts: self.shifts.iter().zip(&other.shifts).map(|(a, b)| a + b).collect(),
        })
    }
}

/// `X` of an object with default Grassmannian options.
pub fn cc_value(obj: &CCObject) -> Result<LaurentPoly> {
    cc_value_with(obj, &GrassmannianOptions::default())
}

pub fn cc_value_with(obj: &CCObject, opts: &GrassmannianOptions) -> Result<LaurentPoly> {
    let m = &obj.module;
    let a = m.algebra();
    let n = a.vertex_count();
    let form = antisym_form_matrix(a)?;
    let coind = coindex(m)?;
    let classes = submodule_classes_with(m, opts)?;

    let direct: Vec<i64> = (0..n)
        .map(|i| euler_form(&simple(a, i), m))
        .collect::<Result<_>>()?;
    let direct = ExponentVector::new(direct);

    let mut sum = LaurentPoly::zero(n);
    let mut definitional = LaurentPoly::zero(n);
    for (e, chi) in &classes {
        let exps = ExponentVector::new(form.apply(e));
        let c = BigInt::from(*chi);
        sum = &sum + &LaurentPoly::monomial(exps.clone(), c.clone());
        definitional = &definitional + &LaurentPoly::monomial(exps.sub(&direct), c);
    }
    let neg_coind = ExponentVector::new(coind.iter().map(|c| -c).collect());
    let value = sum.mul_monomial(&neg_coind);
    if value != definitional {
        return Err(Error::Consistency(format!(
            "exponent forms disagree: {value} vs {definitional}"
        )));
    }
    let shifts = ExponentVector::new(obj.shifts.iter().map(|&s| s as i64).collect());
    Ok(value.mul_monomial(&shifts))
}

/// `X_{a ⊕ b}`, checked against `X_a * X_b`.
pub fn cc_product(a: &CCObject, b: &CCObject) -> Result<LaurentPoly> {
    cc_product_with(a, b, &GrassmannianOptions::default())
}

pub fn cc_product_with(a: &CCObject, b: &CCObject, opts: &GrassmannianOptions) -> Result<LaurentPoly> {
    let sum = cc_value_with(&a.direct_sum(b)?, opts)?;
    let product = &cc_value_with(a, opts)? * &cc_value_with(b, opts)?;
    if sum != product {
        return Err(Error::Consistency(format!(
            "X of the direct sum is {sum}, product of the factors is {product}"
        )));
    }
    Ok(sum)
}

/// Outcome of checking `X_L X_M = X_B + X_B'`.
#[derive(Clone, Debug)]
pub struct TriangleReport {
    pub holds: bool,
    pub x_l: LaurentPoly,
    pub x_m: LaurentPoly,
    pub x_b: LaurentPoly,
    pub x_b_prime: LaurentPoly,
    /// `X_L X_M - (X_B + X_B')`.
    pub difference: LaurentPoly,
}

impl TriangleReport {
    pub fn render(&self, names: &[String]) -> String {
        format!(
            "X_L  = {}\nX_M  = {}\nX_B  = {}\nX_B' = {}\nX_L*X_M - (X_B + X_B') = {}\n{}",
            self.x_l.render_with(names),
            self.x_m.render_with(names),
            self.x_b.render_with(names),
            self.x_b_prime.render_with(names),
            self.difference.render_with(names),
            if self.holds { "identity holds" } else { "identity FAILS" }
        )
    }
}

/// Checks the multiplication identity for caller-supplied middle terms.
pub fn verify_triangle(
    l: &CCObject,
    m: &CCObject,
    b: &CCObject,
    b_prime: &CCObject,
) -> Result<TriangleReport> {
    verify_triangle_with(l, m, b, b_prime, &GrassmannianOptions::default())
}

pub fn verify_triangle_with(
    l: &CCObject,
    m: &CCObject,
    b: &CCObject,
    b_prime: &CCObject,
    opts: &GrassmannianOptions,
) -> Result<TriangleReport> {
    let alg = l.algebra();
    for o in [m, b, b_prime] {
        if !alg.same_as(o.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let x_l = cc_value_with(l, opts)?;
    let x_m = cc_value_with(m, opts)?;
    let x_b = cc_value_with(b, opts)?;
    let x_b_prime = cc_value_with(b_prime, opts)?;
    let difference = &(&x_l * &x_m) - &(&x_b + &x_b_prime);
    Ok(TriangleReport {
        holds: difference.is_zero(),
        x_l,
        x_m,
        x_b,
        x_b_prime,
        difference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::default_names;

    const A4: &str = "[quiver]\nvertices: 1 2 3 4\narrow: d 2 1\narrow: alpha 2 3\narrow: beta 3 4\narrow: gamma 4 2\n[relations]\nrel: beta.alpha\nrel: gamma.beta\nrel: alpha.gamma\n";

    fn a4() -> Arc<Algebra> {
        Arc::new(Algebra::parse(A4).unwrap())
    }

    fn a4_m(a: &Arc<Algebra>) -> CCObject {
        CCObject::from_module(
            Representation::parse("[module]\ndims: 1 1 0 0\nmatrix d: [[1]]\n", a.clone()).unwrap(),
        )
    }

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse_with(s, &default_names(4)).unwrap()
    }

    #[test]
    fn shifted_projective_is_a_variable() {
        let a = a4();
        for i in 0..4 {
            let x = cc_value(&CCObject::shifted_projective(a.clone(), i)).unwrap();
            assert_eq!(x, LaurentPoly::var(4, i));
        }
        assert_eq!(cc_value(&CCObject::zero(a)).unwrap(), LaurentPoly::one(4));
    }

    #[test]
    fn a4_value() {
        let a = a4();
        let x = cc_value(&a4_m(&a)).unwrap();
        assert_eq!(x, lp("x1^-1*x4 + x1^-1*x2^-1*x4 + x2^-1*x3"));
        assert_eq!(
            x.render_fraction(&a.variable_names()),
            "(x2*x4 + x4 + x1*x3) / (x1*x2)"
        );
    }

    #[test]
    fn direct_sum_law() {
        let a = a4();
        let m = a4_m(&a);
        let z = CCObject::zero(a.clone());
        assert_eq!(cc_product(&z, &m).unwrap(), cc_value(&m).unwrap());
        let s2 = CCObject::shifted_projective(a.clone(), 1);
        assert_eq!(cc_product(&s2, &s2).unwrap(), LaurentPoly::var(4, 1).pow(2));
        let s3 = CCObject::shifted_projective(a.clone(), 2);
        assert_eq!(
            cc_product(&m, &s3).unwrap(),
            &LaurentPoly::var(4, 2) * &cc_value(&m).unwrap()
        );
    }

    #[test]
    fn shift_length_checked() {
        let a = a4();
        let r = Representation::zero(a);
        assert!(CCObject::new(r, vec![0, 1]).is_err());
    }
}
