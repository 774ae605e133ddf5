//! Bivariate rational functions.
//!
//! Stored in lowest terms with a normalized denominator (primitive, positive
//! leading coefficient), so each function has a single printed form.
//! [`RationalFunction::equal`] still decides equality by cross-multiplication.

use std::fmt;

use super::poly::BivariatePoly;
use super::scalar::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RationalFunction<F> {
    num: BivariatePoly<F>,
    den: BivariatePoly<F>,
}

impl<F: Field> RationalFunction<F> {
    pub fn new(num: BivariatePoly<F>, den: BivariatePoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let (den, s) = den.normalized();
        Ok(Self {
            num: num.scale(&s),
            den,
        })
    }

    /// `num / (f_1 * ... * f_n)` for linear `f_i`. Each factor either
    /// divides the numerator or is kept; linear forms are irreducible, so the
    /// result is in lowest terms without a gcd computation.
    pub fn over_linear_factors(
        num: BivariatePoly<F>,
        factors: &[BivariatePoly<F>],
    ) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| f.total_degree() != Some(1)) {
            return Err(Error::Precondition(format!("{f} is not a linear form")));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let mut num = num;
        let mut den = BivariatePoly::one();
        for f in factors {
            match num.div_exact(f) {
                Some(q) => num = q,
                None => den = &den * f,
            }
        }
        let (den, s) = den.normalized();
        Ok(Self {
            num: num.scale(&s),
            den,
        })
    }

    pub fn zero() -> Self {
        Self {
            num: BivariatePoly::zero(),
            den: BivariatePoly::one(),
        }
    }

    pub fn from_poly(p: BivariatePoly<F>) -> Self {
        Self {
            num: p,
            den: BivariatePoly::one(),
        }
    }

    pub fn numerator(&self) -> &BivariatePoly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &BivariatePoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        let den = &self.den * &other.den;
        Self::new(num, den).expect("product of nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den)
            .expect("product of nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.num.scale(s), self.den.clone()).expect("denominator unchanged")
    }

    /// Equality as rational functions: `f.num * g.den == g.num * f.den`.
    pub fn equal(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Value at a point, `None` on a pole.
    pub fn eval(&self, x: &F, y: &F) -> Option<F> {
        let d = self.den.eval(x, y);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x, y) / d)
        }
    }
}

impl<F: Field> PartialEq for RationalFunction<F> {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &BivariatePoly<F>| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_constant() && self.den.coeff(super::poly::Monomial::ONE).is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
    }
}
