//! Binomial equations from kernel lattices.
//!
//! A kernel vector `v` of `A` gives `x^{v+} - x^{v-}`, which vanishes on the
//! image of the torus. A lattice basis only cuts out `X_A` off the coordinate
//! hyperplanes; no saturation is attempted, hence [`BinomialSystem::torus_only`].
//!
//! Text form: `x0*x2^3 - x1^3*x3`; zero exponents and `^1` are elided, and an
//! empty monomial prints as `1`.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::lattice::kernel_lattice;
use crate::toric::Configuration;
use crate::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binomial {
    plus: Vec<u64>,
    minus: Vec<u64>,
}

impl Binomial {
    /// `x^plus - x^minus`; the supports must be disjoint.
    pub fn new(plus: Vec<u64>, minus: Vec<u64>) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(Error::DimensionMismatch(format!(
                "exponent vectors of lengths {} and {}",
                plus.len(),
                minus.len()
            )));
        }
        if plus.iter().zip(&minus).any(|(a, b)| *a != 0 && *b != 0) {
            return Err(Error::Precondition("monomials share a variable".into()));
        }
        Ok(Self { plus, minus })
    }

    /// Splits an integer vector into positive and negative parts.
    pub fn from_vector(v: &[Int]) -> Result<Self> {
        let part = |x: &Int| {
            x.to_u64()
                .ok_or_else(|| Error::Unsupported(format!("exponent {x} does not fit in u64")))
        };
        let mut plus = Vec::with_capacity(v.len());
        let mut minus = Vec::with_capacity(v.len());
        for x in v {
            if x.is_negative() {
                plus.push(0);
                minus.push(part(&-x)?);
            } else {
                plus.push(part(x)?);
                minus.push(0);
            }
        }
        Ok(Self { plus, minus })
    }

    pub fn plus(&self) -> &[u64] {
        &self.plus
    }

    pub fn minus(&self) -> &[u64] {
        &self.minus
    }

    pub fn num_vars(&self) -> usize {
        self.plus.len()
    }

    /// `plus - minus`.
    pub fn exponent_vector(&self) -> Vec<Int> {
        self.plus
            .iter()
            .zip(&self.minus)
            .map(|(a, b)| Int::from(*a) - Int::from(*b))
            .collect()
    }

    pub fn plus_degree(&self) -> u64 {
        self.plus.iter().sum()
    }

    pub fn minus_degree(&self) -> u64 {
        self.minus.iter().sum()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.plus_degree() == self.minus_degree()
    }

    /// Total degree of the larger monomial.
    pub fn degree(&self) -> u64 {
        self.plus_degree().max(self.minus_degree())
    }

    /// Value of `x^plus - x^minus` at a rational point.
    pub fn eval(&self, x: &[Rat]) -> Result<Rat> {
        if x.len() != self.num_vars() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, binomial has {} variables",
                x.len(),
                self.num_vars()
            )));
        }
        let mono = |e: &[u64]| -> Result<Rat> {
            let mut v = Rat::one();
            for (xi, &ei) in x.iter().zip(e) {
                let ei = usize::try_from(ei)
                    .map_err(|_| Error::Unsupported(format!("exponent {ei} too large")))?;
                v *= num_traits::pow(xi.clone(), ei);
            }
            Ok(v)
        };
        Ok(mono(&self.plus)? - mono(&self.minus)?)
    }

    /// Parses the text form over `num_vars` variables.
    pub fn parse(text: &str, num_vars: usize) -> Result<Self> {
        let (lhs, rhs) = text
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("expected `lhs - rhs`, got `{text}`")))?;
        Self::new(
            parse_monomial(lhs, num_vars)?,
            parse_monomial(rhs, num_vars)?,
        )
    }
}

fn parse_monomial(text: &str, n: usize) -> Result<Vec<u64>> {
    let text = text.trim();
    let mut exps = vec![0u64; n];
    if text == "1" {
        return Ok(exps);
    }
    let bad = || Error::Parse(format!("bad monomial `{text}`"));
    for factor in text.split('*') {
        let factor = factor.trim();
        let rest = factor.strip_prefix('x').ok_or_else(bad)?;
        let (var, exp) = match rest.split_once('^') {
            Some((v, e)) => (v, e.parse::<u64>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let var: usize = var.parse().map_err(|_| bad())?;
        if var >= n {
            return Err(Error::Parse(format!(
                "variable x{var} out of range for {n} variables"
            )));
        }
        exps[var] += exp;
    }
    Ok(exps)
}

fn format_monomial(e: &[u64]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| {
            if k == 1 {
                format!("x{i}")
            } else {
                format!("x{i}^{k}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} - {}",
            format_monomial(&self.plus),
            format_monomial(&self.minus)
        )
    }
}

/// Binomials from a kernel-lattice basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialSystem {
    pub binomials: Vec<Binomial>,
    /// Always true: the system describes `X_A` only on the torus.
    pub torus_only: bool,
}

pub fn binomial_generators(a: &Configuration) -> Result<BinomialSystem> {
    let kernel = kernel_lattice(a.matrix());
    let binomials = (0..kernel.rank())
        .map(|i| Binomial::from_vector(kernel.vector(i)))
        .collect::<Result<_>>()?;
    Ok(BinomialSystem {
        binomials,
        torus_only: true,
    })
}

/// Whether `plus - minus` lies in the kernel lattice of `A`.
pub fn vanishes_on_torus(b: &Binomial, a: &Configuration) -> Result<bool> {
    if b.num_vars() != a.d() + 1 {
        return Err(Error::DimensionMismatch(format!(
            "binomial has {} variables, configuration has {} columns",
            b.num_vars(),
            a.d() + 1
        )));
    }
    Ok(kernel_lattice(a.matrix()).contains(&b.exponent_vector()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceReport {
    pub binomial: Binomial,
    /// Equation degree; equals the degree of the hypersurface when the
    /// binomial is irreducible, which is not checked.
    pub degree: u64,
}

/// The generator of a rank-one kernel lattice, signed so that its first
/// nonzero entry is positive.
pub fn hypersurface_equation(a: &Configuration) -> Result<HypersurfaceReport> {
    let kernel = kernel_lattice(a.matrix());
    if kernel.rank() != 1 {
        return Err(Error::CorankNotOne(kernel.rank()));
    }
    let mut v = kernel.vector(0).to_vec();
    if v.iter()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_negative)
    {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    let binomial = Binomial::from_vector(&v)?;
    Ok(HypersurfaceReport {
        degree: binomial.degree(),
        binomial,
    })
}
