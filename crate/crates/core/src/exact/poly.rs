//! Sparse bivariate polynomials in `x`, `y` over an exact field.
//!
//! Monomials are ordered graded-lexicographically with `x > y`. Printing walks
//! the terms in that order, except that the first term with a positive
//! coefficient is moved to the front, so `-x + y + 1` prints as `y - x + 1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::Field;
use super::univariate::UniPoly;

/// Exponent pair `x^x * y^y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> BivariatePoly<F> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: F, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::term(F::one(), Monomial::new(1, 0))
    }

    pub fn y() -> Self {
        Self::term(F::one(), Monomial::new(0, 1))
    }

    /// `a*x + b*y + c`.
    pub fn linear(a: F, b: F, c: F) -> Self {
        Self::from_terms([
            (Monomial::new(1, 0), a),
            (Monomial::new(0, 1), b),
            (Monomial::ONE, c),
        ])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn coeff(&self, m: Monomial) -> F {
        self.terms.get(&m).cloned().unwrap_or_else(F::zero)
    }

    /// Terms from the leading monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &F)> + '_ {
        self.terms.iter().rev().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(Monomial, &F)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        self.terms.iter().fold(F::zero(), |acc, (m, c)| {
            acc + c.clone()
                * num_traits::pow(x.clone(), m.x as usize)
                * num_traits::pow(y.clone(), m.y as usize)
        })
    }

    /// Canonical associate: primitive integral coefficients (for rationals)
    /// and a positive leading coefficient. Returns the polynomial and the
    /// factor it was multiplied by.
    pub fn normalized(&self) -> (Self, F) {
        let Some((_, lc)) = self.leading_term() else {
            return (Self::zero(), F::one());
        };
        let coeffs: Vec<F> = self.terms.values().cloned().collect();
        let mut s = F::primitive_scale(&coeffs);
        if lc.is_negative() {
            s = -s;
        }
        (self.scale(&s), s)
    }

    /// `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dm, dc) = divisor.leading_term()?;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return None;
            }
            let m = Monomial::new(rm.x - dm.x, rm.y - dm.y);
            let c = rc.clone() / dc.clone();
            let t = Self::term(c, m);
            rem = &rem - &(&t * divisor);
            quot.add_term(m, t.coeff(m));
        }
        Some(quot)
    }

    /// Normalized greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized().0;
        }
        if other.is_zero() {
            return self.normalized().0;
        }
        if coprime_after_specializing(self, other)
            && coprime_after_specializing(&self.swapped(), &other.swapped())
        {
            return Self::one();
        }
        let (ya, yb) = (YPoly::from_bivariate(self), YPoly::from_bivariate(other));
        let content = ya.content().gcd(&yb.content());
        let (mut a, mut b) = (ya.primitive_part(), yb.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        let g = a.primitive_part().to_bivariate();
        let c = YPoly(vec![content]).to_bivariate();
        (&g * &c).normalized().0
    }
}

impl<F: Field> BivariatePoly<F> {
    /// The same polynomial with `x` and `y` exchanged.
    fn swapped(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x), c.clone()))
                .collect(),
        }
    }
}

/// Sufficient test for `deg_y gcd(a, b) = 0`: substitute an `x0` at which
/// the leading `y`-coefficient of `a` survives. The gcd's leading coefficient
/// divides that of `a`, so its `y`-degree is kept, and it divides both
/// specializations.
fn coprime_after_specializing<F: Field>(a: &BivariatePoly<F>, b: &BivariatePoly<F>) -> bool {
    let (ya, yb) = (YPoly::from_bivariate(a), YPoly::from_bivariate(b));
    let Some(lc) = ya.0.last() else {
        return false;
    };
    let mut x0 = F::zero();
    while lc.eval(&x0).is_zero() {
        x0 = x0 + F::one();
    }
    let at = |p: &YPoly<F>| UniPoly::new(p.0.iter().map(|c| c.eval(&x0)).collect());
    at(&ya).gcd(&at(&yb)).degree() == Some(0)
}

impl<F: Field> Add for &BivariatePoly<F> {
    type Output = BivariatePoly<F>;
    fn add(self, rhs: Self) -> BivariatePoly<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<F: Field> Neg for &BivariatePoly<F> {
    type Output = BivariatePoly<F>;
    fn neg(self) -> BivariatePoly<F> {
        BivariatePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<F: Field> Sub for &BivariatePoly<F> {
    type Output = BivariatePoly<F>;
    fn sub(self, rhs: Self) -> BivariatePoly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &BivariatePoly<F> {
    type Output = BivariatePoly<F>;
    fn mul(self, rhs: Self) -> BivariatePoly<F> {
        let mut out = BivariatePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for BivariatePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(Monomial, &F)> = self.terms().collect();
        if let Some(pos) = terms.iter().position(|(_, c)| c.is_positive()) {
            let t = terms.remove(pos);
            terms.insert(0, t);
        }
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mono = format_monomial(m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn format_monomial(m: Monomial) -> String {
    let part = |v: &str, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        e => Some(format!("{v}^{e}")),
    };
    [part("x", m.x), part("y", m.y)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

/// Polynomial in `y` with coefficients in `F[x]`; index is the `y` exponent.
#[derive(Clone, Debug)]
struct YPoly<F>(Vec<UniPoly<F>>);

impl<F: Field> YPoly<F> {
    fn from_bivariate(p: &BivariatePoly<F>) -> Self {
        let deg_y = p.terms.keys().map(|m| m.y).max().unwrap_or(0) as usize;
        let mut rows: Vec<Vec<F>> = vec![Vec::new(); deg_y + 1];
        for (m, c) in &p.terms {
            let row = &mut rows[m.y as usize];
            if row.len() <= m.x as usize {
                row.resize(m.x as usize + 1, F::zero());
            }
            row[m.x as usize] = c.clone();
        }
        Self(rows.into_iter().map(UniPoly::new).collect()).trimmed()
    }

    fn to_bivariate(&self) -> BivariatePoly<F> {
        let mut out = BivariatePoly::zero();
        for (ey, coeff) in self.0.iter().enumerate() {
            for (ex, c) in coeff.coeffs().iter().enumerate() {
                out.add_term(Monomial::new(ex as u32, ey as u32), c.clone());
            }
        }
        out
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(UniPoly::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn content(&self) -> UniPoly<F> {
        self.0.iter().fold(UniPoly::zero(), |acc, c| acc.gcd(c))
    }

    fn primitive_part(&self) -> Self {
        let c = self.content();
        let parts: Vec<UniPoly<F>> = self.0.iter().map(|a| a.div_rem(&c).0).collect();
        let all: Vec<F> = parts
            .iter()
            .flat_map(|p| p.coeffs().iter().cloned())
            .collect();
        let s = F::primitive_scale(&all);
        Self(parts.iter().map(|p| p.scale(&s)).collect()).trimmed()
    }

    /// `lc(b)^e * self mod b` with respect to `y`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let n = b.degree();
        let lc = b.0[n].clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= n {
            let shift = r.degree() - n;
            let t = r.0[r.degree()].clone();
            let mut next: Vec<UniPoly<F>> = r.0.iter().map(|c| c * &lc).collect();
            for (j, bc) in b.0.iter().enumerate() {
                next[shift + j] = &next[shift + j] - &(&t * bc);
            }
            r = Self(next).trimmed();
        }
        r
    }
}
