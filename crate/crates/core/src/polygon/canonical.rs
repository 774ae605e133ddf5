//! Canonical forms of lattice polygons.
//!
//! A triangle with inward edge forms `L1, L2, L3` has coefficient
//! `|det E| / (L1 L2 L3)`, `E` being the 3x3 matrix of the forms'
//! `(a, b, c)` rows. Polygons are summed over a fan of triangles.

use std::fmt;

use num_traits::Signed;

use super::{LatticePolygon, LinearForm};
use crate::error::{Error, Result};
use crate::exact::elimination::determinant;
use crate::{Int, IntMatrix, Poly2, Rat, RatFn2};

/// Coefficient of `dx ^ dy`, together with the polygon's edge forms so it
/// can be printed as `numerator / (L1*L2*...)`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    coefficient: RatFn2,
    edges: Vec<LinearForm>,
    numerator: Poly2,
}

impl CanonicalForm {
    fn from_coefficient(coefficient: RatFn2, edges: Vec<LinearForm>) -> Result<Self> {
        let product = edges
            .iter()
            .fold(Poly2::one(), |acc, l| &acc * &form_poly(l));
        let cofactor = product
            .div_exact(coefficient.denominator())
            .ok_or_else(|| {
                Error::Inconsistent(format!(
                    "denominator {} does not divide the product of edge forms",
                    coefficient.denominator()
                ))
            })?;
        let numerator = coefficient.numerator() * &cofactor;
        Ok(Self {
            coefficient,
            edges,
            numerator,
        })
    }

    pub fn coefficient(&self) -> &RatFn2 {
        &self.coefficient
    }

    /// Edge forms in counterclockwise order; their product is the printed
    /// denominator.
    pub fn edges(&self) -> &[LinearForm] {
        &self.edges
    }

    /// `coefficient * product of edge forms`.
    pub fn numerator(&self) -> &Poly2 {
        &self.numerator
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.coefficient.equal(&other.coefficient)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Poly2| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        let den: Vec<String> = self.edges.iter().map(|l| wrap(&form_poly(l))).collect();
        write!(f, "{} / ({})", wrap(&self.numerator), den.join("*"))
    }
}

pub(crate) fn form_poly(l: &LinearForm) -> Poly2 {
    let q = |v: &Int| Rat::from_integer(v.clone());
    Poly2::linear(q(&l.a), q(&l.b), q(&l.c))
}

/// `|det E|` for the 3x3 matrix of `(a, b, c)` rows.
fn triangle_constant(forms: &[LinearForm]) -> Result<Int> {
    let e = IntMatrix::from_rows(
        forms
            .iter()
            .map(|l| vec![l.a.clone(), l.b.clone(), l.c.clone()])
            .collect(),
    )?;
    Ok(determinant(&e)?.abs())
}

fn triangle_coefficient(forms: &[LinearForm]) -> Result<RatFn2> {
    let num = Poly2::constant(Rat::from_integer(triangle_constant(forms)?));
    let factors: Vec<Poly2> = forms.iter().map(form_poly).collect();
    RatFn2::over_linear_factors(num, &factors)
}

/// `Some(1)` or `Some(-1)` when `l = +-m`.
fn line_sign(l: &LinearForm, m: &LinearForm) -> Option<i32> {
    if l == m {
        Some(1)
    } else if l.a == -&m.a && l.b == -&m.b && l.c == -&m.c {
        Some(-1)
    } else {
        None
    }
}

pub fn canonical_form_triangle(t: &LatticePolygon) -> Result<CanonicalForm> {
    if t.len() != 3 {
        return Err(Error::Precondition(format!(
            "triangle expected, polygon has {} vertices",
            t.len()
        )));
    }
    let edges = t.edge_forms();
    CanonicalForm::from_coefficient(triangle_coefficient(&edges)?, edges)
}

/// Sum over the fan of triangles from vertex `anchor`.
pub fn canonical_form_fan(p: &LatticePolygon, anchor: usize) -> Result<CanonicalForm> {
    if anchor >= p.len() {
        return Err(Error::Precondition(format!(
            "fan anchor {anchor} out of range for {} vertices",
            p.len()
        )));
    }
    // Every triangle term is put over the product of all lines in the fan,
    // the polygon's edges followed by the diagonals from the anchor. The
    // diagonals then cancel by exact division.
    let edges = p.edge_forms();
    let mut lines = edges.clone();
    let mut terms: Vec<(Int, Vec<usize>)> = Vec::new();
    let r = p.rotated(anchor);
    let v = r.vertices();
    for i in 1..v.len() - 1 {
        let tri = LatticePolygon::new(vec![v[0].clone(), v[i].clone(), v[i + 1].clone()])?;
        let forms = tri.edge_forms();
        let mut c = triangle_constant(&forms)?;
        let mut used = Vec::with_capacity(3);
        for l in &forms {
            let found = lines
                .iter()
                .enumerate()
                .find_map(|(j, m)| line_sign(l, m).map(|s| (j, s)));
            let j = match found {
                Some((j, s)) => {
                    if s < 0 {
                        c = -c;
                    }
                    j
                }
                None => {
                    lines.push(l.clone());
                    lines.len() - 1
                }
            };
            used.push(j);
        }
        terms.push((c, used));
    }
    let polys: Vec<Poly2> = lines.iter().map(form_poly).collect();
    let mut num = Poly2::zero();
    for (c, used) in &terms {
        let rest = (0..polys.len())
            .filter(|j| !used.contains(j))
            .fold(Poly2::constant(Rat::from_integer(c.clone())), |acc, j| {
                &acc * &polys[j]
            });
        num = &num + &rest;
    }
    let coefficient = RatFn2::over_linear_factors(num, &polys)?;
    CanonicalForm::from_coefficient(coefficient, edges)
}

/// Fan from the first vertex, which is `(0, 0)` for `P(d)`.
pub fn canonical_form_polygon(p: &LatticePolygon) -> Result<CanonicalForm> {
    canonical_form_fan(p, 0)
}
