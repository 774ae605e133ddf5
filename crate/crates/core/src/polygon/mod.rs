//! Exact planar lattice-polygon geometry.
//!
//! Polygons are strictly convex with counterclockwise vertices, starting at
//! the lexicographically smallest vertex when built by [`convex_hull`].
//! Text format: one `x y` pair per line, counterclockwise.

mod canonical;

pub use canonical::{
    canonical_form_fan, canonical_form_polygon, canonical_form_triangle, CanonicalForm,
};

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::toric::check_exponent_sequence;
use crate::Int;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: Int,
    pub y: Int,
}

impl LatticePoint {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    fn sub(&self, other: &Self) -> (Int, Int) {
        (&self.x - &other.x, &self.y - &other.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

/// `(b - a) x (c - a)`; positive for a left turn.
fn cross(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint) -> Int {
    let (ux, uy) = b.sub(a);
    let (vx, vy) = c.sub(a);
    ux * vy - uy * vx
}

/// Strictly convex lattice polygon, counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl LatticePolygon {
    /// Validates a counterclockwise, strictly convex vertex cycle.
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::DegeneratePolygon(format!("{n} vertices")));
        }
        for i in 0..n {
            let turn = cross(&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if !turn.is_positive() {
                return Err(Error::Precondition(format!(
                    "vertices are not strictly convex counterclockwise at ({})",
                    vertices[(i + 1) % n]
                )));
            }
        }
        let p = Self { vertices };
        // Positive turns everywhere can still wind more than once.
        if p.normalized_area().is_positive() && p.winds_once() {
            Ok(p)
        } else {
            Err(Error::Precondition(
                "vertex cycle is not a simple convex polygon".into(),
            ))
        }
    }

    fn winds_once(&self) -> bool {
        // A strictly convex ccw cycle has exactly one vertex where the
        // lexicographic order "wraps"; more means it winds repeatedly.
        let n = self.vertices.len();
        let descents = (0..n)
            .filter(|&i| self.vertices[(i + 1) % n] < self.vertices[i])
            .count();
        let ascents = n - descents;
        descents >= 1 && ascents >= 1 && {
            let changes = (0..n)
                .filter(|&i| {
                    let a = self.vertices[(i + 1) % n] > self.vertices[i];
                    let b = self.vertices[(i + 2) % n] > self.vertices[(i + 1) % n];
                    a != b
                })
                .count();
            changes == 2
        }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges `(v_i, v_{i+1})` in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&LatticePoint, &LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Lattice length of the segment `a -> b`.
    pub fn edge_length(a: &LatticePoint, b: &LatticePoint) -> Int {
        edge_lattice_length(a, b)
    }

    pub fn vertex_index(&self, v: &LatticePoint) -> Result<usize> {
        self.vertices
            .iter()
            .position(|p| p == v)
            .ok_or_else(|| Error::NotAVertex(v.to_string()))
    }

    /// Twice the Euclidean area (shoelace).
    pub fn normalized_area(&self) -> Int {
        self.edges()
            .map(|(a, b)| &a.x * &b.y - &b.x * &a.y)
            .fold(Int::zero(), |acc, x| acc + x)
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_length(&self) -> Int {
        self.edges()
            .map(|(a, b)| edge_lattice_length(a, b))
            .fold(Int::zero(), |acc, x| acc + x)
    }

    /// Lattice points in the closed polygon, counted row by row.
    pub fn lattice_point_count(&self) -> Int {
        let mut total = Int::zero();
        self.for_each_row(|_, lo, hi| {
            if hi >= lo {
                total += hi - lo + Int::one();
            }
        });
        total
    }

    pub fn interior_point_count(&self) -> Int {
        self.lattice_point_count() - self.boundary_length()
    }

    /// All lattice points of the closed polygon, sorted.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        self.for_each_row(|y, lo, hi| {
            let mut x = lo;
            while x <= hi {
                out.push(LatticePoint::new(x.clone(), y.clone()));
                x += 1;
            }
        });
        out.sort();
        out
    }

    /// Calls `f(y, x_min, x_max)` with the integer x-range of each lattice row.
    fn for_each_row(&self, mut f: impl FnMut(&Int, Int, Int)) {
        let ymin = self
            .vertices
            .iter()
            .map(|p| &p.y)
            .min()
            .expect("nonempty")
            .clone();
        let ymax = self
            .vertices
            .iter()
            .map(|p| &p.y)
            .max()
            .expect("nonempty")
            .clone();
        let mut y = ymin;
        while y <= ymax {
            let mut lo: Option<BigRational> = None;
            let mut hi: Option<BigRational> = None;
            for (a, b) in self.edges() {
                let (ylo, yhi) = if a.y <= b.y {
                    (&a.y, &b.y)
                } else {
                    (&b.y, &a.y)
                };
                if y < *ylo || y > *yhi {
                    continue;
                }
                let xs: Vec<BigRational> = if a.y == b.y {
                    vec![
                        BigRational::from_integer(a.x.clone()),
                        BigRational::from_integer(b.x.clone()),
                    ]
                } else {
                    let t = BigRational::new(&y - &a.y, &b.y - &a.y);
                    vec![
                        BigRational::from_integer(a.x.clone())
                            + t * BigRational::from_integer(&b.x - &a.x),
                    ]
                };
                for x in xs {
                    if lo.as_ref().is_none_or(|l| x < *l) {
                        lo = Some(x.clone());
                    }
                    if hi.as_ref().is_none_or(|h| x > *h) {
                        hi = Some(x);
                    }
                }
            }
            if let (Some(lo), Some(hi)) = (lo, hi) {
                f(&y, lo.ceil().to_integer(), hi.floor().to_integer());
            }
            y += 1;
        }
    }

    /// Whether `p` lies in the closed polygon.
    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.edges().all(|(a, b)| !cross(a, b, p).is_negative())
    }

    pub fn on_boundary(&self, p: &LatticePoint) -> bool {
        self.contains(p) && self.edges().any(|(a, b)| cross(a, b, p).is_zero())
    }

    pub fn is_interior(&self, p: &LatticePoint) -> bool {
        self.edges().all(|(a, b)| cross(a, b, p).is_positive())
    }

    /// Inward edge forms, in edge order.
    pub fn edge_forms(&self) -> Vec<LinearForm> {
        self.edges()
            .map(|(a, b)| LinearForm::through(a, b))
            .collect()
    }

    /// Same polygon, vertex list rotated to start at index `start`.
    pub fn rotated(&self, start: usize) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(start % self.vertices.len());
        Self { vertices }
    }

    pub fn to_text(&self) -> String {
        self.vertices.iter().map(|p| format!("{p}\n")).collect()
    }

    /// Parses the polygon text format and validates convexity/orientation.
    pub fn parse_text(text: &str) -> Result<Self> {
        Self::new(parse_points(text)?)
    }
}

/// Parses `x y` lines; blank lines are skipped.
pub fn parse_points(text: &str) -> Result<Vec<LatticePoint>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse(format!("expected `x y`, got `{line}`")));
            }
            let parse = |s: &str| {
                s.parse::<Int>()
                    .map_err(|_| Error::Parse(format!("bad integer `{s}`")))
            };
            Ok(LatticePoint::new(parse(toks[0])?, parse(toks[1])?))
        })
        .collect()
}

fn edge_lattice_length(a: &LatticePoint, b: &LatticePoint) -> Int {
    let (dx, dy) = b.sub(a);
    dx.gcd(&dy)
}

fn primitive_direction(from: &LatticePoint, to: &LatticePoint) -> (Int, Int) {
    let (dx, dy) = to.sub(from);
    let g = dx.gcd(&dy);
    (dx / &g, dy / &g)
}

/// Convex hull by monotone chain; collinear boundary points are dropped.
/// The result starts at the lexicographically smallest point.
pub fn convex_hull(points: &[LatticePoint]) -> Result<LatticePolygon> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegeneratePolygon(format!(
            "{} distinct points",
            pts.len()
        )));
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegeneratePolygon("all points are collinear".into()));
    }
    Ok(LatticePolygon { vertices: lower })
}

/// Primitive affine form `a x + b y + c`, nonnegative on the polygon whose
/// edge it supports.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl LinearForm {
    /// Form vanishing on the line `p -> q`, positive to its left.
    pub fn through(p: &LatticePoint, q: &LatticePoint) -> Self {
        let (dx, dy) = q.sub(p);
        let a = -dy.clone();
        let b = dx.clone();
        let c = &dy * &p.x - &dx * &p.y;
        let g = a.gcd(&b).gcd(&c);
        Self {
            a: a / &g,
            b: b / &g,
            c: c / &g,
        }
    }

    pub fn eval(&self, p: &LatticePoint) -> Int {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }
}

/// Cyclic polygon with vertices `(l_i, l_i^2)`.
pub fn cyclic_polygon(ell: &[i64]) -> Result<LatticePolygon> {
    check_cyclic(ell)?;
    let pts: Vec<LatticePoint> = ell.iter().map(|&l| LatticePoint::new(l, l * l)).collect();
    LatticePolygon::new(pts)
}

/// `sum_{i=1}^{d-1} l_i l_{i+1} (l_{i+1} - l_i)`: normalized area of the
/// cyclic polygon via its fan from the origin.
pub fn cyclic_volume(ell: &[i64]) -> Result<Int> {
    check_cyclic(ell)?;
    Ok(ell[1..]
        .windows(2)
        .map(|w| Int::from(w[0]) * Int::from(w[1]) * Int::from(w[1] - w[0]))
        .fold(Int::zero(), |acc, x| acc + x))
}

/// Lattice points of the cyclic polygon: `volume / 2 + l_d + 1`.
pub fn cyclic_count(ell: &[i64]) -> Result<Int> {
    let vol = cyclic_volume(ell)?;
    let last = Int::from(*ell.last().expect("checked nonempty"));
    Ok(vol / 2 + last + 1)
}

fn check_cyclic(ell: &[i64]) -> Result<()> {
    check_exponent_sequence(ell)?;
    if ell.len() < 3 {
        return Err(Error::DegeneratePolygon(format!(
            "cyclic polygon needs at least 3 points, got {}",
            ell.len()
        )));
    }
    Ok(())
}

/// `P(d)`: the hull of `(i, binom(i, 2))` for `0 <= i <= d`.
pub fn p_polygon(d: usize) -> Result<LatticePolygon> {
    if d < 2 {
        return Err(Error::Precondition(format!("P(d) needs d >= 2, got {d}")));
    }
    let pts = (0..=d as i64)
        .map(|i| LatticePoint::new(i, i * (i - 1) / 2))
        .collect();
    LatticePolygon::new(pts)
}

/// `|det|` of the primitive edge directions at `v`; 1 means smooth.
pub fn vertex_multiplicity(p: &LatticePolygon, v: &LatticePoint) -> Result<Int> {
    let i = p.vertex_index(v)?;
    let n = p.len();
    let next = &p.vertices[(i + 1) % n];
    let prev = &p.vertices[(i + n - 1) % n];
    let (ax, ay) = primitive_direction(v, next);
    let (bx, by) = primitive_direction(v, prev);
    Ok((ax * by - ay * bx).abs())
}

/// Hull of the lattice points of `p` other than the vertex `v`.
fn hull_without_vertex(p: &LatticePolygon, v: &LatticePoint) -> Result<Option<LatticePolygon>> {
    p.vertex_index(v)?;
    let rest: Vec<LatticePoint> = p.lattice_points().into_iter().filter(|q| q != v).collect();
    match convex_hull(&rest) {
        Ok(h) => Ok(Some(h)),
        Err(Error::DegeneratePolygon(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Local Euler obstruction at a vertex of a normal toric surface, as `1 - c`
/// where `c` counts interior lattice points of `p` that lie on the boundary
/// of the hull of `p`'s remaining lattice points.
pub fn euler_obstruction_vertex(p: &LatticePolygon, v: &LatticePoint) -> Result<Int> {
    let Some(h) = hull_without_vertex(p, v)? else {
        return Ok(Int::one());
    };
    let c = h
        .lattice_points()
        .into_iter()
        .filter(|q| h.on_boundary(q) && p.is_interior(q))
        .count();
    Ok(Int::one() - Int::from(c))
}

/// Same invariant as `2 - (Vol(P) - Vol(hull of the remaining points))`.
pub fn euler_obstruction_by_area(p: &LatticePolygon, v: &LatticePoint) -> Result<Int> {
    let rest_area = hull_without_vertex(p, v)?.map_or_else(Int::zero, |h| h.normalized_area());
    Ok(Int::from(2) - (p.normalized_area() - rest_area))
}

/// Converts a small nonnegative big integer to `u64`.
pub(crate) fn to_u64(x: &Int, what: &str) -> Result<u64> {
    x.to_u64()
        .ok_or_else(|| Error::Unsupported(format!("{what} = {x} does not fit in u64")))
}
