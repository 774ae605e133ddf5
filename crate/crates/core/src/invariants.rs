//! Invariants of the interpolant surfaces `X_{A_d^(2)}` and their
//! normalizations, read off the polygon `P(d)`.
//!
//! Dual degrees of a toric surface with polygon `P` are
//! `3 Vol(P) - 2 (weighted perimeter) + sum of vertex Euler obstructions`.
//! For the normalization the weights are the lattice edge lengths. For
//! `X_{A_d^(2)}` itself the weights and vertex values are fixed constants
//! (see [`projected_weights`]); whether the long-edge weight is meant as an
//! orbit Euler obstruction times a lattice length or as the stated quantity
//! itself is left open, and both readings give the same number here.

use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{
    euler_obstruction_vertex, p_polygon, to_u64, vertex_multiplicity, LatticePoint, LatticePolygon,
};
use crate::Int;

/// `3 Vol(P) - 2 |boundary| + sum_v Eu(v)`.
pub fn dual_degree_normal(p: &LatticePolygon) -> Result<Int> {
    let mut eus = Vec::with_capacity(p.len());
    for v in p.vertices() {
        eus.push(euler_obstruction_vertex(p, v)?);
    }
    let lengths: Vec<Int> = p
        .edges()
        .map(|(a, b)| LatticePolygon::edge_length(a, b))
        .collect();
    dual_degree_weighted(p, &lengths, &eus)
}

/// `3 Vol(P) - 2 sum_e w_e + sum_v Eu_v`, one weight per edge (in edge
/// order) and one value per vertex.
pub fn dual_degree_weighted(
    p: &LatticePolygon,
    edge_weights: &[Int],
    vertex_eus: &[Int],
) -> Result<Int> {
    if edge_weights.len() != p.len() || vertex_eus.len() != p.len() {
        return Err(Error::DimensionMismatch(format!(
            "polygon has {} edges and vertices, got {} weights and {} vertex values",
            p.len(),
            edge_weights.len(),
            vertex_eus.len()
        )));
    }
    let w: Int = edge_weights.iter().sum();
    let eu: Int = vertex_eus.iter().sum();
    Ok(Int::from(3) * p.normalized_area() - Int::from(2) * w + eu)
}

fn check_d(d: usize) -> Result<()> {
    if d < 3 {
        return Err(Error::Precondition(format!("need d >= 3, got {d}")));
    }
    Ok(())
}

fn binom(n: usize, k: usize) -> Int {
    crate::osculation::binomial(&Int::from(n), k as u32)
}

/// Edge weights and vertex values of `X_{A_d^(2)}` along `P(d)`.
///
/// Edges `(i, binom(i,2)) -> (i+1, ...)` have weight 1; the closing edge
/// back to the origin has weight `d/2` (even `d`) or `d` (odd `d`). The two
/// end vertices get `d/2 + 1 - binom(d,2)` (even) or `d + 1 - binom(d,2)`
/// (odd); the others get 1.
pub fn projected_weights(d: usize) -> Result<(Vec<Int>, Vec<Int>)> {
    check_d(d)?;
    let (long, end) = if d.is_multiple_of(2) {
        (Int::from(d / 2), Int::from(d / 2 + 1) - binom(d, 2))
    } else {
        (Int::from(d), Int::from(d + 1) - binom(d, 2))
    };
    let mut weights = vec![Int::one(); d];
    weights.push(long);
    let mut eus = vec![Int::one(); d + 1];
    eus[0] = end.clone();
    eus[d] = end;
    Ok((weights, eus))
}

/// Dual degree of `X_{A_d^(2)}` via [`projected_weights`].
pub fn dual_degree_projected(d: usize) -> Result<Int> {
    let (w, eu) = projected_weights(d)?;
    dual_degree_weighted(&p_polygon(d)?, &w, &eu)
}

/// Closed forms, evaluated independently of any polygon.
pub mod closed_form {
    use super::{binom, Int};

    /// `binom(d+1, 3)`.
    pub fn degree(d: usize) -> Int {
        binom(d + 1, 3)
    }

    /// `d(d^2+8)/12` for even `d`, `d(d^2+11)/12` for odd `d`.
    pub fn normalization_dim(d: usize) -> Int {
        let d = Int::from(d);
        let c = if (&d % 2u32) == Int::from(0) { 8 } else { 11 };
        &d * (&d * &d + c) / 12
    }

    /// `(d^3 - 7d + 6)/2` for even `d`, `(d^3 - 9d + 8)/2` for odd `d`.
    pub fn dual_degree_normal(d: usize) -> Int {
        let d3 = Int::from(d).pow(3);
        if d.is_multiple_of(2) {
            (d3 - Int::from(7 * d) + 6) / 2
        } else {
            (d3 - Int::from(9 * d) + 8) / 2
        }
    }

    /// `binom(d-1, 2) (d+1)`.
    pub fn dual_degree_projected(d: usize) -> Int {
        binom(d - 1, 2) * Int::from(d + 1)
    }

    /// `(d^3 - 2d^2 - d + 2)/2`.
    pub fn dual_degree_projected_expanded(d: usize) -> Int {
        let d = Int::from(d);
        (d.pow(3) - Int::from(2) * d.pow(2) - &d + 2) / 2
    }

    /// Multiplicity of the two singular vertices: `d-1` (even), `(d-1)/2`
    /// (odd `d >= 5`), and 1 for `d = 3`.
    pub fn singular_multiplicity(d: usize) -> Int {
        if d == 3 {
            Int::from(1)
        } else if d.is_multiple_of(2) {
            Int::from(d - 1)
        } else {
            Int::from((d - 1) / 2)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexEu {
    pub vertex: [i64; 2],
    pub eu: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub d: u64,
    pub degree: u64,
    pub ambient_normalization_dim: u64,
    pub perimeter: u64,
    pub singular_multiplicities: [u64; 2],
    pub vertex_eus: Vec<VertexEu>,
    pub dual_degree_normal: u64,
    pub dual_degree_projected: u64,
    pub is_general_projection: bool,
}

fn to_i64(x: &Int, what: &str) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Unsupported(format!("{what} = {x} does not fit in i64")))
}

fn agree(what: &str, computed: &Int, expected: &Int) -> Result<()> {
    if computed == expected {
        Ok(())
    } else {
        Err(Error::Inconsistent(format!(
            "{what}: polygon gives {computed}, closed form gives {expected}"
        )))
    }
}

/// All invariants of `X_{A_d^(2)}`, each polygon-derived value checked
/// against its closed form.
pub fn surface_report(d: usize) -> Result<SurfaceReport> {
    check_d(d)?;
    let p = p_polygon(d)?;

    let degree = p.normalized_area();
    agree("degree", &degree, &closed_form::degree(d))?;
    let ambient = p.lattice_point_count() - Int::one();
    agree(
        "normalization dimension",
        &ambient,
        &closed_form::normalization_dim(d),
    )?;

    let origin = LatticePoint::new(0, 0);
    let far = LatticePoint::new(Int::from(d), binom(d, 2));
    let m0 = vertex_multiplicity(&p, &origin)?;
    let m1 = vertex_multiplicity(&p, &far)?;
    agree(
        "multiplicity at the origin",
        &m0,
        &closed_form::singular_multiplicity(d),
    )?;
    agree(
        "multiplicity at the far vertex",
        &m1,
        &closed_form::singular_multiplicity(d),
    )?;

    let mut vertex_eus = Vec::with_capacity(p.len());
    for v in p.vertices() {
        vertex_eus.push(VertexEu {
            vertex: [to_i64(&v.x, "vertex")?, to_i64(&v.y, "vertex")?],
            eu: to_i64(&euler_obstruction_vertex(&p, v)?, "Euler obstruction")?,
        });
    }

    let normal = dual_degree_normal(&p)?;
    agree(
        "normal dual degree",
        &normal,
        &closed_form::dual_degree_normal(d),
    )?;
    let projected = dual_degree_projected(d)?;
    agree(
        "projected dual degree",
        &projected,
        &closed_form::dual_degree_projected(d),
    )?;

    // For d = 3 the dual degrees agree, but the surface has a triple line.
    let is_general_projection = d != 3 && normal == projected;

    Ok(SurfaceReport {
        d: d as u64,
        degree: to_u64(&degree, "degree")?,
        ambient_normalization_dim: to_u64(&ambient, "normalization dimension")?,
        perimeter: to_u64(&p.boundary_length(), "perimeter")?,
        singular_multiplicities: [to_u64(&m0, "multiplicity")?, to_u64(&m1, "multiplicity")?],
        vertex_eus,
        dual_degree_normal: to_u64(&normal, "dual degree")?,
        dual_degree_projected: to_u64(&projected, "dual degree")?,
        is_general_projection,
    })
}
