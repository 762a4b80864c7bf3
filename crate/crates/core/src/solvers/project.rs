use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::{Point2, Point3};
use crate::rational::Rational;

use super::planar::planar_largest_convex_subset;
use super::SolveResult;

/// Planar images of a 3D point set, index-aligned with the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub points: Vec<Point2>,
    /// Pairs of input indices `(i, j)`, `i < j`, with equal images.
    pub collisions: Vec<(usize, usize)>,
}

/// Linear projection with kernel `span(direction)`.
///
/// The dominant axis `k` of the direction (largest magnitude, first on ties)
/// is dropped; the other two standard basis vectors, made orthogonal to the
/// direction, give the planar coordinates. Projecting along an axis simply
/// drops that coordinate.
pub fn project_points(points: &[Point3], direction: &Point3) -> Result<Projection> {
    if direction.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let u = [&direction.x, &direction.y, &direction.z];
    let dominant = (0..3).fold(0, |best, i| if u[i].abs() > u[best].abs() { i } else { best });
    let axes: Vec<usize> = (0..3).filter(|&i| i != dominant).collect();
    let norm = direction.dot(direction);
    let image = |p: &Point3| -> Point2 {
        let c = [&p.x, &p.y, &p.z];
        let along = p.dot(direction) / &norm;
        let coord = |i: usize| -> Rational {
            if u[i].is_zero() {
                c[i].clone()
            } else {
                c[i] - u[i] * &along
            }
        };
        Point2::new(coord(axes[0]), coord(axes[1]))
    };
    let projected: Vec<Point2> = points.iter().map(image).collect();
    let mut first: HashMap<&Point2, usize> = HashMap::new();
    let mut collisions = Vec::new();
    for (i, q) in projected.iter().enumerate() {
        match first.get(q) {
            Some(&j) => collisions.push((j, i)),
            None => {
                first.insert(q, i);
            }
        }
    }
    Ok(Projection {
        points: projected,
        collisions,
    })
}

/// Projects along `direction`, solves the planar problem exactly and
/// returns the preimage. A supporting line of the planar polygon pulls
/// back to a supporting plane, so the preimage is in convex position.
pub fn approx_convex_subset_3d(points: &[Point3], direction: &Point3) -> Result<SolveResult> {
    let projection = project_points(points, direction)?;
    if let Some(&(i, j)) = projection.collisions.first() {
        return Err(Error::ProjectionCollision(i, j));
    }
    planar_largest_convex_subset(&projection.points)
}
