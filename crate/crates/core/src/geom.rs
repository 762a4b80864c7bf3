//! Points, planes and the exact sign predicates on them.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(int(x), int(y))
    }

    pub fn squared_distance(&self, other: &Point2) -> Rational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }

    pub fn midpoint(&self, other: &Point2) -> Point2 {
        let half = Rational::new(1.into(), 2.into());
        Point2::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Ordered lexicographically by `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Point3::new(int(x), int(y), int(z))
    }

    pub fn midpoint(&self, other: &Point3) -> Point3 {
        let half = Rational::new(1.into(), 2.into());
        Point3::new(
            (&self.x + &other.x) * &half,
            (&self.y + &other.y) * &half,
            (&self.z + &other.z) * &half,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn dot(&self, other: &Point3) -> Rational {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    /// Drops the z coordinate.
    pub fn xy(&self) -> Point2 {
        Point2::new(self.x.clone(), self.y.clone())
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_positive() {
            Sign::Positive
        } else if r.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

/// The affine functional `a·x + b·y + c·z + d`; its zero set is the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Plane3 {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl Plane3 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::ZeroNormal);
        }
        Ok(Plane3 { a, b, c, d })
    }

    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn eval(&self, p: &Point3) -> Rational {
        &self.a * &p.x + &self.b * &p.y + &self.c * &p.z + &self.d
    }

    /// True when `other` describes the same oriented plane, i.e. its
    /// coefficients are a positive multiple of ours.
    pub fn same_oriented(&self, other: &Plane3) -> bool {
        let ours = self.coefficients();
        let theirs = other.coefficients();
        let Some(k) = (0..4).find(|&i| !ours[i].is_zero()) else {
            return false;
        };
        if theirs[k].is_zero() || theirs[k].signum() != ours[k].signum() {
            return false;
        }
        let scale = theirs[k] / ours[k];
        (0..4).all(|i| &(ours[i] * &scale) == theirs[i])
    }
}

impl fmt::Display for Plane3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x + {}·y + {}·z + {} = 0", self.a, self.b, self.c, self.d)
    }
}

/// Standard lift onto the paraboloid `z = x² + y²`.
pub fn lift(p: &Point2) -> Point3 {
    let z = &p.x * &p.x + &p.y * &p.y;
    Point3::new(p.x.clone(), p.y.clone(), z)
}

pub fn plane_side(h: &Plane3, p: &Point3) -> Sign {
    Sign::of(&h.eval(p))
}

/// Plane whose section of the paraboloid projects onto the circle with the
/// given centre and squared radius.
///
/// Oriented so that `plane_side(h, lift(q))` equals the sign of
/// `|q - center|² - r_squared`: lifted points outside the circle are
/// `Positive`, points on it `Zero`, points inside `Negative`.
pub fn circle_lift_plane(center: &Point2, r_squared: &Rational) -> Result<Plane3> {
    if !r_squared.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    let two = int(2);
    let a = -(&two * &center.x);
    let b = -(&two * &center.y);
    let d = &center.x * &center.x + &center.y * &center.y - r_squared;
    Plane3::new(a, b, int(1), d)
}

/// Twice the signed area of the triangle `abc`.
pub fn orient2d(a: &Point2, b: &Point2, c: &Point2) -> Sign {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    Sign::of(&det)
}

/// True iff no three points are collinear.
pub fn general_position_2d(points: &[Point2]) -> bool {
    collinear_triple(points).is_none()
}

pub(crate) fn collinear_triple(points: &[Point2]) -> Option<(usize, usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orient2d(&points[i], &points[j], &points[k]) == Sign::Zero {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}
