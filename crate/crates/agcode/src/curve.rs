//! Short Weierstrass curves y^2 = x^3 + ax + b over a prime field: the
//! affine chord-and-tangent group law, double-and-add scalar multiplication,
//! point sampling on the supersingular curve y^2 = x^3 + 1 (p = 2 mod 3),
//! and a brute-force point enumerator for small fields.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

use crate::arith::{rand_below, ArithError, Field, FieldElement};

/// Largest modulus accepted by [`Curve::enumerate_points`].
pub const DEFAULT_ENUM_BOUND: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("curve is singular: discriminant -16(4a^3 + 27b^2) is zero")]
    SingularCurve,
    #[error("invalid field for a curve: {0}")]
    InvalidField(String),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("operation needs y^2 = x^3 + 1 over F_p with p = 2 (mod 3)")]
    UnsupportedCurve,
    #[error("modulus {0} exceeds the enumeration bound {1}")]
    TooLarge(BigUint, u64),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// A point of `E(F_p)`: affine coordinates or the group identity `O`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: FieldElement, y: FieldElement },
}

impl CurvePoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    /// The coordinates, or `None` for the point at infinity.
    pub fn coordinates(&self) -> Option<(&FieldElement, &FieldElement)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Curve {
    field: Field,
    a: FieldElement,
    b: FieldElement,
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^2 = x^3 + {}x + {} over F_{}",
            self.a,
            self.b,
            self.field.modulus()
        )
    }
}

impl Curve {
    pub fn new(field: Field, a: FieldElement, b: FieldElement) -> Result<Curve, CurveError> {
        if *field.modulus() <= BigUint::from(3u32) {
            return Err(CurveError::InvalidField(format!(
                "modulus {} must exceed 3",
                field.modulus()
            )));
        }
        a.same_field(&b)?;
        if a.field() != &field {
            return Err(ArithError::FieldMismatch.into());
        }
        // -16(4a^3 + 27b^2) vanishes iff 4a^3 + 27b^2 does (p > 3)
        let four = field.element_from_u64(4);
        let twenty_seven = field.element_from_u64(27);
        let disc = &(&four * &a.pow(&BigUint::from(3u32))) + &(&twenty_seven * &(&b * &b));
        if disc.is_zero() {
            return Err(CurveError::SingularCurve);
        }
        Ok(Curve { field, a, b })
    }

    /// Convenience constructor from raw integers; primality of `p` is
    /// checked here.
    pub fn from_raw(p: BigUint, a: BigUint, b: BigUint) -> Result<Curve, CurveError> {
        let field = Field::new(p).map_err(|e| CurveError::InvalidField(e.to_string()))?;
        let a = field.element(a);
        let b = field.element(b);
        Curve::new(field, a, b)
    }

    /// The curve y^2 = x^3 + 1 used by the parameter search.
    pub fn supersingular(field: Field) -> Result<Curve, CurveError> {
        let a = field.zero();
        let b = field.one();
        Curve::new(field, a, b)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    pub fn infinity(&self) -> CurvePoint {
        CurvePoint::Infinity
    }

    pub fn contains(&self, point: &CurvePoint) -> bool {
        match point {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                if x.field() != &self.field || y.field() != &self.field {
                    return false;
                }
                &y * &y == self.rhs(x)
            }
        }
    }

    /// x^3 + ax + b
    fn rhs(&self, x: &FieldElement) -> FieldElement {
        &(&(&(&x * &x) * x) + &(&self.a * x)) + &self.b
    }

    /// Validated affine point constructor.
    pub fn point(&self, x: FieldElement, y: FieldElement) -> Result<CurvePoint, CurveError> {
        let p = CurvePoint::Affine { x, y };
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(CurveError::NotOnCurve)
        }
    }

    fn check_on_curve(&self, p: &CurvePoint) -> Result<(), CurveError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CurveError::NotOnCurve)
        }
    }

    pub fn negate(&self, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.check_on_curve(p)?;
        Ok(match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -y,
            },
        })
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.check_on_curve(p)?;
        self.check_on_curve(q)?;
        let (x1, y1) = match p {
            CurvePoint::Infinity => return Ok(q.clone()),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let (x2, y2) = match q {
            CurvePoint::Infinity => return Ok(p.clone()),
            CurvePoint::Affine { x, y } => (x, y),
        };

        let slope = if x1 == x2 {
            if y1 != y2 || y1.is_zero() {
                // q = -p, including the 2-torsion doubling case
                return Ok(CurvePoint::Infinity);
            }
            // tangent: (3x^2 + a) / 2y
            let three = self.field.element_from_u64(3);
            let two = self.field.element_from_u64(2);
            let num = &(&three * &(&x1 * &x1)) + &self.a;
            &num * &(&two * y1).inv().expect("y1 != 0")
        } else {
            let num = y2 - y1;
            let den = x2 - x1;
            &num * &den.inv().expect("x2 != x1")
        };

        let x3 = &(&(&slope * &slope) - x1) - x2;
        let y3 = &(&slope * &(x1 - &x3)) - y1;
        Ok(CurvePoint::Affine { x: x3, y: y3 })
    }

    pub fn double(&self, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.add(p, p)
    }

    /// m-fold sum by double-and-add; `0 * P = O`.
    pub fn scalar_mul(&self, m: &BigUint, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.check_on_curve(p)?;
        let mut acc = CurvePoint::Infinity;
        if m.is_zero() {
            return Ok(acc);
        }
        let bits = m.bits();
        for i in (0..bits).rev() {
            acc = self.add(&acc, &acc)?;
            if m.bit(i) {
                acc = self.add(&acc, p)?;
            }
        }
        Ok(acc)
    }

    /// Whether this is the curve shape required by the cube-root sampler.
    pub fn is_supersingular_shape(&self) -> bool {
        self.a.is_zero()
            && self.b == self.field.one()
            && self.field.modulus() % BigUint::from(3u32) == BigUint::from(2u32)
    }

    /// The affine point with the given y on y^2 = x^3 + 1, via the cube-root
    /// bijection x = (y^2 - 1)^(1/3).
    pub fn supersingular_point_from_y(&self, y: FieldElement) -> Result<CurvePoint, CurveError> {
        if !self.is_supersingular_shape() {
            return Err(CurveError::UnsupportedCurve);
        }
        let x = (&(&y * &y) - &self.b).cube_root()?;
        self.point(x, y)
    }

    /// Uniform affine point of y^2 = x^3 + 1: the y coordinate is uniform
    /// and determines x, so each of the p affine points has chance 1/p.
    pub fn random_point_supersingular<R: Rng>(
        &self,
        rng: &mut R,
    ) -> Result<CurvePoint, CurveError> {
        if !self.is_supersingular_shape() {
            return Err(CurveError::UnsupportedCurve);
        }
        let y = self.field.element(rand_below(self.field.modulus(), rng)?);
        self.supersingular_point_from_y(y)
    }

    pub fn enumerate_points(&self) -> Result<Vec<CurvePoint>, CurveError> {
        self.enumerate_points_bounded(DEFAULT_ENUM_BOUND)
    }

    /// All points including `O`, by scanning x against a table of squares.
    /// Ordered as `O` first, then ascending by x and then by y.
    pub fn enumerate_points_bounded(&self, bound: u64) -> Result<Vec<CurvePoint>, CurveError> {
        let p = match self.field.modulus().to_u64() {
            Some(p) if p <= bound => p,
            _ => return Err(CurveError::TooLarge(self.field.modulus().clone(), bound)),
        };
        let mut roots: HashMap<BigUint, Vec<u64>> = HashMap::new();
        for y in 0..p {
            let sq = self.field.element_from_u64(y);
            roots
                .entry((&sq * &sq).value().clone())
                .or_default()
                .push(y);
        }
        let mut points = vec![CurvePoint::Infinity];
        for x in 0..p {
            let xe = self.field.element_from_u64(x);
            if let Some(ys) = roots.get(self.rhs(&xe).value()) {
                for &y in ys {
                    points.push(CurvePoint::Affine {
                        x: xe.clone(),
                        y: self.field.element_from_u64(y),
                    });
                }
            }
        }
        Ok(points)
    }
}
