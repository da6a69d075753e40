use super::{GeomError, Vec3};

/// A point on the unit sphere S².
///
/// Construction renormalizes its input, so `x² + y² + z² = 1` holds to
/// rounding. The zero vector and non-finite input are rejected.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitPoint(Vec3);

const HALF_SQRT_3: f64 = 0.866_025_403_784_438_6;

impl UnitPoint {
    /// North pole.
    pub const E3: UnitPoint = UnitPoint(Vec3::new(0.0, 0.0, 1.0));
    /// South pole.
    pub const NEG_E3: UnitPoint = UnitPoint(Vec3::new(0.0, 0.0, -1.0));
    pub const E1: UnitPoint = UnitPoint(Vec3::new(1.0, 0.0, 0.0));
    pub const E2: UnitPoint = UnitPoint(Vec3::new(0.0, 1.0, 0.0));
    /// Equator vertex at azimuth 2π/3, `(-1/2, √3/2, 0)`.
    pub const ZETA1: UnitPoint = UnitPoint(Vec3::new(-0.5, HALF_SQRT_3, 0.0));
    /// Equator vertex at azimuth 4π/3, `(-1/2, -√3/2, 0)`.
    pub const ZETA2: UnitPoint = UnitPoint(Vec3::new(-0.5, -HALF_SQRT_3, 0.0));

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, GeomError> {
        Self::from_vec(Vec3::new(x, y, z))
    }

    pub fn from_vec(v: Vec3) -> Result<Self, GeomError> {
        if !v.is_finite() {
            return Err(GeomError::NonFinite);
        }
        v.normalized().map(UnitPoint).ok_or(GeomError::ZeroVector)
    }

    pub fn from_spherical(theta: f64, phi: f64) -> Self {
        UnitPoint(Vec3::from_spherical(theta, phi))
    }

    pub fn vec(self) -> Vec3 {
        self.0
    }

    pub fn x(self) -> f64 {
        self.0.x
    }

    pub fn y(self) -> f64 {
        self.0.y
    }

    pub fn z(self) -> f64 {
        self.0.z
    }
}

impl From<UnitPoint> for Vec3 {
    fn from(p: UnitPoint) -> Vec3 {
        p.0
    }
}

/// The five vertices of the maximal-area triangular bipyramid:
/// both poles plus the equilateral triangle `e₁, ζ₁, ζ₂` in the equator.
pub fn triangular_bipyramid_vertices() -> [UnitPoint; 5] {
    [
        UnitPoint::E3,
        UnitPoint::NEG_E3,
        UnitPoint::E1,
        UnitPoint::ZETA1,
        UnitPoint::ZETA2,
    ]
}
