use super::exact::PadicExact;
use super::norm::NormExp;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallKind {
    /// `U_r(c) = { x : |x - c| < r }`
    Open,
    /// `V_r(c) = { x : |x - c| <= r }`
    Closed,
    /// `S_r(c) = { x : |x - c| = r }`
    Sphere,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub center: PadicExact,
    pub radius: NormExp,
    pub kind: BallKind,
}

impl Ball {
    pub fn new(center: PadicExact, radius: NormExp, kind: BallKind) -> Self {
        assert!(!radius.is_zero(), "radius must be positive");
        Ball { center, radius, kind }
    }

    pub fn closed(center: PadicExact, radius: NormExp) -> Self {
        Self::new(center, radius, BallKind::Closed)
    }

    pub fn sphere(center: PadicExact, radius: NormExp) -> Self {
        Self::new(center, radius, BallKind::Sphere)
    }

    pub fn contains(&self, x: &PadicExact) -> bool {
        let d = x.distance(&self.center);
        match self.kind {
            BallKind::Open => d < self.radius,
            BallKind::Closed => d <= self.radius,
            BallKind::Sphere => d == self.radius,
        }
    }

    /// Whether this closed ball lies inside the sphere `S_r(0)`.
    ///
    /// Every point of a ball has the center's norm once the radius is
    /// strictly below it, so containment only needs the center.
    pub fn within_sphere(&self, sphere_radius: NormExp) -> bool {
        match self.kind {
            BallKind::Closed | BallKind::Open => {
                self.center.norm() == sphere_radius && self.radius < sphere_radius
            }
            BallKind::Sphere => false,
        }
    }
}
