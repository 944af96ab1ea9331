//! Numeric thresholds shared by the whole pipeline.

use crate::{Error, Result};

/// Thresholds controlling when values are treated as zero, when nearby roots
/// merge, and when projective points compare equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative magnitude below which a value is treated as zero.
    pub zero_eps: f64,
    /// Maximum distance for merging root approximations into one multiple root.
    pub cluster_radius: f64,
    /// Projective-equality threshold on canonicalized coordinates.
    pub point_eps: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            zero_eps: 1e-10,
            cluster_radius: 1e-6,
            point_eps: 1e-6,
        }
    }
}

impl Tolerances {
    /// Builds a tolerance bundle, enforcing 0 < zero_eps < cluster_radius < point_eps < 1.
    pub fn new(zero_eps: f64, cluster_radius: f64, point_eps: f64) -> Result<Self> {
        let t = Tolerances {
            zero_eps,
            cluster_radius,
            point_eps,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = 0.0 < self.zero_eps
            && self.zero_eps < self.cluster_radius
            && self.cluster_radius < self.point_eps
            && self.point_eps < 1.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidTolerances)
        }
    }

    /// Tighter bundle for well-conditioned inputs.
    pub fn strict() -> Self {
        Tolerances {
            zero_eps: 1e-12,
            cluster_radius: 1e-8,
            point_eps: 1e-7,
        }
    }

    /// Looser bundle for badly conditioned parameter regions.
    pub fn loose() -> Self {
        Tolerances {
            zero_eps: 1e-8,
            cluster_radius: 1e-4,
            point_eps: 1e-3,
        }
    }

    /// Looks up a named preset: "strict", "default" or "loose".
    pub fn profile(name: &str) -> Option<Self> {
        match name {
            "strict" => Some(Self::strict()),
            "default" => Some(Self::default()),
            "loose" => Some(Self::loose()),
            _ => None,
        }
    }

    /// Relative threshold used when reading off multiplicities from scaled
    /// derivative (Taylor) profiles. Sits halfway (in log scale) between the
    /// residual floor of polished points and order-one coefficients.
    pub fn profile_threshold(&self) -> f64 {
        self.zero_eps.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_ordering_holds() {
        let t = Tolerances::default();
        assert!(t.validate().is_ok());
        assert!(t.zero_eps < t.cluster_radius && t.cluster_radius < t.point_eps);
    }

    #[test]
    fn invalid_ordering_rejected() {
        assert!(Tolerances::new(1e-6, 1e-8, 1e-7).is_err());
        assert!(Tolerances::new(0.0, 1e-8, 1e-7).is_err());
        assert!(Tolerances::new(1e-10, 1e-6, 1.5).is_err());
    }

    #[test]
    fn profiles_resolve() {
        assert!(Tolerances::profile("strict").is_some());
        assert!(Tolerances::profile("default").is_some());
        assert!(Tolerances::profile("loose").is_some());
        assert!(Tolerances::profile("bogus").is_none());
        for p in ["strict", "default", "loose"] {
            Tolerances::profile(p).unwrap().validate().unwrap();
        }
    }
}
