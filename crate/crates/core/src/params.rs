//! Model constants for sheep, shepherds, the goal and the baseline policies.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::vec2::Vec2;

/// Sign applied to the sheep alignment term.
///
/// `AsPrinted` keeps the leading minus of the published flocking model
/// (neighbors' headings repel). `Conventional` is the usual boids sign.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlignmentSign {
    #[default]
    AsPrinted,
    Conventional,
}

impl AlignmentSign {
    #[inline]
    pub fn factor(self) -> f64 {
        match self {
            AlignmentSign::AsPrinted => -1.0,
            AlignmentSign::Conventional => 1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AlignmentSign::AsPrinted => "as-printed",
            AlignmentSign::Conventional => "conventional",
        }
    }
}

impl fmt::Display for AlignmentSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlignmentSign {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as-printed" => Ok(AlignmentSign::AsPrinted),
            "conventional" => Ok(AlignmentSign::Conventional),
            other => Err(SimError::UnknownAlignmentSign(other.to_string())),
        }
    }
}

/// Every constant of the sheep model, the shepherd policies and the trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModelParams {
    /// Sheep separation weight.
    pub c1: f64,
    /// Sheep alignment weight.
    pub c2: f64,
    /// Sheep cohesion weight.
    pub c3: f64,
    /// Sheep repulsion-from-shepherd weight.
    pub c4: f64,
    /// Sheep recognition radius.
    pub r: f64,
    /// Shepherd recognition radius.
    pub r_prime: f64,
    /// Shepherd chase weight.
    pub d1: f64,
    /// Shepherd keep-distance-from-sheep weight.
    pub d2: f64,
    /// Shepherd push-toward-goal weight.
    pub d3: f64,
    /// Shepherd mutual repulsion weight.
    pub d4: f64,
    /// Trade-off between distance from goal and distance from the shepherd
    /// in target selection.
    pub alpha: f64,
    /// Angular occlusion threshold (radians) for FAT-OCC.
    pub theta: f64,
    /// Radius below which the potential term is clamped.
    pub r_under: f64,
    /// OTS flock-separation radius.
    pub r_ots: f64,
    /// OTS target offset from the flock center.
    pub d_ots: f64,
    pub goal_center: Vec2,
    pub goal_radius: f64,
    pub max_steps: u32,
    pub alignment_sign: AlignmentSign,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            c1: 100.0,
            c2: 0.5,
            c3: 2.0,
            c4: 400.0,
            r: 20.0,
            r_prime: 100.0,
            d1: 2.5,
            d2: 100.0,
            d3: 1.0,
            d4: 2.0,
            alpha: 1.0,
            theta: 0.05,
            r_under: 3.0,
            r_ots: 25.0,
            d_ots: 4.0,
            goal_center: Vec2::new(50.0, 50.0),
            goal_radius: 20.0,
            max_steps: 3000,
            alignment_sign: AlignmentSign::AsPrinted,
        }
    }
}

fn finite_at_least_zero(name: &'static str, v: f64) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(SimError::InvalidParam {
            name,
            reason: format!("must be finite and >= 0, got {v}"),
        });
    }
    Ok(())
}

fn finite_positive(name: &'static str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(SimError::InvalidParam {
            name,
            reason: format!("must be finite and > 0, got {v}"),
        });
    }
    Ok(())
}

impl ModelParams {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("c1", self.c1),
            ("c2", self.c2),
            ("c3", self.c3),
            ("c4", self.c4),
            ("d1", self.d1),
            ("d2", self.d2),
            ("d3", self.d3),
            ("d4", self.d4),
            ("alpha", self.alpha),
        ] {
            finite_at_least_zero(name, v)?;
        }
        for (name, v) in [
            ("r", self.r),
            ("r_prime", self.r_prime),
            ("theta", self.theta),
            ("r_under", self.r_under),
            ("r_ots", self.r_ots),
            ("d_ots", self.d_ots),
            ("goal_radius", self.goal_radius),
        ] {
            finite_positive(name, v)?;
        }
        if !self.goal_center.is_finite() {
            return Err(SimError::InvalidParam {
                name: "goal_center",
                reason: "must be finite".into(),
            });
        }
        if self.max_steps == 0 {
            return Err(SimError::InvalidParam {
                name: "max_steps",
                reason: "must be >= 1".into(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_published_configuration() {
        let p = ModelParams::default();
        assert_eq!(
            (p.c1, p.c2, p.c3, p.c4, p.r),
            (100.0, 0.5, 2.0, 400.0, 20.0)
        );
        assert_eq!((p.d1, p.d2, p.d3, p.d4), (2.5, 100.0, 1.0, 2.0));
        assert_eq!(
            (p.r_prime, p.alpha, p.theta, p.r_under),
            (100.0, 1.0, 0.05, 3.0)
        );
        assert_eq!((p.r_ots, p.d_ots), (25.0, 4.0));
        assert_eq!(p.goal_center, Vec2::new(50.0, 50.0));
        assert_eq!(p.goal_radius, 20.0);
        assert_eq!(p.max_steps, 3000);
        assert_eq!(p.alignment_sign, AlignmentSign::AsPrinted);
        p.validate().unwrap();
    }

    #[test]
    fn rejects_bad_values() {
        let p = ModelParams {
            r: -1.0,
            ..Default::default()
        };
        assert!(matches!(
            p.validate(),
            Err(SimError::InvalidParam { name: "r", .. })
        ));

        let p = ModelParams {
            c4: f64::NAN,
            ..Default::default()
        };
        assert!(p.validate().is_err());

        let p = ModelParams {
            max_steps: 0,
            ..Default::default()
        };
        assert!(p.validate().is_err());

        let p = ModelParams {
            theta: 0.0,
            ..Default::default()
        };
        assert!(p.validate().is_err());
    }

    #[test]
    fn alignment_sign_parses() {
        assert_eq!(
            "as-printed".parse::<AlignmentSign>().unwrap(),
            AlignmentSign::AsPrinted
        );
        assert_eq!(
            "conventional".parse::<AlignmentSign>().unwrap().factor(),
            1.0
        );
        assert!("boids".parse::<AlignmentSign>().is_err());
    }
}
