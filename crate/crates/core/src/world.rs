//! Simulation state and recognition-range neighborhoods.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::params::ModelParams;
use crate::vec2::Vec2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SheepState {
    pub pos: Vec2,
    /// Movement applied at the previous step; zero before the first step.
    pub u_prev: Vec2,
}

impl SheepState {
    pub fn at(pos: Vec2) -> Self {
        SheepState {
            pos,
            u_prev: Vec2::ZERO,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShepherdState {
    pub pos: Vec2,
    /// Total distance travelled so far.
    pub path_len: f64,
}

impl ShepherdState {
    pub fn at(pos: Vec2) -> Self {
        ShepherdState { pos, path_len: 0.0 }
    }
}

/// Full synchronous state of one trial at step `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WorldState {
    pub t: u32,
    pub sheep: Vec<SheepState>,
    pub shepherds: Vec<ShepherdState>,
    pub params: ModelParams,
}

impl WorldState {
    /// Builds a world at `t = 0` with zero previous movements.
    pub fn new(sheep: &[Vec2], shepherds: &[Vec2], params: ModelParams) -> Result<Self> {
        let world = WorldState {
            t: 0,
            sheep: sheep.iter().copied().map(SheepState::at).collect(),
            shepherds: shepherds.iter().copied().map(ShepherdState::at).collect(),
            params,
        };
        world.validate()?;
        Ok(world)
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if self.sheep.is_empty() {
            return Err(SimError::InvalidParam {
                name: "n_sheep",
                reason: "at least one sheep is required".into(),
            });
        }
        if self.shepherds.is_empty() {
            return Err(SimError::InvalidParam {
                name: "n_shepherds",
                reason: "at least one shepherd is required".into(),
            });
        }
        let finite = self
            .sheep
            .iter()
            .all(|s| s.pos.is_finite() && s.u_prev.is_finite())
            && self.shepherds.iter().all(|s| s.pos.is_finite());
        if !finite {
            return Err(SimError::InvalidParam {
                name: "positions",
                reason: "all positions must be finite".into(),
            });
        }
        Ok(())
    }

    #[inline]
    pub fn goal(&self) -> Vec2 {
        self.params.goal_center
    }

    pub fn sheep_positions(&self) -> impl Iterator<Item = Vec2> + '_ {
        self.sheep.iter().map(|s| s.pos)
    }

    pub fn shepherd_positions(&self) -> impl Iterator<Item = Vec2> + '_ {
        self.shepherds.iter().map(|s| s.pos)
    }
}

/// Strict open-annulus membership `0 < |d| < radius`.
#[inline]
pub(crate) fn in_range(offset: Vec2, radius: f64) -> bool {
    let dist = offset.norm();
    dist > 0.0 && dist < radius
}

/// Agents recognized by one agent: sheep indices and shepherd indices,
/// both in ascending order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Neighborhood {
    pub sheep: Vec<usize>,
    pub shepherds: Vec<usize>,
}

/// Sheep and shepherds within the sheep recognition radius `r` of sheep `i`.
pub fn sheep_neighbors(world: &WorldState, i: usize) -> Neighborhood {
    let center = world.sheep[i].pos;
    let r = world.params.r;
    Neighborhood {
        sheep: (0..world.sheep.len())
            .filter(|&j| j != i && in_range(world.sheep[j].pos - center, r))
            .collect(),
        shepherds: (0..world.shepherds.len())
            .filter(|&l| in_range(world.shepherds[l].pos - center, r))
            .collect(),
    }
}

/// Sheep and other shepherds within the shepherd recognition radius `r'`
/// of shepherd `k`.
pub fn shepherd_neighbors(world: &WorldState, k: usize) -> Neighborhood {
    let center = world.shepherds[k].pos;
    let r = world.params.r_prime;
    Neighborhood {
        sheep: (0..world.sheep.len())
            .filter(|&j| in_range(world.sheep[j].pos - center, r))
            .collect(),
        shepherds: (0..world.shepherds.len())
            .filter(|&l| l != k && in_range(world.shepherds[l].pos - center, r))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn world(sheep: &[(f64, f64)], shepherds: &[(f64, f64)]) -> WorldState {
        let s: Vec<_> = sheep.iter().map(|&(x, y)| Vec2::new(x, y)).collect();
        let d: Vec<_> = shepherds.iter().map(|&(x, y)| Vec2::new(x, y)).collect();
        WorldState::new(&s, &d, ModelParams::default()).unwrap()
    }

    #[test]
    fn sheep_range_is_strict_on_both_ends() {
        let w = world(&[(0.0, 0.0), (0.0, 20.0)], &[(500.0, 500.0)]);
        assert!(sheep_neighbors(&w, 0).sheep.is_empty());

        let w = world(&[(0.0, 0.0), (0.0, 19.9)], &[(500.0, 500.0)]);
        assert_eq!(sheep_neighbors(&w, 0).sheep, vec![1]);

        let w = world(&[(0.0, 0.0), (0.0, 0.0)], &[(500.0, 500.0)]);
        assert!(sheep_neighbors(&w, 0).sheep.is_empty());
    }

    #[test]
    fn sheep_see_shepherds_in_range() {
        let w = world(&[(0.0, 0.0)], &[(10.0, 0.0), (20.0, 0.0), (0.0, 0.0)]);
        assert_eq!(sheep_neighbors(&w, 0).shepherds, vec![0]);
    }

    #[test]
    fn shepherd_range_is_strict_on_both_ends() {
        let w = world(&[(99.0, 0.0)], &[(0.0, 0.0)]);
        assert_eq!(shepherd_neighbors(&w, 0).sheep, vec![0]);

        let w = world(&[(100.0, 0.0)], &[(0.0, 0.0)]);
        assert!(shepherd_neighbors(&w, 0).sheep.is_empty());

        let w = world(&[(500.0, 0.0)], &[(0.0, 0.0), (0.0, 0.0), (0.0, 50.0)]);
        assert_eq!(shepherd_neighbors(&w, 0).shepherds, vec![2]);
    }

    #[test]
    fn rejects_empty_populations() {
        assert!(WorldState::new(&[], &[Vec2::ZERO], ModelParams::default()).is_err());
        assert!(WorldState::new(&[Vec2::ZERO], &[], ModelParams::default()).is_err());
        assert!(WorldState::new(
            &[Vec2::new(f64::NAN, 0.0)],
            &[Vec2::ZERO],
            ModelParams::default()
        )
        .is_err());
    }
}
