//! Synchronous stepping and single-trial execution.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::policy::{shepherd_velocity, PolicyKind};
use crate::sheep::sheep_movement;
use crate::vec2::Vec2;
use crate::world::WorldState;

/// Positions of every agent at one time step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub t: u32,
    pub sheep: Vec<Vec2>,
    pub shepherds: Vec<Vec2>,
}

impl Frame {
    pub fn of(world: &WorldState) -> Self {
        Frame {
            t: world.t,
            sheep: world.sheep_positions().collect(),
            shepherds: world.shepherd_positions().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub success: bool,
    /// Completion time on success, otherwise `max_steps`.
    pub steps: u32,
    pub path_len_per_shepherd: Vec<f64>,
    pub mean_path_len: f64,
    /// One frame per time step from `t = 0` through the final state.
    pub trajectory: Option<Vec<Frame>>,
}

/// True when every sheep lies in the closed goal disk.
pub fn all_in_goal(world: &WorldState) -> bool {
    let goal = world.goal();
    let radius = world.params.goal_radius;
    world.sheep.iter().all(|s| (s.pos - goal).norm() <= radius)
}

/// Advances `world` by one step in place.
///
/// Every movement is computed from the state at `t` before any agent moves.
pub fn advance(world: &mut WorldState, policy: PolicyKind) -> Result<()> {
    let sheep_moves: Vec<Vec2> = (0..world.sheep.len())
        .map(|i| sheep_movement(world, i))
        .collect();
    let shepherd_moves: Vec<Vec2> = (0..world.shepherds.len())
        .map(|k| shepherd_velocity(world, k, policy))
        .collect();

    if let Some(index) = sheep_moves.iter().position(|u| !u.is_finite()) {
        return Err(SimError::NonFinite {
            kind: "sheep",
            index,
            t: world.t,
        });
    }
    if let Some(index) = shepherd_moves.iter().position(|v| !v.is_finite()) {
        return Err(SimError::NonFinite {
            kind: "shepherd",
            index,
            t: world.t,
        });
    }

    for (sheep, u) in world.sheep.iter_mut().zip(sheep_moves) {
        sheep.pos += u;
        sheep.u_prev = u;
    }
    for (shepherd, v) in world.shepherds.iter_mut().zip(shepherd_moves) {
        shepherd.pos += v;
        shepherd.path_len += v.norm();
    }
    world.t += 1;
    Ok(())
}

/// Returns the state one step after `world`.
pub fn step(world: &WorldState, policy: PolicyKind) -> Result<WorldState> {
    let mut next = world.clone();
    advance(&mut next, policy)?;
    Ok(next)
}

/// Runs one trial until every sheep is in the goal or `max_steps` elapse.
///
/// The goal test runs on the state at `t` before that step's movements, so
/// an already-solved start reports success at `steps = 0`.
pub fn run_trial(
    initial: &WorldState,
    policy: PolicyKind,
    record_trajectory: bool,
) -> Result<TrialResult> {
    initial.validate()?;
    let max_steps = initial.params.max_steps;
    let mut world = initial.clone();
    let mut trajectory = record_trajectory.then(|| vec![Frame::of(&world)]);

    let success = loop {
        if all_in_goal(&world) {
            break true;
        }
        if world.t >= max_steps {
            break false;
        }
        advance(&mut world, policy)?;
        if let Some(frames) = trajectory.as_mut() {
            frames.push(Frame::of(&world));
        }
    };

    let path_len_per_shepherd: Vec<f64> = world.shepherds.iter().map(|s| s.path_len).collect();
    let mean_path_len =
        path_len_per_shepherd.iter().sum::<f64>() / path_len_per_shepherd.len() as f64;
    Ok(TrialResult {
        success,
        steps: if success { world.t } else { max_steps },
        path_len_per_shepherd,
        mean_path_len,
        trajectory,
    })
}
