//! Shepherd steering policies.
//!
//! Every policy except OTS sees the world only through a
//! [`ShepherdObservation`]: goal-relative positions of the agents inside the
//! shepherd's recognition range. OTS is a centralized baseline and also
//! reads the flock's center of mass.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SimError};
use crate::params::ModelParams;
use crate::vec2::{phi, psi_stab, wrapped_angle_diff, Vec2};
use crate::world::{shepherd_neighbors, WorldState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolicyKind {
    /// Target the visible sheep maximizing `|p - x_g| - alpha * |p - q_k|`.
    Proposed,
    /// Farthest-agent targeting: `Proposed` with `alpha = 0`.
    Fat,
    /// `Fat` with the keep-distance term restricted to unoccluded sheep.
    FatOcc,
    /// Online target switching between driving the flock center and
    /// collecting the outlier.
    Ots,
}

impl PolicyKind {
    pub const ALL: [PolicyKind; 4] = [
        PolicyKind::Proposed,
        PolicyKind::Fat,
        PolicyKind::FatOcc,
        PolicyKind::Ots,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PolicyKind::Proposed => "proposed",
            PolicyKind::Fat => "fat",
            PolicyKind::FatOcc => "fat-occ",
            PolicyKind::Ots => "ots",
        }
    }

    /// Target-selection trade-off used by this policy.
    pub fn alpha(self, params: &ModelParams) -> f64 {
        match self {
            PolicyKind::Proposed => params.alpha,
            PolicyKind::Fat | PolicyKind::FatOcc | PolicyKind::Ots => 0.0,
        }
    }
}

impl fmt::Display for PolicyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PolicyKind {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self> {
        PolicyKind::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| SimError::UnknownPolicy(s.to_string()))
    }
}

/// What shepherd `k` may legally use to decide its movement.
///
/// All vectors are relative to the goal center; agents outside the
/// recognition range are absent.
#[derive(Debug, Clone, PartialEq)]
pub struct ShepherdObservation {
    pub own_rel_goal: Vec2,
    pub sheep_rel_goal: Vec<(usize, Vec2)>,
    pub shepherds_rel_goal: Vec<(usize, Vec2)>,
}

impl ShepherdObservation {
    /// Position of a goal-relative vector relative to this shepherd.
    #[inline]
    pub fn relative_to_self(&self, rel_goal: Vec2) -> Vec2 {
        rel_goal - self.own_rel_goal
    }
}

pub fn observe(world: &WorldState, k: usize) -> ShepherdObservation {
    let goal = world.goal();
    let seen = shepherd_neighbors(world, k);
    ShepherdObservation {
        own_rel_goal: world.shepherds[k].pos - goal,
        sheep_rel_goal: seen
            .sheep
            .into_iter()
            .map(|j| (j, world.sheep[j].pos - goal))
            .collect(),
        shepherds_rel_goal: seen
            .shepherds
            .into_iter()
            .map(|l| (l, world.shepherds[l].pos - goal))
            .collect(),
    }
}

/// Visible sheep maximizing `|p - x_g| - alpha * |p - q_k|`, returned with
/// its position relative to the shepherd. Ties go to the smallest index.
pub fn select_target_weighted(obs: &ShepherdObservation, alpha: f64) -> Option<(usize, Vec2)> {
    let mut best: Option<(usize, Vec2, f64)> = None;
    for &(j, rel_goal) in &obs.sheep_rel_goal {
        let rel_self = obs.relative_to_self(rel_goal);
        let score = rel_goal.norm() - alpha * rel_self.norm();
        // sheep_rel_goal is in ascending index order, so strict > keeps the
        // smallest index on ties
        if best.is_none_or(|(_, _, s)| score > s) {
            best = Some((j, rel_self, score));
        }
    }
    best.map(|(j, rel, _)| (j, rel))
}

/// Visible sheep not angularly hidden behind a nearer sheep.
///
/// Sheep are visited nearest first (by distance to the shepherd) and
/// admitted when their heading differs by more than `theta` from every
/// sheep admitted so far. Returned in ascending index order.
pub fn occluded_visible_set(obs: &ShepherdObservation, theta: f64) -> Vec<usize> {
    let mut order: Vec<(usize, f64, f64)> = obs
        .sheep_rel_goal
        .iter()
        .map(|&(j, rel_goal)| {
            let rel = obs.relative_to_self(rel_goal);
            (j, rel.norm(), rel.heading())
        })
        .collect();
    order.sort_by(|a, b| {
        a.1.partial_cmp(&b.1)
            .unwrap_or(Ordering::Equal)
            .then(a.0.cmp(&b.0))
    });

    let mut admitted: Vec<(usize, f64)> = Vec::with_capacity(order.len());
    for (j, _, heading) in order {
        if admitted
            .iter()
            .all(|&(_, h)| wrapped_angle_diff(heading, h) > theta)
        {
            admitted.push((j, heading));
        }
    }
    let mut set: Vec<usize> = admitted.into_iter().map(|(j, _)| j).collect();
    set.sort_unstable();
    set
}

/// OTS target point: just beyond the flock center, either on the far side
/// from the goal (drive) or toward the sheep farthest from the center
/// (collect) when that sheep is more than `r_ots` away.
pub fn select_target_ots(world: &WorldState) -> Vec2 {
    let params = &world.params;
    let n = world.sheep.len() as f64;
    let mut sum = Vec2::ZERO;
    for s in &world.sheep {
        sum += s.pos;
    }
    let center = sum / n;

    let mut farthest = world.sheep[0].pos;
    let mut farthest_dist = (center - farthest).norm();
    for s in &world.sheep[1..] {
        let dist = (center - s.pos).norm();
        if dist > farthest_dist {
            farthest = s.pos;
            farthest_dist = dist;
        }
    }

    if (farthest - center).norm() <= params.r_ots {
        center + params.d_ots * phi(center - params.goal_center)
    } else {
        center + params.d_ots * phi(farthest - center)
    }
}

/// The four unweighted components of a shepherd's movement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityTerms {
    /// Unit vector toward the target, or zero without a target.
    pub chase: Vec2,
    /// Averaged repulsion from the considered sheep.
    pub keep_distance: Vec2,
    /// Unit vector pointing away from the goal.
    pub toward_goal: Vec2,
    /// Goal-distance-weighted repulsion from visible shepherds.
    pub separation: Vec2,
}

impl VelocityTerms {
    pub fn combine(&self, params: &ModelParams) -> Vec2 {
        params.d1 * self.chase
            + params.d2 * self.keep_distance
            + params.d3 * self.toward_goal
            + params.d4 * self.separation
    }
}

/// Computes the velocity terms from an observation alone.
///
/// `ots_target_rel_goal` is the OTS target point relative to the goal and
/// is only consulted by [`PolicyKind::Ots`].
pub fn velocity_terms(
    obs: &ShepherdObservation,
    policy: PolicyKind,
    params: &ModelParams,
    ots_target_rel_goal: Option<Vec2>,
) -> VelocityTerms {
    let r_under = params.r_under;

    let chase = match policy {
        PolicyKind::Ots => ots_target_rel_goal
            .map(|target| phi(obs.relative_to_self(target)))
            .unwrap_or(Vec2::ZERO),
        _ => select_target_weighted(obs, policy.alpha(params))
            .map(|(_, rel)| phi(rel))
            .unwrap_or(Vec2::ZERO),
    };

    let keep_distance = {
        let mut sum = Vec2::ZERO;
        let mut count = 0usize;
        let mut add = |rel_goal: Vec2| {
            sum += psi_stab(obs.relative_to_self(rel_goal), r_under);
            count += 1;
        };
        match policy {
            PolicyKind::FatOcc => {
                let unoccluded = occluded_visible_set(obs, params.theta);
                for &(j, rel_goal) in &obs.sheep_rel_goal {
                    if unoccluded.binary_search(&j).is_ok() {
                        add(rel_goal);
                    }
                }
            }
            _ => obs
                .sheep_rel_goal
                .iter()
                .for_each(|&(_, rel_goal)| add(rel_goal)),
        }
        if count == 0 {
            Vec2::ZERO
        } else {
            -(sum / count as f64)
        }
    };

    let toward_goal = -phi(-obs.own_rel_goal);

    let separation = if obs.shepherds_rel_goal.is_empty() {
        Vec2::ZERO
    } else {
        let mut sum = Vec2::ZERO;
        for &(_, rel_goal) in &obs.shepherds_rel_goal {
            sum += psi_stab(obs.relative_to_self(rel_goal), r_under);
        }
        let mean = sum / obs.shepherds_rel_goal.len() as f64;
        -(obs.own_rel_goal.norm() * mean)
    };

    VelocityTerms {
        chase,
        keep_distance,
        toward_goal,
        separation,
    }
}

pub fn shepherd_velocity_terms(world: &WorldState, k: usize, policy: PolicyKind) -> VelocityTerms {
    let obs = observe(world, k);
    let ots_target = match policy {
        PolicyKind::Ots => Some(select_target_ots(world) - world.goal()),
        _ => None,
    };
    velocity_terms(&obs, policy, &world.params, ots_target)
}

/// Movement vector of shepherd `k` under `policy`.
pub fn shepherd_velocity(world: &WorldState, k: usize, policy: PolicyKind) -> Vec2 {
    shepherd_velocity_terms(world, k, policy).combine(&world.params)
}
