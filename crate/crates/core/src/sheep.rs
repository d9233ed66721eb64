//! Sheep movement: separation, alignment, cohesion and repulsion from
//! shepherds, each averaged over the recognized agents.
//!
//! All sums run in ascending agent index so results are bit-reproducible.

use crate::vec2::{phi, psi_stab, Vec2};
use crate::world::{in_range, WorldState};

/// Mean of `f` over recognized sheep neighbors of sheep `i`; zero if none.
fn mean_over_sheep_neighbors(world: &WorldState, i: usize, f: impl Fn(usize) -> Vec2) -> Vec2 {
    let center = world.sheep[i].pos;
    let mut sum = Vec2::ZERO;
    let mut count = 0usize;
    for (j, other) in world.sheep.iter().enumerate() {
        if j != i && in_range(other.pos - center, world.params.r) {
            sum += f(j);
            count += 1;
        }
    }
    if count == 0 {
        Vec2::ZERO
    } else {
        sum / count as f64
    }
}

pub fn separation_force(world: &WorldState, i: usize) -> Vec2 {
    let p = world.sheep[i].pos;
    let r_under = world.params.r_under;
    -mean_over_sheep_neighbors(world, i, |j| psi_stab(world.sheep[j].pos - p, r_under))
}

/// Alignment with the neighbors' previous movements. The sign is set by
/// [`AlignmentSign`](crate::params::AlignmentSign).
pub fn alignment_force(world: &WorldState, i: usize) -> Vec2 {
    let sign = world.params.alignment_sign.factor();
    mean_over_sheep_neighbors(world, i, |j| phi(world.sheep[j].u_prev)) * sign
}

pub fn cohesion_force(world: &WorldState, i: usize) -> Vec2 {
    let p = world.sheep[i].pos;
    mean_over_sheep_neighbors(world, i, |j| phi(world.sheep[j].pos - p))
}

pub fn shepherd_repulsion_force(world: &WorldState, i: usize) -> Vec2 {
    let p = world.sheep[i].pos;
    let mut sum = Vec2::ZERO;
    let mut count = 0usize;
    for shepherd in &world.shepherds {
        let offset = shepherd.pos - p;
        if in_range(offset, world.params.r) {
            sum += psi_stab(offset, world.params.r_under);
            count += 1;
        }
    }
    if count == 0 {
        Vec2::ZERO
    } else {
        -(sum / count as f64)
    }
}

/// Weighted movement `c1*u1 + c2*u2 + c3*u3 + c4*u4` of sheep `i`.
///
/// Evaluates the three flocking terms in one pass over the neighbors; the
/// result is bit-identical to combining the individual force functions.
pub fn sheep_movement(world: &WorldState, i: usize) -> Vec2 {
    let params = &world.params;
    let p = world.sheep[i].pos;

    let mut sep = Vec2::ZERO;
    let mut ali = Vec2::ZERO;
    let mut coh = Vec2::ZERO;
    let mut count = 0usize;
    for (j, other) in world.sheep.iter().enumerate() {
        let offset = other.pos - p;
        if j != i && in_range(offset, params.r) {
            sep += psi_stab(offset, params.r_under);
            ali += phi(other.u_prev);
            coh += phi(offset);
            count += 1;
        }
    }
    let (u1, u2, u3) = if count == 0 {
        (Vec2::ZERO, Vec2::ZERO, Vec2::ZERO)
    } else {
        let n = count as f64;
        (
            -(sep / n),
            (ali / n) * params.alignment_sign.factor(),
            coh / n,
        )
    };
    let u4 = shepherd_repulsion_force(world, i);

    params.c1 * u1 + params.c2 * u2 + params.c3 * u3 + params.c4 * u4
}
