#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shepherd_core::{
    AlignmentSign, ModelParams, PolicyKind, SheepState, ShepherdState, Vec2, WorldState,
};
use shepherd_reference as reference;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn point<R: Rng>(rng: &mut R, half_width: f64) -> Vec2 {
    Vec2::new(
        rng.gen_range(-half_width..half_width),
        rng.gen_range(-half_width..half_width),
    )
}

/// A small world with agents packed closely enough to interact, including
/// pairs inside the clamped-potential radius.
pub fn random_world<R: Rng>(rng: &mut R, max_sheep: usize, max_shepherds: usize) -> WorldState {
    let n = rng.gen_range(1..=max_sheep);
    let m = rng.gen_range(1..=max_shepherds);
    let spread = rng.gen_range(4.0..30.0);
    let sheep = (0..n)
        .map(|_| SheepState {
            pos: point(rng, spread),
            u_prev: if rng.gen_bool(0.2) {
                Vec2::ZERO
            } else {
                point(rng, 3.0)
            },
        })
        .collect();
    let shepherds = (0..m)
        .map(|_| ShepherdState {
            pos: point(rng, spread + 10.0),
            path_len: 0.0,
        })
        .collect();
    let params = ModelParams {
        goal_center: point(rng, 80.0),
        alpha: rng.gen_range(0.0..2.0),
        ..ModelParams::default()
    };
    WorldState {
        t: 0,
        sheep,
        shepherds,
        params,
    }
}

pub fn to_reference(world: &WorldState) -> (reference::State, reference::Params) {
    let v = |p: Vec2| [p.x, p.y];
    let p = &world.params;
    (
        reference::State {
            sheep: world.sheep.iter().map(|s| v(s.pos)).collect(),
            sheep_prev: world.sheep.iter().map(|s| v(s.u_prev)).collect(),
            shepherds: world.shepherds.iter().map(|s| v(s.pos)).collect(),
            path_len: world.shepherds.iter().map(|s| s.path_len).collect(),
        },
        reference::Params {
            c: [p.c1, p.c2, p.c3, p.c4],
            r: p.r,
            r_prime: p.r_prime,
            d: [p.d1, p.d2, p.d3, p.d4],
            alpha: p.alpha,
            theta: p.theta,
            r_under: p.r_under,
            r_ots: p.r_ots,
            d_ots: p.d_ots,
            goal: v(p.goal_center),
            goal_radius: p.goal_radius,
            alignment_sign: match p.alignment_sign {
                AlignmentSign::AsPrinted => -1.0,
                AlignmentSign::Conventional => 1.0,
            },
        },
    )
}

pub fn reference_policy(policy: PolicyKind) -> reference::Policy {
    match policy {
        PolicyKind::Proposed => reference::Policy::Proposed,
        PolicyKind::Fat => reference::Policy::Fat,
        PolicyKind::FatOcc => reference::Policy::FatOcc,
        PolicyKind::Ots => reference::Policy::Ots,
    }
}

pub fn max_abs_diff(a: Vec2, b: [f64; 2]) -> f64 {
    (a.x - b[0]).abs().max((a.y - b[1]).abs())
}

/// Rotates every position, previous movement and the goal about the origin.
pub fn rotate_world(world: &WorldState, angle: f64) -> WorldState {
    let mut w = world.clone();
    for s in &mut w.sheep {
        s.pos = s.pos.rotated(angle);
        s.u_prev = s.u_prev.rotated(angle);
    }
    for q in &mut w.shepherds {
        q.pos = q.pos.rotated(angle);
    }
    w.params.goal_center = w.params.goal_center.rotated(angle);
    w
}

pub fn translate_world(world: &WorldState, shift: Vec2) -> WorldState {
    let mut w = world.clone();
    for s in &mut w.sheep {
        s.pos += shift;
    }
    for q in &mut w.shepherds {
        q.pos += shift;
    }
    w.params.goal_center += shift;
    w
}
