//! Deterministic 2-D shepherding simulator.
//!
//! Sheep follow a flocking model with repulsion from shepherds; shepherds
//! follow one of four steering policies. Trials advance synchronously and
//! end when every sheep is inside the goal disk or the step limit is hit.

pub mod engine;
pub mod error;
pub mod experiment;
pub mod params;
pub mod policy;
pub mod scenario;
pub mod sheep;
pub mod vec2;
pub mod world;

pub use engine::{advance, all_in_goal, run_trial, step, Frame, TrialResult};
pub use error::{Result, SimError};
pub use experiment::{
    run_batch, sweep, sweep_shepherd_count, sweep_with_progress, AggregateMetrics, SampleStats,
    SweepRow,
};
pub use params::{AlignmentSign, ModelParams};
pub use policy::{
    observe, occluded_visible_set, select_target_ots, select_target_weighted, shepherd_velocity,
    shepherd_velocity_terms, velocity_terms, PolicyKind, ShepherdObservation, VelocityTerms,
};
pub use scenario::{make_scenario, trial_seed, Layout, Placement, ScenarioConfig, RNG_ALGORITHM};
pub use sheep::sheep_movement;
pub use vec2::{phi, psi_exact, psi_stab, wrapped_angle_diff, Vec2};
pub use world::{
    sheep_neighbors, shepherd_neighbors, Neighborhood, SheepState, ShepherdState, WorldState,
};
