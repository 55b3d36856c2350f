//! Gradient-descent construction of circle configurations.

mod config;
mod configuration;
mod construct;
mod loss;
mod model;
mod transition;

pub use config::SolverConfig;
pub use configuration::{init_configuration, Configuration};
pub use construct::{
    construct, construct_on, decide_satisfiable, decide_satisfiable_on, gradient_step,
    ConstructOutcome, ConstructStatus, Satisfiability,
};
pub use loss::{constraint_loss, constraint_loss_gradient, total_loss, LossGradient};
pub use transition::{next_subgoal, TransitionMap};
