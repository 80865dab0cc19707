//! Damped power iteration.
//!
//! Each step computes
//!
//! ```text
//! next[i] = (1 - alpha) / N + alpha * (sum_{j -> i} B[j][i] * cur[j] + dangling / N)
//! ```
//!
//! where `dangling` is the mass currently sitting on nodes without
//! out-edges. Starting from the uniform vector, the iterate sums to one at
//! every step.

use rayon::prelude::*;

use super::config::SolverConfig;
use crate::error::{Error, Result};
use crate::network::StochasticOperator;

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub scores: Vec<f64>,
    pub iterations_used: usize,
    pub final_residual: f64,
}

impl ScoreVector {
    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.scores.iter().sum()
    }
}

pub fn pagerank(op: &StochasticOperator, cfg: &SolverConfig) -> Result<ScoreVector> {
    pagerank_observed(op, cfg, |_, _| {})
}

/// Like [`pagerank`], calling `observe(iteration, iterate)` after every step.
pub fn pagerank_observed<F>(op: &StochasticOperator, cfg: &SolverConfig, mut observe: F) -> Result<ScoreVector>
where
    F: FnMut(usize, &[f64]),
{
    cfg.validate()?;
    let n = op.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let nf = n as f64;
    let alpha = cfg.alpha;
    let teleport = (1.0 - alpha) / nf;
    let columns = cfg.parallel.then(|| op.transpose());

    let mut current = vec![1.0 / nf; n];
    let mut next = vec![0.0; n];
    let mut residual = f64::INFINITY;

    for iteration in 1..=cfg.max_iters {
        let dangling: f64 = op.dangling().iter().map(|&u| current[u as usize]).sum();
        let base = teleport + alpha * dangling / nf;

        match &columns {
            None => {
                next.fill(base);
                for (u, &mass) in current.iter().enumerate() {
                    let (targets, probs) = op.row(u);
                    let share = alpha * mass;
                    for (&v, &p) in targets.iter().zip(probs) {
                        next[v as usize] += share * p;
                    }
                }
                residual = current.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
            }
            Some(cols) => {
                next.par_iter_mut().enumerate().for_each(|(v, out)| {
                    let inflow: f64 = cols.row(v).map(|(u, &p)| p * current[u as usize]).sum();
                    *out = base + alpha * inflow;
                });
                residual = current.par_iter().zip(next.par_iter()).map(|(a, b)| (a - b).abs()).sum();
            }
        }

        std::mem::swap(&mut current, &mut next);
        observe(iteration, &current);
        if residual < cfg.tol {
            return Ok(ScoreVector {
                scores: current,
                iterations_used: iteration,
                final_residual: residual,
            });
        }
    }
    Err(Error::NonConvergence {
        iterations: cfg.max_iters,
        residual,
    })
}
