//! Independent reliability oracles: full enumeration and Monte Carlo.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::reliability::probability::ProbabilityTable;
use crate::reliability::system::SystemSpec;
use crate::scalar::Scalar;

/// Largest state space [`exhaustive_reliability`] walks through.
pub const STATE_SPACE_LIMIT: u128 = 10_000_000;

/// `Pr(phi >= j)` by summing the probability of every state vector whose
/// structure level reaches `j`.
pub fn exhaustive_reliability<T: Scalar>(system: &SystemSpec, probs: &ProbabilityTable<T>, j: u32) -> Result<T> {
    probs.check_states(system.states())?;
    let size = system.state_space();
    if size > STATE_SPACE_LIMIT {
        return Err(Error::StateSpaceTooLarge(size));
    }
    let states = system.states();
    let mut x = vec![0u32; states.len()];
    let mut total = T::zero();
    loop {
        if system.structure_level(&x) >= j {
            let p = x.iter().enumerate().fold(T::one(), |acc, (i, &s)| acc * probs.point(i, s));
            total = total + p;
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == x.len() {
                return Ok(total);
            }
            if x[i] < states[i] {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// A sampled estimate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub std_error: f64,
    pub trials: u64,
    pub hits: u64,
}

const CHUNK: u64 = 1 << 14;

/// Samples `trials` independent state vectors. Chunk `c` of trials draws from
/// stream `c` of a generator keyed by `seed`, so the result does not depend
/// on how chunks are scheduled across threads.
pub fn monte_carlo<T: Scalar>(system: &SystemSpec, probs: &ProbabilityTable<T>, j: u32, trials: u64, seed: u64) -> Result<Estimate> {
    probs.check_states(system.states())?;
    let trials = trials.max(1);
    let cumulative: Vec<Vec<f64>> = probs
        .points()
        .iter()
        .map(|row| {
            let mut acc = 0.0;
            row.iter()
                .map(|p| {
                    acc += p.to_f64();
                    acc
                })
                .collect()
        })
        .collect();
    let chunks = trials.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let count = CHUNK.min(trials - c * CHUNK);
            let mut x = vec![0u32; cumulative.len()];
            let mut hits = 0;
            for _ in 0..count {
                for (xi, row) in x.iter_mut().zip(&cumulative) {
                    let u: f64 = rng.gen();
                    *xi = row.iter().position(|&c| u < c).unwrap_or(row.len() - 1) as u32;
                }
                if system.structure_level(&x) >= j {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    let mean = hits as f64 / trials as f64;
    let std_error = (mean * (1.0 - mean) / trials as f64).sqrt();
    Ok(Estimate { mean, std_error, trials, hits })
}
