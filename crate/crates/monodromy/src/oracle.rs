use braidcurve_core::puiseux::BraidOracle;
use braidcurve_core::{BranchParam, InvariantBattery};

use crate::error::MonodromyError;
use crate::track::{track_parametric, TrackConfig};

/// Closed braid of a branch from tracking its fibre at a fixed radius.
#[derive(Clone, Debug)]
pub struct ParametricOracle {
    pub radius: f64,
    pub config: TrackConfig,
}

impl ParametricOracle {
    pub fn new(radius: f64) -> Self {
        ParametricOracle { radius, config: TrackConfig::default() }
    }
}

impl BraidOracle for ParametricOracle {
    type Error = MonodromyError;

    fn closure_battery(&self, branch: &BranchParam) -> Result<InvariantBattery, MonodromyError> {
        let tracked = track_parametric(branch, self.radius, &self.config)?;
        Ok(tracked.word.closure_invariants().battery())
    }
}
