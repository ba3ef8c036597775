//! Multi-rate tick loop.
//!
//! Level `ℓ` of an `L`-level tree takes one step every `R^(L-1-ℓ)` ticks, so
//! the bottom level steps every tick and each parent takes a single step
//! while its children take `R`. Within a tick, due levels run top-down and
//! agents within a level run in ascending index order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynamics::{step_act, step_judge, step_measure, AgentState, WeightVector};
use crate::error::{Error, Result};
use crate::metrics::Snapshot;
use crate::topology::{build_tree, Tree};
use crate::world::{apply_hammer, NoiseModel, WorldState};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScheduleConfig {
    pub levels: u32,
    pub ratio: u32,
}

impl ScheduleConfig {
    pub fn new(levels: u32, ratio: u32) -> Result<Self> {
        if levels < 1 {
            return Err(Error::invalid("schedule needs at least one level"));
        }
        if ratio < 2 {
            return Err(Error::invalid(format!("step ratio must be >= 2, got {ratio}")));
        }
        let cfg = ScheduleConfig { levels, ratio };
        cfg.ratio_pow(levels)
            .ok_or_else(|| Error::invalid(format!("{ratio}^{levels} overflows a tick counter")))?;
        Ok(cfg)
    }

    fn ratio_pow(&self, exp: u32) -> Option<u64> {
        (self.ratio as u64).checked_pow(exp)
    }

    /// Ticks between consecutive steps of an agent on `level`.
    pub fn period(&self, level: u32) -> Result<u64> {
        if level >= self.levels {
            return Err(Error::invalid(format!(
                "level {level} out of range for {} levels",
                self.levels
            )));
        }
        // Bounded by the check in `new`.
        Ok(self.ratio_pow(self.levels - 1 - level).unwrap_or(u64::MAX))
    }

    /// Ticks per top-level step, `R^(L-1)`.
    pub fn top_period(&self) -> u64 {
        self.ratio_pow(self.levels - 1).unwrap_or(u64::MAX)
    }
}

/// True iff agents on `level` take a step at `tick`.
pub fn is_due(level: u32, tick: u64, schedule: &ScheduleConfig) -> Result<bool> {
    Ok(tick.is_multiple_of(schedule.period(level)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepKind {
    Measure,
    Judge,
    Act,
}

impl StepKind {
    pub fn next(self) -> StepKind {
        match self {
            StepKind::Measure => StepKind::Judge,
            StepKind::Judge => StepKind::Act,
            StepKind::Act => StepKind::Measure,
        }
    }

    pub fn letter(self) -> char {
        match self {
            StepKind::Measure => 'M',
            StepKind::Judge => 'J',
            StepKind::Act => 'A',
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AgentCursor {
    pub next_step: StepKind,
    /// Noise draws consumed so far; also the counter for the next draw.
    pub draws_taken: u64,
}

impl Default for AgentCursor {
    fn default() -> Self {
        AgentCursor {
            next_step: StepKind::Measure,
            draws_taken: 0,
        }
    }
}

/// One executed agent step, as reported to a tick observer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepEvent {
    pub tick: u64,
    pub agent: usize,
    pub level: u32,
    pub kind: StepKind,
}

/// The parameters every agent shares.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    pub sigma: WeightVector,
    pub alpha: WeightVector,
    pub noise: NoiseModel,
    /// Hammer prefactor; zero disables world feedback.
    pub epsilon: f64,
}

/// Full mutable simulation state.
#[derive(Clone, Debug)]
pub struct Simulation {
    tree: Tree,
    schedule: ScheduleConfig,
    params: ModelParams,
    states: Vec<AgentState>,
    cursors: Vec<AgentCursor>,
    world: WorldState,
    tick: u64,
}

impl Simulation {
    /// All agents inactive (every field zero), world at `world0`.
    pub fn new(schedule: ScheduleConfig, params: ModelParams, world0: f64) -> Result<Self> {
        let tree = build_tree(schedule.levels)?;
        let states = vec![AgentState::default(); tree.agent_count()];
        Simulation::with_states(schedule, params, WorldState::new(world0), states)
    }

    /// Starts from explicit agent states.
    pub fn with_states(
        schedule: ScheduleConfig,
        params: ModelParams,
        world: WorldState,
        states: Vec<AgentState>,
    ) -> Result<Self> {
        let tree = build_tree(schedule.levels)?;
        if states.len() != tree.agent_count() {
            return Err(Error::invalid(format!(
                "{} agent states supplied for a tree of {}",
                states.len(),
                tree.agent_count()
            )));
        }
        if !world.value.is_finite() || states.iter().any(|s| !s.is_finite()) {
            return Err(Error::invalid("initial state must be finite"));
        }
        if !params.epsilon.is_finite() {
            return Err(Error::invalid("epsilon must be finite"));
        }
        Ok(Simulation {
            tree,
            schedule,
            params,
            cursors: vec![AgentCursor::default(); states.len()],
            states,
            world,
            tick: 0,
        })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn schedule(&self) -> &ScheduleConfig {
        &self.schedule
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn states(&self) -> &[AgentState] {
        &self.states
    }

    pub fn cursors(&self) -> &[AgentCursor] {
        &self.cursors
    }

    pub fn world(&self) -> WorldState {
        self.world
    }

    /// Number of ticks executed so far; also the index of the next tick.
    pub fn ticks_done(&self) -> u64 {
        self.tick
    }

    /// View of the current state, labelled with the last executed tick.
    pub fn snapshot(&self) -> Snapshot<'_> {
        Snapshot::new(self.tick.saturating_sub(1), self.world.value, &self.states)
    }

    pub fn advance_tick(&mut self) -> Result<()> {
        self.advance_tick_observed(|_| {})
    }

    /// Runs one tick, reporting every executed step to `observer` in order.
    pub fn advance_tick_observed(&mut self, mut observer: impl FnMut(StepEvent)) -> Result<()> {
        let tick = self.tick;
        let n = self.tree.agent_count();
        for level in 0..self.tree.levels() {
            if !is_due(level, tick, &self.schedule)? {
                continue;
            }
            for agent in self.tree.agents_at_level(level) {
                let kind = self.step_agent(agent, level)?;
                observer(StepEvent {
                    tick,
                    agent,
                    level,
                    kind,
                });
            }
        }
        if !self.world.value.is_finite() {
            return Err(Error::NonFinite {
                tick,
                detail: format!("world value {}", self.world.value),
            });
        }
        if let Some(i) = (0..n).find(|&i| !self.states[i].is_finite()) {
            return Err(Error::NonFinite {
                tick,
                detail: format!("agent {i} state {:?}", self.states[i]),
            });
        }
        self.tick += 1;
        Ok(())
    }

    fn step_agent(&mut self, agent: usize, level: u32) -> Result<StepKind> {
        let cursor = self.cursors[agent];
        let state = self.states[agent];
        let next = match cursor.next_step {
            StepKind::Measure => {
                let noise = self.params.noise.sample(agent, level, cursor.draws_taken);
                self.cursors[agent].draws_taken += 1;
                let (p, u, v) = self.tree.neighbours(agent);
                step_measure(
                    state,
                    self.world.value,
                    noise,
                    self.states[p].j,
                    self.states[u].j,
                    self.states[v].j,
                )
                .map_err(|e| Error::NonFinite {
                    tick: self.tick,
                    detail: format!("agent {agent} measurement: {e}"),
                })?
            }
            StepKind::Judge => step_judge(state, &self.params.sigma),
            StepKind::Act => {
                let acted = step_act(state, &self.params.alpha);
                self.world =
                    apply_hammer(self.world, acted.a, self.tree.agent_count(), self.params.epsilon);
                acted
            }
        };
        self.states[agent] = next;
        self.cursors[agent].next_step = cursor.next_step.next();
        Ok(cursor.next_step)
    }
}
