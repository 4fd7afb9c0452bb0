//! The generational loop: seeded initialization, selection, one-point
//! crossover, per-bit mutation, and the run driver that records a
//! diversity trace.
//!
//! Reproducibility contract: every run owns a single ChaCha8 generator
//! seeded from `GaConfig::seed`. Draws happen in a fixed order —
//! initialization bit by bit, member by member; then per generation,
//! for each offspring slot in order: parent A selection draws, parent B
//! selection draws, the crossover coin, the cut position (only when the
//! coin came up and the chromosome has at least 2 bits), and one
//! mutation coin per bit. Identical configs therefore produce
//! bit-identical traces on this implementation; cross-implementation
//! equality is not promised.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hv_core::{hv_entropy, VariableView};

use crate::fitness::Fitness;
use crate::population::{population_object_set, Population};
use crate::schema::{Chromosome, SegmentSchema};
use crate::trace::{DiversityTrace, FinalStatus, TraceRow};
use crate::GaError;

/// Parent selection scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    /// Probability proportional to fitness, shifted to be nonnegative
    /// when needed; all-zero totals fall back to a uniform draw.
    Roulette,
    /// Best of `k` uniform draws (ties to the lower member index).
    Tournament(usize),
}

/// Full configuration of a run.
#[derive(Debug, Clone)]
pub struct GaConfig {
    pub population_size: usize,
    pub schema: SegmentSchema,
    pub selection: Selection,
    /// Probability that an offspring undergoes one-point crossover.
    pub crossover_rate: f64,
    /// Per-bit flip probability.
    pub mutation_rate: f64,
    /// Members copied unchanged into the next generation, best first.
    pub elitism_count: usize,
    pub max_generations: usize,
    /// Converged once the best fitness has stayed unchanged for this
    /// many consecutive generations.
    pub stall_generations: usize,
    pub seed: u64,
}

impl GaConfig {
    pub fn validate(&self) -> Result<(), GaError> {
        if self.population_size < 2 {
            return Err(GaError::PopulationTooSmall(self.population_size));
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return Err(GaError::RateOutOfRange {
                name: "crossover_rate",
                value: self.crossover_rate,
            });
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return Err(GaError::RateOutOfRange {
                name: "mutation_rate",
                value: self.mutation_rate,
            });
        }
        if self.elitism_count >= self.population_size {
            return Err(GaError::ElitismTooLarge {
                elitism: self.elitism_count,
                size: self.population_size,
            });
        }
        if let Selection::Tournament(k) = self.selection {
            if k == 0 {
                return Err(GaError::ZeroTournament);
            }
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Generation zero: uniformly random bits from the config-seeded
/// generator. Repeated calls with the same config return the same
/// population.
pub fn init_random(config: &GaConfig) -> Result<Population, GaError> {
    config.validate()?;
    let mut rng = config.rng();
    Ok(init_with_rng(config, &mut rng))
}

fn init_with_rng(config: &GaConfig, rng: &mut ChaCha8Rng) -> Population {
    let bits = config.schema.total_bits();
    let members = (0..config.population_size)
        .map(|_| Chromosome::new((0..bits).map(|_| rng.random_bool(0.5)).collect()))
        .collect();
    Population::new(members, 0).expect("config was validated")
}

/// Fitness of every member, in member order.
pub fn evaluate<F: Fitness + ?Sized>(population: &Population, fitness: &F) -> Vec<f64> {
    population
        .members()
        .iter()
        .map(|m| fitness.evaluate(m.bits()))
        .collect()
}

/// Member indices sorted best-first, ties to the lower index.
fn ranked_indices(fits: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..fits.len()).collect();
    order.sort_by(|&i, &j| fits[j].total_cmp(&fits[i]).then(i.cmp(&j)));
    order
}

/// Roulette weights: fitness shifted by the population minimum plus a
/// tiny epsilon, so weights are nonnegative on any fitness range and
/// selection pressure tracks the fitness spread within the generation.
/// All-equal fitness degenerates to (near-)uniform weights.
fn roulette_weights(fits: &[f64]) -> Vec<f64> {
    let min = fits.iter().copied().fold(f64::INFINITY, f64::min);
    fits.iter().map(|f| f - min + 1e-12).collect()
}

fn select_parent<'a>(
    population: &'a Population,
    fits: &[f64],
    weights: &[f64],
    weight_total: f64,
    selection: Selection,
    rng: &mut ChaCha8Rng,
) -> &'a Chromosome {
    let n = population.size();
    match selection {
        Selection::Roulette => {
            // degenerate weight totals (all-zero fitness before the
            // epsilon, or non-finite fitness) fall back to a uniform
            // draw rather than erroring
            if weight_total <= 0.0 || !weight_total.is_finite() {
                return &population.members()[rng.random_range(0..n)];
            }
            let mut ticket = rng.random_range(0.0..weight_total);
            for (i, w) in weights.iter().enumerate() {
                if ticket < *w {
                    return &population.members()[i];
                }
                ticket -= w;
            }
            population.members().last().expect("population is nonempty")
        }
        Selection::Tournament(k) => {
            let mut best = rng.random_range(0..n);
            for _ in 1..k {
                let i = rng.random_range(0..n);
                if fits[i] > fits[best] || (fits[i] == fits[best] && i < best) {
                    best = i;
                }
            }
            &population.members()[best]
        }
    }
}

fn make_offspring(
    a: &Chromosome,
    b: &Chromosome,
    config: &GaConfig,
    rng: &mut ChaCha8Rng,
) -> Chromosome {
    let bits = a.len();
    let mut child: Vec<bool> = a.bits().to_vec();
    if bits >= 2 && rng.random_bool(config.crossover_rate) {
        let cut = rng.random_range(1..bits);
        child[cut..].copy_from_slice(&b.bits()[cut..]);
    }
    for bit in child.iter_mut() {
        if rng.random_bool(config.mutation_rate) {
            *bit = !*bit;
        }
    }
    Chromosome::new(child)
}

fn check_population(population: &Population, config: &GaConfig) -> Result<(), GaError> {
    if population.size() != config.population_size {
        return Err(GaError::PopulationSizeMismatch {
            got: population.size(),
            expected: config.population_size,
        });
    }
    let expected = config.schema.total_bits();
    let got = population.members()[0].len();
    if got != expected {
        return Err(GaError::LengthMismatch { got, expected });
    }
    Ok(())
}

/// Builds the next generation: the `elitism_count` best members are
/// copied unchanged, and every remaining slot is filled by selecting
/// two parents, applying one-point crossover with the configured
/// probability (the offspring keeps parent A up to the cut), and
/// mutating each bit independently.
///
/// As a standalone operation this seeds a fresh generator from the
/// config, so repeated calls on the same inputs agree; [`run`] threads
/// one generator through all generations instead.
pub fn step<F: Fitness + ?Sized>(
    population: &Population,
    config: &GaConfig,
    fitness: &F,
) -> Result<Population, GaError> {
    config.validate()?;
    fitness.validate_schema(&config.schema)?;
    check_population(population, config)?;
    let mut rng = config.rng();
    Ok(step_with_rng(population, config, fitness, &mut rng))
}

fn step_with_rng<F: Fitness + ?Sized>(
    population: &Population,
    config: &GaConfig,
    fitness: &F,
    rng: &mut ChaCha8Rng,
) -> Population {
    let fits = evaluate(population, fitness);
    let ranked = ranked_indices(&fits);
    let weights = match config.selection {
        Selection::Roulette => roulette_weights(&fits),
        Selection::Tournament(_) => Vec::new(),
    };
    let weight_total: f64 = weights.iter().sum();

    let mut next: Vec<Chromosome> = ranked[..config.elitism_count]
        .iter()
        .map(|&i| population.members()[i].clone())
        .collect();
    while next.len() < population.size() {
        let a = select_parent(
            population,
            &fits,
            &weights,
            weight_total,
            config.selection,
            rng,
        );
        let b = select_parent(
            population,
            &fits,
            &weights,
            weight_total,
            config.selection,
            rng,
        );
        next.push(make_offspring(a, b, config, rng));
    }
    population.successor(next)
}

fn trace_row<F: Fitness + ?Sized>(
    population: &Population,
    schema: &SegmentSchema,
    fitness: &F,
) -> Result<TraceRow, GaError> {
    let fits = evaluate(population, fitness);
    let best = fits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = fits.iter().sum::<f64>() / fits.len() as f64;
    let set = population_object_set(population, schema)?;
    let report = hv_entropy(&set, &VariableView::all(&set), 2.0)?;
    Ok(TraceRow {
        generation: population.generation(),
        hv: report.hv_total(),
        per_segment: report.per_variable().iter().map(|v| v.entropy).collect(),
        best_fitness: best,
        mean_fitness: mean,
    })
}

/// Runs the full loop from a random generation 0 until the best fitness
/// stalls for `stall_generations` or `max_generations` steps have been
/// taken, recording entropy and fitness for every generation along the
/// way (generation 0 included).
pub fn run<F: Fitness + ?Sized>(config: &GaConfig, fitness: &F) -> Result<DiversityTrace, GaError> {
    config.validate()?;
    fitness.validate_schema(&config.schema)?;
    let mut rng = config.rng();
    let initial = init_with_rng(config, &mut rng);
    run_loop(initial, config, fitness, &mut rng)
}

/// Same loop, but starting from a caller-supplied population instead of
/// a random one. The population must match the config's size and
/// schema; its generation counter is reset to 0 so the trace still
/// starts there.
pub fn run_from<F: Fitness + ?Sized>(
    initial: Population,
    config: &GaConfig,
    fitness: &F,
) -> Result<DiversityTrace, GaError> {
    config.validate()?;
    fitness.validate_schema(&config.schema)?;
    check_population(&initial, config)?;
    let initial = Population::new(initial.members().to_vec(), 0)?;
    let mut rng = config.rng();
    run_loop(initial, config, fitness, &mut rng)
}

fn run_loop<F: Fitness + ?Sized>(
    mut population: Population,
    config: &GaConfig,
    fitness: &F,
    rng: &mut ChaCha8Rng,
) -> Result<DiversityTrace, GaError> {
    let mut rows = vec![trace_row(&population, &config.schema, fitness)?];
    let mut last_best = rows[0].best_fitness;
    let mut stall = 0usize;
    let mut status = FinalStatus::MaxGenerations;
    for _ in 0..config.max_generations {
        population = step_with_rng(&population, config, fitness, rng);
        let row = trace_row(&population, &config.schema, fitness)?;
        if row.best_fitness == last_best {
            stall += 1;
        } else {
            last_best = row.best_fitness;
            stall = 0;
        }
        rows.push(row);
        if stall >= config.stall_generations {
            status = FinalStatus::Converged;
            break;
        }
    }
    Ok(DiversityTrace::new(rows, status))
}
