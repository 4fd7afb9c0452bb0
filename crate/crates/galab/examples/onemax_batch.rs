//! Runs the 32-bit OneMax benchmark over 30 seeds and prints the
//! entropy-reduction statistics.

use hv_galab::{run, theorem_report, GaConfig, OneMax, SegmentSchema, Selection};

fn main() {
    let traces: Vec<_> = (1..=30)
        .map(|seed| {
            let config = GaConfig {
                population_size: 50,
                schema: SegmentSchema::one_bit_segments(32).unwrap(),
                selection: Selection::Roulette,
                crossover_rate: 0.9,
                mutation_rate: 1.0 / 32.0,
                elitism_count: 1,
                max_generations: 300,
                stall_generations: 30,
                seed,
            };
            run(&config, &OneMax).unwrap()
        })
        .collect();

    let report = theorem_report(&traces).unwrap();
    println!("runs:                 {}", report.trace_count);
    println!(
        "entropy reduced:      {:.1}%",
        100.0 * report.reduced_fraction
    );
    println!("median relative drop: {:.3}", report.median_relative_drop);
    let optimum = traces
        .iter()
        .filter(|t| t.final_best_fitness() == 32.0)
        .count();
    println!("reached optimum:      {optimum}/{}", traces.len());
    let strong = report
        .trend_coefficients
        .iter()
        .filter(|&&c| c < -0.5)
        .count();
    println!("trend below -0.5:     {strong}/{}", traces.len());
}
