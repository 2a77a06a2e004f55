// Growth of running time with input length.
//
// cargo run --release --example scaling

use cyclorex::bench::{generate, growth_exponent, median_time_ms, Family, Operation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let sizes = [500, 1000, 2000];
    for op in [
        Operation::KPeriod,
        Operation::AllPeriods,
        Operation::Covers,
        Operation::Runs,
    ] {
        for family in [Family::Random, Family::KPeriodic] {
            let points: Vec<(usize, f64)> = sizes
                .iter()
                .map(|&n| {
                    let x = generate(family, n, 4, 2, &mut ChaCha8Rng::seed_from_u64(1));
                    (n, median_time_ms(op, &x, 4, 3).max(1e-3))
                })
                .collect();
            println!(
                "{op:<12} {family:<10} exponent {:.2}  {:?}",
                growth_exponent(&points),
                points
            );
        }
    }
}
