// Fast analyses against the brute-force oracles on random strings.
//
// cargo run --release --example oracle_crosscheck [COUNT]

use cyclorex::oracle;
use cyclorex::{all_cyclic_covers, cyclic_period_array, maximal_cyclic_runs, Run, Text};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    run(std::env::args().nth(1));
}

fn run(count: Option<String>) {
    let count: usize = count.and_then(|s| s.parse().ok()).unwrap_or(300);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut mismatches = 0;
    for _ in 0..count {
        let n = rng.gen_range(1..=40);
        let x = Text::new(
            (0..n)
                .map(|_| b'a' + rng.gen_range(0..2))
                .collect::<Vec<u8>>(),
        )
        .unwrap();
        let runs: Vec<(usize, usize)> = maximal_cyclic_runs(&x).iter().map(Run::interval).collect();
        let ok = runs == oracle::naive_maximal_runs(&x)
            && all_cyclic_covers(&x) == oracle::naive_covers(&x)
            && cyclic_period_array(&x).as_slice() == oracle::naive_cyclic_period_array(&x);
        if !ok {
            mismatches += 1;
            println!("mismatch on {x}");
        }
    }
    println!("{count} strings checked, {mismatches} mismatches");
}
