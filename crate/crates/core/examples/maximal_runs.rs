// Maximal cyclic periodic factors.
//
// cargo run --example maximal_runs [STRING]

use cyclorex::{is_cyclic_periodic_substring, maximal_cyclic_runs, maximal_k_cyclic_runs, Text};

fn main() {
    run(std::env::args().nth(1));
}

fn run(input: Option<String>) {
    let input = input.unwrap_or_else(|| "aaaabababaaa".to_string());
    let x = Text::try_from(input.as_str()).expect("non-empty input");

    for run in maximal_cyclic_runs(&x) {
        let factor = String::from_utf8_lossy(&x[run.start - 1..run.end]);
        let ks: Vec<String> = run
            .witnesses
            .iter()
            .map(|w| format!("{}x{}", w.block_count, w.block_len))
            .collect();
        println!(
            "[{:>2}, {:>2}] {factor:<12} {}",
            run.start,
            run.end,
            ks.join(" ")
        );
    }

    if x.len() >= 6 {
        println!(
            "runs with k = 3: {:?}",
            maximal_k_cyclic_runs(&x, 3).unwrap()
        );
    }
    if x.len() >= 12 {
        // one symbol more on either side breaks the 3-block structure
        for (s, e) in [(3, 11), (2, 11), (3, 12)] {
            println!(
                "[{s}, {e}] -> {:?}",
                is_cyclic_periodic_substring(&x, s, e).unwrap()
            );
        }
    }
}
