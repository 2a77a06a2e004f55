// The cyclic-periodic array of every prefix.
//
// cargo run --example period_array [STRING]

use cyclorex::{cyclic_period_array, Text};

fn main() {
    run(std::env::args().nth(1));
}

fn run(input: Option<String>) {
    let input = input.unwrap_or_else(|| "aababa".to_string());
    let x = Text::try_from(input.as_str()).expect("non-empty input");
    let a = cyclic_period_array(&x);
    for (i, v) in a.as_slice().iter().enumerate() {
        println!(
            "A[{}] = {v}  ({})",
            i + 1,
            String::from_utf8_lossy(&x[..=i])
        );
    }
}
