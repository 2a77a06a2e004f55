// k-cyclic decompositions and the full list of cyclic periods.
//
// cargo run --example cyclic_periods

use cyclorex::{all_cyclic_periods, k_cyclic_decompose, smallest_cyclic_period, Text};

fn main() {
    let x = Text::try_from("aaabaabaabaabaaa").unwrap();

    let d = k_cyclic_decompose(&x, 4)
        .unwrap()
        .expect("4-cyclic periodic");
    println!("{x} = {} blocks of length {}", d.block_count, d.block_len);
    for (block, shift) in d.blocks(&x).zip(&d.shifts) {
        println!("  {} = c_{shift}(u1)", String::from_utf8_lossy(block));
    }
    assert_eq!(d.reconstruct(&x), x.as_bytes());

    for p in all_cyclic_periods(&x) {
        println!("k = {:2}, l = {}", p.block_len, p.block_count);
    }
    let s = smallest_cyclic_period(&x);
    println!("smallest cyclic period: k = {}", s.block_len);

    let y = Text::try_from("aababa").unwrap();
    println!(
        "aababa 2-cyclic: {}",
        k_cyclic_decompose(&y, 2).unwrap().is_some()
    );
}
