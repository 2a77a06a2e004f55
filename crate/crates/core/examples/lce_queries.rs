// Longest common extensions, forward and backward.
//
// cargo run --example lce_queries

use cyclorex::{LceIndex, TwoWayLce};

fn main() {
    let x = b"aababa";
    let idx = LceIndex::build(x).unwrap();
    for (i, j) in [(1, 2), (2, 4), (1, 1), (3, 4)] {
        println!("lce({i}, {j}) = {}", idx.lce(i, j).unwrap());
    }

    // common suffixes of prefixes: aababa and aaba end with "aba"
    let two = TwoWayLce::build(x).unwrap();
    println!("lcs(6, 4) = {}", two.lcs(6, 4).unwrap());
}
