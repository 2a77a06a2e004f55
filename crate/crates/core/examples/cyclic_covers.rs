// Covers by rotations of a prefix.
//
// cargo run --example cyclic_covers

use cyclorex::{all_cyclic_covers, k_cyclic_cover_report, smallest_cyclic_cover, Text};

fn main() {
    let x = Text::try_from("ababbaba").unwrap();
    println!("proper cyclic covers of {x}: {:?}", all_cyclic_covers(&x));
    println!("smallest: {:?}", smallest_cyclic_cover(&x));

    for k in [3, 4] {
        let r = k_cyclic_cover_report(&x, k).unwrap();
        println!(
            "k' = {k}: cover {} occurrences {:?} gaps {:?} -> {}",
            String::from_utf8_lossy(&r.cover_string),
            r.occurrences,
            r.gaps,
            r.is_cover
        );
    }

    let y = Text::try_from("aababaa").unwrap();
    println!(
        "{}",
        serde_json::to_string_pretty(&k_cyclic_cover_report(&y, 4).unwrap()).unwrap()
    );
}
