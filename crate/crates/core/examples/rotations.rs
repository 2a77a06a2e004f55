// Rotations, least rotations and conjugacy.
//
// cargo run --example rotations

use cyclorex::{canonical_rotation, is_rotation, rotate, RotationShift};

fn main() {
    let u = b"ababc";
    for delta in 1..=u.len() {
        let r = rotate(u, RotationShift::new(delta).unwrap()).unwrap();
        println!("c_{delta}(ababc) = {}", String::from_utf8_lossy(&r));
    }

    for s in ["baaa", "bcaba", "aaaa"] {
        let (canon, shift) = canonical_rotation(s.as_bytes()).unwrap();
        println!(
            "least rotation of {s}: {} (shift {shift})",
            String::from_utf8_lossy(&canon)
        );
    }

    for (a, b) in [("aaab", "aaba"), ("ab", "bb"), ("ababc", "abcab")] {
        println!("{a} ~ {b}: {}", is_rotation(a.as_bytes(), b.as_bytes()));
    }
}
