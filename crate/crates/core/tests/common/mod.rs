#![allow(dead_code)]

use cyclorex::Text;
use rand::Rng;

/// Every string over {a, b} with length in `1..=max_len`.
pub fn binary_strings(max_len: usize) -> impl Iterator<Item = Text> {
    (1..=max_len).flat_map(|len| {
        (0u32..1 << len).map(move |bits| {
            let bytes: Vec<u8> = (0..len).map(|b| b'a' + (bits >> b & 1) as u8).collect();
            Text::new(bytes).unwrap()
        })
    })
}

pub fn random_text<R: Rng>(rng: &mut R, len: usize, alphabet: u8) -> Text {
    Text::new(
        (0..len)
            .map(|_| b'a' + rng.gen_range(0..alphabet))
            .collect::<Vec<u8>>(),
    )
    .unwrap()
}

pub fn show(x: &Text) -> String {
    x.to_string()
}
