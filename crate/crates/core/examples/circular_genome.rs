// A circular sequence read from FASTA, opened at two different positions.
//
// cargo run --example circular_genome [FILE.fa]

use cyclorex::cli::parse_fasta;
use cyclorex::{
    all_cyclic_covers, canonical_rotation, maximal_cyclic_runs, rotate, RotationShift, Text,
};

const SAMPLE: &str = "\
>plasmid_a circular toy sequence
ACGTTGCAACGTTGCA
TGCAACGTACGTTGCA
>plasmid_b
GATTACA
";

fn main() {
    run(std::env::args().nth(1));
}

fn run(path: Option<String>) {
    let data = match path {
        Some(path) => std::fs::read(path).expect("readable FASTA file"),
        None => SAMPLE.as_bytes().to_vec(),
    };
    for record in parse_fasta(&data).expect("valid FASTA") {
        let x = Text::new(record.sequence).unwrap();
        // the same molecule broken at another position
        let opened = rotate(&x, RotationShift::new(x.len() / 2 + 1).unwrap()).unwrap();
        let (canon, _) = canonical_rotation(&x).unwrap();
        let (canon2, _) = canonical_rotation(&opened).unwrap();
        assert_eq!(canon, canon2);

        println!("{} (n = {})", record.id, x.len());
        println!(
            "  canonical start: {}",
            String::from_utf8_lossy(&canon[..canon.len().min(12)])
        );
        println!("  proper cyclic covers: {:?}", all_cyclic_covers(&x));
        let runs = maximal_cyclic_runs(&x);
        let longest = runs.iter().max_by_key(|r| r.len());
        println!(
            "  {} maximal runs, longest {:?}",
            runs.len(),
            longest.map(|r| r.interval())
        );
    }
}
