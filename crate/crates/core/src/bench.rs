//! Input generators and timing helpers for scaling measurements.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;

use crate::text::Text;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Uniform symbols over the first `alphabet` lowercase letters.
    Random,
    Unary,
    /// Random rotations of one random block of length `k`.
    KPeriodic,
    /// A binary de Bruijn sequence, truncated to `n`.
    DeBruijn,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Random,
        Family::Unary,
        Family::KPeriodic,
        Family::DeBruijn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Unary => "unary",
            Family::KPeriodic => "k-periodic",
            Family::DeBruijn => "de-bruijn",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "random" => Ok(Family::Random),
            "unary" => Ok(Family::Unary),
            "k-periodic" | "periodic" => Ok(Family::KPeriodic),
            "de-bruijn" | "de-bruijn-like" | "debruijn" => Ok(Family::DeBruijn),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    KPeriod,
    AllPeriods,
    PeriodArray,
    Runs,
    Covers,
    Canonical,
}

impl Operation {
    pub const ALL: [Operation; 6] = [
        Operation::KPeriod,
        Operation::AllPeriods,
        Operation::PeriodArray,
        Operation::Runs,
        Operation::Covers,
        Operation::Canonical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Operation::KPeriod => "k_period",
            Operation::AllPeriods => "all_periods",
            Operation::PeriodArray => "period_array",
            Operation::Runs => "runs",
            Operation::Covers => "covers",
            Operation::Canonical => "canonical",
        }
    }

    /// Operations whose budget is at least quadratic in `n`.
    pub fn is_quadratic(self) -> bool {
        matches!(
            self,
            Operation::PeriodArray | Operation::Runs | Operation::Covers
        )
    }

    /// Runs the operation once; the returned number is a size summary of
    /// the result so the work cannot be optimised away.
    pub fn run(self, x: &Text, k: usize) -> usize {
        match self {
            Operation::KPeriod => {
                let k = k.clamp(1, x.len());
                crate::period::is_k_cyclic_periodic(x, k).unwrap_or(false) as usize
            }
            Operation::AllPeriods => crate::period::all_cyclic_periods(x).len(),
            Operation::PeriodArray => crate::period::cyclic_period_array(x).len(),
            Operation::Runs => crate::runs::maximal_cyclic_runs(x).len(),
            Operation::Covers => crate::cover::all_cyclic_covers(x).len(),
            Operation::Canonical => crate::text::least_rotation_offset(x),
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Operation::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| format!("unknown operation `{s}`"))
    }
}

/// Generates `n` symbols of the given family. Deterministic for a given
/// RNG state.
pub fn generate<R: Rng>(family: Family, n: usize, k: usize, alphabet: u8, rng: &mut R) -> Text {
    let alphabet = alphabet.clamp(1, 26);
    let letter = |rng: &mut R| b'a' + rng.gen_range(0..alphabet);
    let bytes: Vec<u8> = match family {
        Family::Random => (0..n).map(|_| letter(rng)).collect(),
        Family::Unary => vec![b'a'; n],
        Family::KPeriodic => {
            let k = k.max(1);
            let block: Vec<u8> = (0..k).map(|_| letter(rng)).collect();
            let mut out = Vec::with_capacity(n + k);
            while out.len() < n {
                let d = rng.gen_range(0..k);
                out.extend_from_slice(&block[d..]);
                out.extend_from_slice(&block[..d]);
            }
            out.truncate(n);
            out
        }
        Family::DeBruijn => {
            let mut order = 1;
            while (1usize << order) < n {
                order += 1;
            }
            let seq = de_bruijn_binary(order);
            seq.iter().cycle().take(n).map(|&b| b'a' + b).collect()
        }
    };
    Text::new(bytes).expect("n must be positive")
}

/// Binary de Bruijn sequence of the given order (FKM construction).
fn de_bruijn_binary(order: usize) -> Vec<u8> {
    fn visit(t: usize, p: usize, order: usize, a: &mut Vec<u8>, out: &mut Vec<u8>) {
        if t > order {
            if order.is_multiple_of(p) {
                out.extend_from_slice(&a[1..=p]);
            }
            return;
        }
        a[t] = a[t - p];
        visit(t + 1, p, order, a, out);
        for c in a[t - p] + 1..2 {
            a[t] = c;
            visit(t + 1, t, order, a, out);
        }
    }
    let mut a = vec![0u8; order + 1];
    let mut out = Vec::with_capacity(1 << order);
    visit(1, 1, order, &mut a, &mut out);
    out
}

/// Wall time of one execution, in milliseconds.
pub fn time_ms(op: Operation, x: &Text, k: usize) -> f64 {
    let start = Instant::now();
    std::hint::black_box(op.run(x, k));
    start.elapsed().as_secs_f64() * 1e3
}

/// Median wall time over `repeat` executions.
pub fn median_time_ms(op: Operation, x: &Text, k: usize, repeat: usize) -> f64 {
    let mut times: Vec<f64> = (0..repeat.max(1)).map(|_| time_ms(op, x, k)).collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

/// Least-squares slope of `log t` against `log n`.
pub fn growth_exponent(points: &[(usize, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .map(|&(n, t)| ((n as f64).ln(), t.max(1e-9).ln()))
        .collect();
    let m = logs.len() as f64;
    let (sx, sy) = logs
        .iter()
        .fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let num: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = logs.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn de_bruijn_contains_every_window() {
        let seq = de_bruijn_binary(4);
        assert_eq!(seq.len(), 16);
        let mut seen = [false; 16];
        for i in 0..16 {
            let v = (0..4).fold(0, |acc, j| acc * 2 + seq[(i + j) % 16] as usize);
            seen[v] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn generation_is_deterministic() {
        for family in Family::ALL {
            let a = generate(family, 100, 4, 2, &mut ChaCha8Rng::seed_from_u64(7));
            let b = generate(family, 100, 4, 2, &mut ChaCha8Rng::seed_from_u64(7));
            assert_eq!(a, b);
            assert_eq!(a.len(), 100);
        }
    }

    #[test]
    fn k_periodic_family_is_periodic() {
        let x = generate(
            Family::KPeriodic,
            400,
            4,
            2,
            &mut ChaCha8Rng::seed_from_u64(1),
        );
        assert!(crate::period::is_k_cyclic_periodic(&x, 4).unwrap());
    }

    #[test]
    fn names_round_trip() {
        for op in Operation::ALL {
            assert_eq!(op.name().parse::<Operation>().unwrap(), op);
        }
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
    }

    #[test]
    fn exponent_of_quadratic_points() {
        let pts = [(1000, 1.0), (2000, 4.0), (4000, 16.0)];
        assert!((growth_exponent(&pts) - 2.0).abs() < 1e-9);
    }
}
