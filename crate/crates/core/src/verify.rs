//! Seeded self-verification suites, the machinery behind `ssgs verify`.
//!
//! Each suite draws reproducible pseudorandom cases from a counter-based
//! generator and checks one family of identities. A failure carries a
//! human-readable description of the first offending case.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::clifford::{basis_product, Multivector};
use crate::ssgs;
use crate::stats;
use num_complex::Complex64;

/// SplitMix64. Counter-based, so seeded runs reproduce anywhere.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value below `bound`; the modulo bias is irrelevant for
    /// test-case generation.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    /// First failing case, if any.
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// The expected basis product table, spelled out entry by entry so the
/// bitmask implementation is checked against plain data: entry `[a][b]`
/// is the (sign, slot) of `e_a e_b`.
pub const REFERENCE_TABLE: [[(i8, usize); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 4), (-1, 6), (-1, 2), (1, 7), (1, 3), (-1, 5)],
    [(1, 2), (-1, 4), (-1, 0), (1, 5), (1, 1), (-1, 3), (1, 7), (-1, 6)],
    [(1, 3), (1, 6), (-1, 5), (-1, 0), (1, 7), (1, 2), (-1, 1), (-1, 4)],
    [(1, 4), (1, 2), (-1, 1), (1, 7), (-1, 0), (1, 6), (-1, 5), (-1, 3)],
    [(1, 5), (1, 7), (1, 3), (-1, 2), (-1, 6), (-1, 0), (1, 4), (-1, 1)],
    [(1, 6), (-1, 3), (1, 7), (1, 1), (1, 5), (-1, 4), (-1, 0), (-1, 2)],
    [(1, 7), (-1, 5), (-1, 6), (-1, 4), (-1, 3), (-1, 1), (-1, 2), (1, 0)],
];

fn random_value(rng: &mut SplitMix64) -> u64 {
    // mostly moderate values, occasionally huge ones
    match rng.below(8) {
        0 => rng.below(100),
        1..=5 => rng.below(1_000_000_000_000),
        _ => rng.next_u64() >> 1,
    }
}

/// Greedy-rule invariants: reconstruction, monotonicity, residue bounds,
/// repetition limits.
pub fn reconstruction_suite(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = SplitMix64::new(seed ^ 0x5551);
    let mut failure = None;
    for _ in 0..cases {
        let value = random_value(&mut rng);
        let d = ssgs::decompose(value);
        let roots = d.roots();
        if d.reconstruct() != value {
            failure = Some(format!("{value}: squares sum to {}", d.reconstruct()));
            break;
        }
        if !roots.is_empty() && roots[0] != ssgs::isqrt_floor(value) {
            failure = Some(format!("{value}: first root is not the floor square root"));
            break;
        }
        let mut ones = 0;
        let mut twos = 0;
        let mut bad = None;
        for (j, &r) in roots.iter().enumerate() {
            if r == 1 {
                ones += 1;
            }
            if r == 2 {
                twos += 1;
            }
            if j > 0 {
                if r > roots[j - 1] {
                    bad = Some("roots increase");
                }
                if r > ssgs::isqrt_floor(2 * roots[j - 1]) {
                    bad = Some("residue bound violated");
                }
                if r == roots[j - 1] && r >= 3 {
                    bad = Some("root >= 3 repeated");
                }
            }
        }
        if ones > 3 {
            bad = Some("more than three 1-roots");
        }
        if twos > 2 {
            bad = Some("root 2 appeared more than twice");
        }
        if let Some(reason) = bad {
            failure = Some(format!("{value}: {reason} in {roots:?}"));
            break;
        }
    }
    SuiteReport {
        name: "reconstruction",
        cases,
        failure,
    }
}

fn random_set(rng: &mut SplitMix64) -> Vec<u64> {
    let len = rng.below(50) + 1;
    (0..len).map(|_| rng.below(1_000_000_000_000)).collect()
}

/// New Mean never exceeds the arithmetic mean.
pub fn mean_inequality_suite(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = SplitMix64::new(seed ^ 0x4EA1);
    let mut failure = None;
    for _ in 0..cases {
        let set = random_set(&mut rng);
        let s = stats::summarize(&set).expect("nonempty set of in-range values");
        if !(s.new_mean <= s.am && s.new_mean >= 0.0) {
            failure = Some(format!(
                "set of {}: new mean {} vs am {}",
                s.count, s.new_mean, s.am
            ));
            break;
        }
    }
    SuiteReport {
        name: "mean-inequality",
        cases,
        failure,
    }
}

/// The algebra route and the column-mean route compute the same New Mean.
pub fn two_route_suite(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = SplitMix64::new(seed ^ 0x7807);
    let mut failure = None;
    for _ in 0..cases {
        let set = random_set(&mut rng);
        let matrix = stats::coefficient_matrix(&set).expect("in-range values");
        let direct = stats::new_mean_direct(&matrix);
        let clifford = stats::new_mean_clifford(&set).expect("in-range values");
        if (direct - clifford).abs() > 1e-9 * direct.abs().max(1.0) {
            failure = Some(format!("direct {direct} vs clifford {clifford}"));
            break;
        }
    }
    SuiteReport {
        name: "two-route",
        cases,
        failure,
    }
}

/// `AM - New Mean` equals the total column variance.
pub fn lambda_identity_suite(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = SplitMix64::new(seed ^ 0x1A3B);
    let mut failure = None;
    for _ in 0..cases {
        let set = random_set(&mut rng);
        let matrix = stats::coefficient_matrix(&set).expect("in-range values");
        let lambda = stats::lambda(&matrix);
        let s = stats::summarize(&set).expect("in-range values");
        let gap = s.am - s.new_mean;
        if (gap - lambda).abs() > 1e-6 * lambda.abs().max(1e-12) {
            failure = Some(format!("am - nm = {gap} vs lambda {lambda}"));
            break;
        }
        let variance_total: f64 = stats::column_variances(&matrix).iter().sum();
        if (variance_total - lambda).abs() > 1e-6 * lambda.abs().max(1e-12) {
            failure = Some(format!(
                "column variances sum to {variance_total} vs lambda {lambda}"
            ));
            break;
        }
    }
    SuiteReport {
        name: "lambda-identity",
        cases,
        failure,
    }
}

/// The 8x8 basis product table matches `expected` entry for entry.
pub fn algebra_table_suite(expected: &[[(i8, usize); 8]; 8]) -> SuiteReport {
    let mut failure = None;
    'outer: for (a, expected_row) in expected.iter().enumerate() {
        for (b, &(sign, index)) in expected_row.iter().enumerate() {
            let got = basis_product(a, b);
            if got.sign != sign || got.index != index {
                failure = Some(format!(
                    "e{a} e{b}: got ({}, {}), expected ({sign}, {index})",
                    got.sign, got.index
                ));
                break 'outer;
            }
        }
    }
    SuiteReport {
        name: "algebra-table",
        cases: 64,
        failure,
    }
}

fn random_multivector(rng: &mut SplitMix64) -> Multivector {
    let mut coeffs = [Complex64::new(0.0, 0.0); 8];
    for c in coeffs.iter_mut() {
        let re = rng.below(101) as f64 - 50.0;
        let im = rng.below(101) as f64 - 50.0;
        *c = Complex64::new(re, im);
    }
    Multivector::from_coeffs(coeffs)
}

/// The geometric product is associative, exactly, on integer coefficients.
pub fn associativity_suite(seed: u64, cases: u64) -> SuiteReport {
    let mut rng = SplitMix64::new(seed ^ 0xA550);
    let mut failure = None;
    for i in 0..cases {
        let p = random_multivector(&mut rng);
        let q = random_multivector(&mut rng);
        let r = random_multivector(&mut rng);
        if (p * q) * r != p * (q * r) {
            failure = Some(format!("triple {i}: (pq)r != p(qr)"));
            break;
        }
    }
    SuiteReport {
        name: "associativity",
        cases,
        failure,
    }
}

/// Run every suite with per-suite derived seeds.
pub fn run_all(seed: u64, cases: u64) -> Vec<SuiteReport> {
    alloc::vec![
        reconstruction_suite(seed, cases),
        mean_inequality_suite(seed, cases),
        two_route_suite(seed, cases),
        lambda_identity_suite(seed, cases),
        algebra_table_suite(&REFERENCE_TABLE),
        associativity_suite(seed, cases),
    ]
}
