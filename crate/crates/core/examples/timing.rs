//! Rough timings of the default formulas, exact against `f64`, and of the
//! matrix oracle. Run with `cargo run --release --example timing`.

use std::time::Instant;

use mvinverse::oracle::oracle_det;
use mvinverse::random::Sampler;
use mvinverse::{Catalog, Signature};

fn main() {
    let catalog = Catalog::builtin();
    let mut rng = Sampler::new(1);
    println!("{:<8} {:>12} {:>12} {:>12}", "sig", "exact us", "f64 us", "oracle us");
    for n in 1..=6 {
        let sig = Signature::all_of_dim(n)[n / 2];
        let entry = catalog.default_for(n).unwrap();
        let samples: Vec<_> = (0..20).map(|_| rng.general(sig)).collect();
        let floats: Vec<_> = samples.iter().map(|a| a.to_f64()).collect();

        let t = Instant::now();
        for a in &samples {
            entry.det.eval(a).unwrap();
        }
        let exact = t.elapsed().as_micros() / 20;

        let t = Instant::now();
        // Rounding leaves small non-scalar parts, so skip the scalar check.
        for a in &floats {
            entry.det.eval(a).unwrap();
        }
        let float = t.elapsed().as_micros() / 20;

        let t = Instant::now();
        for a in samples.iter().take(5) {
            oracle_det(a);
        }
        let oracle = t.elapsed().as_micros() / 5;
        println!("{:<8} {exact:>12} {float:>12} {oracle:>12}", sig.to_string());
    }
}
