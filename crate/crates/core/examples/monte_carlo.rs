//! Seeded Monte Carlo of individual atoms. The same trajectories give the
//! occupation estimate (final level only) and the post-selected survival
//! estimate (level 1 at every measurement).
//!
//! cargo run -p zeno-lab --release --example monte_carlo -- 1000000

use zeno_lab::combinatorics::survival_closed_form;
use zeno_lab::measurement::occupation_closed_form;
use zeno_lab::monte_carlo::{estimate, DEFAULT_SEED};

fn main() -> zeno_lab::Result<()> {
    let trials: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(1_000_000);
    println!("M = {trials}, seed = {DEFAULT_SEED:#x}");
    println!(
        "{:>4} {:>22} {:>10} {:>22} {:>10}",
        "N", "occupation p1 ± se", "exact", "survival p1 ± se", "exact"
    );
    for n in [1u32, 2, 4, 8, 16, 32, 64] {
        let est = estimate(n, trials, DEFAULT_SEED)?;
        println!(
            "{:>4} {:>13.6} ± {:.6} {:>10.6} {:>13.6} ± {:.6} {:>10.6}",
            n,
            est.occupation_p1,
            est.stderr_occupation,
            occupation_closed_form(n)?.0,
            est.survival_p1,
            est.stderr_survival,
            survival_closed_form(n)?.0
        );
    }

    let a = estimate(16, trials, 1)?;
    let merged = a.merge(&estimate(16, trials, 2)?)?;
    println!(
        "N = 16 merged over two seeds: {:.6} ± {:.6} (single run ± {:.6})",
        merged.occupation_p1, merged.stderr_occupation, a.stderr_occupation
    );
    Ok(())
}
