//! The measurement-history tree: every sequence of levels, grouped by flip
//! count, against the binomial decomposition.
//!
//! cargo run -p zeno-lab --example history_tree -- 4

use std::collections::BTreeMap;

use zeno_lab::combinatorics::{
    binomial_row, enumerate_histories, occupation_from_binomial, survival_closed_form, FlipKernel,
};

fn main() -> zeno_lab::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let kernel = FlipKernel::new(n)?;
    println!("N = {n}: stay c² = {:.6}, flip s² = {:.6}", kernel.stay_prob(), kernel.flip_prob());

    let histories = enumerate_histories(&kernel)?;
    if n <= 4 {
        for (history, p) in &histories {
            println!("  {history:<10} flips {}  p = {p:.6}", history.flip_count());
        }
    }

    let mut by_flips: BTreeMap<usize, f64> = BTreeMap::new();
    for (history, p) in &histories {
        *by_flips.entry(history.flip_count()).or_default() += p;
    }
    let binomial = binomial_row(n);
    println!("{:>6} {:>14} {:>14}", "flips", "enumerated", "C(N,n)s²ⁿc²⁽ᴺ⁻ⁿ⁾");
    for (&flips, &mass) in &by_flips {
        let term = binomial[flips]
            * kernel.flip_prob().powi(flips as i32)
            * kernel.stay_prob().powi((n as usize - flips) as i32);
        println!("{flips:>6} {mass:>14.10} {term:>14.10}");
    }

    let (p1, _) = occupation_from_binomial(&kernel);
    let (surv1, _) = survival_closed_form(n)?;
    println!("level 1 at T (even flips): {p1:.10}");
    println!("level 1 at every measurement (no flips): {surv1:.10}");
    Ok(())
}
