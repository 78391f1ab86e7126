//! Reproduces the occupation / survival-complement table for
//! N = 1, 2, 4, …, 64 and prints it next to the rate-equation value.
//!
//! cargo run -p zeno-lab --example occupation_vs_survival

use zeno_lab::report::{comparison_rows, format_probability, TABLE1_N_VALUES};

fn main() -> zeno_lab::Result<()> {
    println!("{:>4} {:>10} {:>10} {:>10}", "N", "P2(T)", "𝒫2(T)", "rate eq.");
    for &n in &TABLE1_N_VALUES {
        let row = &comparison_rows(n, n, None, None)?[0];
        println!(
            "{:>4} {:>10} {:>10} {:>10}",
            n,
            format_probability(row.p2_occupation, 4),
            format_probability(row.p2_survival_complement, 4),
            format_probability(row.p2_cook, 4)
        );
    }
    Ok(())
}
