//! The incoherent rate model: the published closed form, direct integration
//! of the rate equations with k = ω²τ/2, and the exact occupation
//! probability.
//!
//! cargo run -p zeno-lab --example rate_equations

use zeno_lab::cook::{cook_closed_form, cook_ode_p2, DEFAULT_RATE_STEPS};
use zeno_lab::measurement::occupation_closed_form;

fn main() -> zeno_lab::Result<()> {
    println!("{:>6} {:>12} {:>12} {:>12}", "N", "exact P2", "closed form", "integrated");
    for n in [1u32, 2, 4, 16, 64, 100, 1000] {
        println!(
            "{:>6} {:>12.8} {:>12.8} {:>12.8}",
            n,
            occupation_closed_form(n)?.1,
            cook_closed_form(n)?,
            cook_ode_p2(n, DEFAULT_RATE_STEPS)?
        );
    }
    Ok(())
}
