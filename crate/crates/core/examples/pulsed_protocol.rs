//! N measurements during a π pulse: the Bloch vector after each measurement
//! and the level-2 population it implies.
//!
//! cargo run -p zeno-lab --example pulsed_protocol -- 8

use zeno_lab::dynamics::PulseProtocol;
use zeno_lab::measurement::{occupation_closed_form, run_pulsed_protocol};

fn main() -> zeno_lab::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let result = run_pulsed_protocol(&PulseProtocol::with_unit_frequency(n)?);
    println!("N = {n}, τ = {:.6}", result.protocol.interval());
    println!("{:>4} {:>12} {:>12}", "n", "R3", "P2");
    for (i, (r, p2)) in result.bloch_after_each.iter().zip(&result.p2_after_each).enumerate() {
        println!("{:>4} {:>12.8} {:>12.8}", i + 1, r.r3, p2);
    }
    let (_, closed) = occupation_closed_form(n)?;
    println!("P2(T) simulated {:.12}, closed form {:.12}", result.p2_final, closed);
    Ok(())
}
