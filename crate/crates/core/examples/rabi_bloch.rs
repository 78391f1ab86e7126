//! Free Rabi precession of level 1, analytic rotation vs RK4 integration of
//! the density-matrix equations.
//!
//! cargo run -p zeno-lab --example rabi_bloch

use std::f64::consts::PI;

use zeno_lab::dynamics::{
    bloch_from_density, density_from_bloch, evolve_bloch, evolve_density_ode, level_populations,
    BlochVector, DEFAULT_ODE_STEPS,
};

fn main() -> zeno_lab::Result<()> {
    let omega = 1.0;
    let start = density_from_bloch(&BlochVector::GROUND)?;
    println!("{:>8} {:>10} {:>10} {:>10} {:>12}", "ωt/π", "R2", "R3", "P2", "|ODE - exact|");
    for step in 0..=8 {
        let t = f64::from(step) * PI / 8.0;
        let exact = evolve_bloch(&BlochVector::GROUND, omega, t);
        let numeric = bloch_from_density(&evolve_density_ode(&start, omega, t, DEFAULT_ODE_STEPS)?)?;
        let err = (numeric.r2 - exact.r2).abs().max((numeric.r3 - exact.r3).abs());
        let (_, p2) = level_populations(&exact);
        println!(
            "{:>8.3} {:>10.6} {:>10.6} {:>10.6} {:>12.1e}",
            f64::from(step) / 8.0,
            exact.r2,
            exact.r3,
            p2,
            err
        );
    }
    Ok(())
}
