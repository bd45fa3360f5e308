//! Prolate expansions: coefficients, pointwise convergence and L^p errors.
//!
//!     cargo run --release --example expansions

use prolatekit::bessel_bases::{default_real_grid, Bandwidth, Domain, SampledFunction};
use prolatekit::expansions::{default_probes, expansion_reports, lp_divergence_probe};
use prolatekit::prolate_core::build_prolate_basis;
use prolatekit::tail::TailModel;

fn main() {
    let c = Bandwidth::new(10.0).unwrap();
    let basis = build_prolate_basis(c, 60).unwrap();
    let grid = default_real_grid(c);
    let r = grid.upper();
    let f = SampledFunction::from_fn(grid, Domain::RealLineTruncated, |x| (-(x / 0.3).powi(2)).exp(), TailModel::zero(r));

    let reports = expansion_reports(&f, &basis, 50, &[2.0, 6.0], &default_probes()).unwrap();
    let first = &reports[0];
    for a in first.coefficients.iter().take(8) {
        println!("a_{} = {:+.12e}", a.n, a.value);
    }
    for n in [0, 5, 10, 20, 30, 50] {
        println!("N = {n:2}: max probe error {:.3e}, L^2 error {:.3e}, L^6 error {:.3e}",
            first.max_error_at(n), first.lp_error[n], reports[1].lp_error[n]);
    }

    let d = lp_divergence_probe(&f, &basis, 3.0).unwrap();
    println!("||Psi_N f - P_c f||_3 at N = 10, 30, 50: {:.2e} {:.2e} {:.2e}", d.errors[10], d.errors[30], d.errors[50]);
}
