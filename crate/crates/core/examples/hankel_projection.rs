//! The Hankel band-limiting projector by its three routes.
//!
//!     cargo run --release --example hankel_projection

use prolatekit::bessel_bases::{default_half_grid, Bandwidth, Domain, SampledFunction};
use prolatekit::specfun::Order;
use prolatekit::tail::TailModel;
use prolatekit::transforms::{hankel_out_of_band, hankel_transform_at, lommel_kernel, project_hankel, HankelRoute};

fn main() {
    let c = Bandwidth::new(5.0).unwrap();
    let alpha = Order::new(1.0).unwrap();
    let grid = default_half_grid(c);
    let r = grid.upper();
    let f = SampledFunction::from_fn(grid, Domain::HalfLineTruncated, |x| x.powf(1.5) * (-x * x / 0.1).exp(), TailModel::zero(r));
    println!("H f(2) = {:.10}", hankel_transform_at(&f, alpha, 2.0).unwrap());
    println!("Lommel kernel K(1, 1.5) = {:.12}", lommel_kernel(alpha, c, 1.0, 1.5));

    let routes = [HankelRoute::Lommel, HankelRoute::WeightedHilbert, HankelRoute::Spectral];
    let out: Vec<_> = routes.iter().map(|r| project_hankel(&f, alpha, c, *r).unwrap()).collect();
    for x in [0.25, 0.5, 1.0, 3.0] {
        let vals: Vec<String> = out.iter().map(|g| format!("{:+.10}", g.eval(x))).collect();
        println!("x = {x}: {}", vals.join("  "));
    }
    println!("relative mass beyond c: {:.2e}", hankel_out_of_band(&out[0], alpha, c).unwrap());
}
