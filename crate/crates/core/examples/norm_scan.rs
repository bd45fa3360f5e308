//! Lower bounds on projector norms L^p -> L^q over the standard test family.
//!
//!     cargo run --release --example norm_scan

use prolatekit::bessel_bases::Bandwidth;
use prolatekit::specfun::Order;
use prolatekit::transforms::{operator_norm_scan, Projector, TestFunction};

fn main() {
    let c = Bandwidth::new(5.0).unwrap();
    let ops = [Projector::Fourier { c }, Projector::Hankel { alpha: Order::new(0.5).unwrap(), c }];
    for op in &ops {
        let family = TestFunction::standard_family(op, 10);
        for (p, q) in [(2.0, 2.0), (1.5, 3.0), (2.0, 6.0)] {
            let report = operator_norm_scan(op, p, q, &family).unwrap();
            println!("{op:?} p = {p}, q = {q}: max ratio {:.6}", report.max_ratio());
        }
    }
}
