//! Dyadic estimates of the A_p bracket of power weights.
//!
//!     cargo run --release --example muckenhoupt

use prolatekit::transforms::{muckenhoupt_estimate, WeightSpec};

fn main() {
    for p in [1.5, 2.0, 3.0] {
        let mut betas = vec![-0.5, 0.0, p - 1.5, -1.0, p - 1.0];
        betas.dedup();
        for beta in betas {
            let r = muckenhoupt_estimate(&WeightSpec::Power { beta }, p, (0.0, 1.0), 12).unwrap();
            let verdict = if r.diverging { "diverges" } else { "bounded" };
            println!("p = {p}, beta = {beta:+}: [w]_p ~ {:.6} ({verdict})", r.estimate());
        }
    }
    let step = WeightSpec::Tabulated { breaks: vec![0.0, 0.5, 1.0], values: vec![1.0, 4.0] };
    let r = muckenhoupt_estimate(&step, 2.0, (0.0, 1.0), 8).unwrap();
    print!("{}", r.to_csv());
}
