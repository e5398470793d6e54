//! Fiber audit and tau cardinalities for wheels with 3 to 8 rim vertices.
//!
//! `cargo run -p wheelfan-core --example fibers`

use wheelfan_core::bijection::fiber_report;
use wheelfan_core::enumerate::{tau_cardinality_report, EnumCap};

fn main() {
    for n in 3..=8 {
        print!("{}", fiber_report(n, EnumCap::default()).unwrap().render());
    }
    for t in tau_cardinality_report(3..=8, EnumCap::default()).unwrap() {
        println!("{}", t.render());
    }
}
