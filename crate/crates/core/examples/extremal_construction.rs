//! Builds the extremal r-partite gadget and checks its structure.
//!
//! `cargo run --release --example extremal_construction -- [k] [r]`

use pog::extremal::{build_extremal, counting_check, verify_structure, ConstructParams, DEFAULT_MAX_VERTICES};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer argument"));
    let k = args.next().unwrap_or(3);
    let r = args.next().unwrap_or(3);
    let params = ConstructParams { k, r };
    let (g, _, layout) = build_extremal(params, DEFAULT_MAX_VERTICES).expect("construction failed");
    println!("k = {k}, r = {r}: n = {}, m = {}, |U*| = {}", g.vertex_count(), g.edge_count(), layout.u_star().len());
    print!("{}", verify_structure(&g, &layout));
    println!("{}", counting_check(k, r));
}
