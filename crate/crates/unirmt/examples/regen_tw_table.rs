//! Regenerates the embedded Tracy-Widom table.
//!
//! ```sh
//! cargo run --release --example regen_tw_table > crates/unirmt/src/tw/table_data.rs
//! ```

use unirmt::tw::painleve::tw1_cdf_grid;

fn main() {
    const S_MIN: f64 = -10.0;
    const S_STEP: f64 = 0.01;
    const N: usize = 1601; // covers [-10.00, 6.00]

    let cdf = tw1_cdf_grid(S_MIN, S_STEP, N);

    println!("// Type-1 Tracy-Widom CDF on s = -10.00(0.01)6.00.");
    println!("// Generated by `cargo run --release --example regen_tw_table`;");
    println!("// see tw::painleve for the Painleve II integration behind it.");
    println!("pub(super) const TW1_S_MIN: f64 = {S_MIN:?};");
    println!("pub(super) const TW1_S_STEP: f64 = {S_STEP:?};");
    println!("pub(super) const TW1_CDF: [f64; {N}] = [");
    for chunk in cdf.chunks(4) {
        let row: Vec<String> = chunk.iter().map(|v| format!("{v:?}")).collect();
        println!("    {},", row.join(", "));
    }
    println!("];");
}
