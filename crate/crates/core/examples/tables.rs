//! Both isometry tables, the matrix-model counts and the coset dimensions.
//!
//! cargo run --release --example tables

use bioct::liealg::tables::table_report;

fn main() {
    let t = table_report(1e-8, &|line| eprintln!("{line}"));
    for r in t.table1.iter().chain(&t.table2) {
        println!(
            "{:<10} {:<8} {:<24} dim {:>2}/{:<2} chi {:>4}/{:<4} {}",
            r.plane,
            r.group,
            r.construction,
            r.computed_dim.map_or("-".into(), |d| d.to_string()),
            r.expected_dim,
            r.computed_character.map_or("-".into(), |c| c.to_string()),
            r.expected_character.map_or("-".into(), |c| c.to_string()),
            if r.pass { "ok" } else { "MISMATCH" }
        );
    }
    for m in &t.matrix_models {
        println!("{:?}", m);
    }
    for c in &t.cosets {
        println!("{:?}", c);
    }
    println!("all rows pass: {}", t.pass());
}
