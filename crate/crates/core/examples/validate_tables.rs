//! Recomputes the published bound tables and prints each claim's status.

use equicolor::bounds::validate_tables;

fn main() -> equicolor::Result<()> {
    let report = validate_tables()?;
    for c in &report.claims {
        let values: Vec<String> = c.rows.iter().map(|r| format!("{}:{}", r.t, r.computed)).collect();
        println!("{:<16} {:?} [{}]", c.id, c.status, values.join(" "));
    }
    println!("all match: {}", report.all_match());
    Ok(())
}
