//! A verification campaign from a TOML spec: every connected triangle-free
//! planar graph up to order 8, colored with Δ colors by both solvers.

use equicolor::harness::{run_conjecture_check, CampaignSpec};

const SPEC: &str = r#"
name = "triangle-free small"
family = "triangle-free"
solver = "both"
delta_min = 2
exceptions = "skip"

[corpus]
kind = "exhaustive"
n_max = 8
connected = true
"#;

fn main() -> equicolor::Result<()> {
    let spec = CampaignSpec::from_toml_str(SPEC)?;
    let report = run_conjecture_check(&spec)?;
    println!("{:?}", report.counts);
    println!("mechanisms: {:?}", report.mechanisms);
    println!("critical: {}, exit code {}", report.critical.len(), report.exit_code());
    let csv = report.to_csv();
    for line in csv.lines().take(4) {
        println!("{line}");
    }
    Ok(())
}
