//! Prints the two-cycle Nakayama family report: `cargo run --example family_report -- 2`.

fn main() -> abcat::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let r = abcat::singeq::family_report::<abcat::linalg::Q>(n, 60)?;
    print!("{}", r.render());
    Ok(())
}
