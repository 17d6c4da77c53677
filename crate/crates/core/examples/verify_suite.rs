use lucas_cubes::verify::{run, Suite, VerifyConfig};

fn main() -> lucas_cubes::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("structure").parse()?;
    let max_n = std::env::args().nth(2).and_then(|a| a.parse().ok()).unwrap_or(8);
    let report = run(suite, &VerifyConfig::new(max_n))?;
    print!("{}", report.to_plain(true));
    std::process::exit(report.exit_code());
}
