//! Compare the closed forms with brute-force enumeration over a grid.

use multinomial_moments::oracle::{verify_sweep, ProbabilityGrid};
use multinomial_moments::rational::ratio;

fn main() -> multinomial_moments::Result<()> {
    let grid = ProbabilityGrid::new(vec![ratio(0, 1), ratio(1, 5), ratio(2, 5)]);
    let reports = verify_sweep(5, &[1, 2], 4, &grid)?;
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    for r in reports.iter().take(3) {
        println!("{}", r.to_json_line());
    }
    println!("checked {} moments, {} failed", reports.len(), failed.len());
    for r in failed {
        println!("{}", r.to_json_line());
    }
    Ok(())
}
