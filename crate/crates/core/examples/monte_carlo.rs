//! Monte Carlo estimates checked against the exact values.

use multinomial_moments::oracle::{sample_moment, Mode};
use multinomial_moments::rational::{ratio, to_f64};
use multinomial_moments::{MultiIndex, MultinomialParams};

fn main() -> multinomial_moments::Result<()> {
    let params = MultinomialParams::new(20, vec![ratio(1, 4), ratio(1, 3)])?;
    let n = 200_000;
    for p in [vec![2, 0], vec![1, 1], vec![2, 1]] {
        let p = MultiIndex::from(p);
        for mode in Mode::ALL {
            let exact = to_f64(&mode.formula(&params, &p)?);
            let est = sample_moment(&params, &p, mode, n, 7)?;
            println!(
                "{:>10} {p}: exact {exact:>10.4}, estimate {:>10.4} +/- {:.4}, z = {:+.2}",
                mode.as_str(),
                est.mean,
                est.standard_error,
                (est.mean - exact) / est.standard_error
            );
        }
    }
    Ok(())
}
