//! Exact moments for concrete parameters.

use multinomial_moments::numeric::{central_moment, factorial_moment, mean, noncentral_moment, pmf};
use multinomial_moments::rational::{ratio, to_decimal};
use multinomial_moments::{MultiIndex, MultinomialParams};

fn main() -> multinomial_moments::Result<()> {
    let params = MultinomialParams::new(12, vec![ratio(1, 4), ratio(1, 3)])?;
    println!("m = {}, x = ({}, {})", params.m(), params.x()[0], params.x()[1]);
    println!("mean = {:?}", mean(&params).iter().map(ToString::to_string).collect::<Vec<_>>());

    for p in [vec![2, 0], vec![1, 1], vec![2, 1], vec![3, 3]] {
        let p = MultiIndex::from(p);
        let c = central_moment(&params, &p)?;
        println!(
            "p = {p}: factorial {}, non-central {}, central {} (~{})",
            factorial_moment(&params, &p)?,
            noncentral_moment(&params, &p)?,
            c,
            to_decimal(&c, 6)
        );
    }

    let k = MultiIndex::from(vec![3, 4]);
    println!("P(xi = {k}) = {}", pmf(&params, &k)?);
    Ok(())
}
