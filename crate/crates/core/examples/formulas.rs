//! Closed-form moment polynomials in every output format.

use multinomial_moments::rational::ratio;
use multinomial_moments::symbolic::{render, symbolic_central, symbolic_noncentral, to_ordinary, Format, Pattern};
use multinomial_moments::MultinomialParams;

fn main() -> multinomial_moments::Result<()> {
    let pattern = Pattern::new(vec![1, 2])?;
    let noncentral = symbolic_noncentral(&pattern);
    let central = symbolic_central(&pattern);

    println!("pattern {pattern}");
    println!("  non-central:          {}", render(&noncentral, Format::Text));
    println!("  non-central (LaTeX):  {}", render(&noncentral, Format::Latex));
    println!("  central:              {}", render(&central, Format::Text));
    println!("  central, powers of m: {}", render(&to_ordinary(&central), Format::Text));
    println!("  JSON: {}", render(&central, Format::Json));

    // x1 carries the largest exponent; map it to the second coordinate.
    let params = MultinomialParams::new(9, vec![ratio(1, 6), ratio(1, 2)])?;
    println!("  at m=9, x=(1/6,1/2), p=(1,2): {}", central.evaluate(&params, &[1, 0])?);
    println!("  at m=9, x=(1/6,1/2), p=(2,1): {}", central.evaluate(&params, &[0, 1])?);
    Ok(())
}
