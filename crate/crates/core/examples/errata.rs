//! Misprints in the published order-8 non-central table.

use multinomial_moments::errata::KNOWN;
use multinomial_moments::symbolic::{render, symbolic_noncentral, Format, Pattern};

fn main() -> multinomial_moments::Result<()> {
    for erratum in KNOWN {
        println!("{erratum}");
        let poly = symbolic_noncentral(&Pattern::new(erratum.pattern.to_vec())?);
        println!("  full expansion: {}", render(&poly, Format::Text));
    }
    Ok(())
}
