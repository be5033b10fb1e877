//! Central moments up to order 4, expanded in ordinary powers of m.

use multinomial_moments::symbolic::{catalog, render, to_ordinary, Format};

fn main() {
    let latex = std::env::args().any(|a| a == "--latex");
    for (pattern, poly) in catalog(4, true) {
        let ordinary = to_ordinary(&poly);
        if latex {
            println!("{pattern} &: {} \\\\", render(&ordinary, Format::Latex));
        } else {
            println!("{pattern}: {}", render(&ordinary, Format::Text));
        }
    }
}
