//! Exercises the exact-arithmetic Groebner engine directly: parse a small
//! ideal, compute its reduced basis, and decide membership by normal form.

use digraph_ideals::{IdealBasis, MulStyle, Polynomial, Result, TermOrder, VarTable};

fn main() -> Result<()> {
    let vars = VarTable::new(vec!["x", "y", "z"])?;
    let ord = TermOrder::grevlex(3);
    let gens = vec![
        Polynomial::parse("x^2 - y", &vars)?,
        Polynomial::parse("x^3 - z", &vars)?,
    ];
    let basis = IdealBasis::new(vars.clone(), ord, gens)?;
    let reduced = basis.reduced_groebner()?;

    println!("reduced basis of (x^2 - y, x^3 - z):");
    for g in reduced.generators() {
        println!("  {}", g.to_text(reduced.order(), MulStyle::Explicit));
    }

    // y^3 = (x^2)^3 = (x^3)^2 = z^2 modulo the ideal.
    let inside = Polynomial::parse("y^3 - z^2", &vars)?;
    let outside = Polynomial::parse("y^2 - z", &vars)?;
    println!("y^3 - z^2 in the ideal: {}", reduced.contains(&inside)?);
    println!("y^2 - z  in the ideal: {}", reduced.contains(&outside)?);
    Ok(())
}
