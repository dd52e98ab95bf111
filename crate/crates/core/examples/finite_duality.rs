//! On a finite group a linear CA is injective exactly when it is surjective.
//! Run a few Laplace operators on cyclic and symmetric groups and print the
//! verdicts with a kernel witness when one exists.

use lincell::analysis::decide_bijectivity_finite;
use lincell::automaton::LinearCA;
use lincell::groups::GroupSpec;

fn main() -> lincell::error::Result<()> {
    for g in [GroupSpec::Cyclic(5), GroupSpec::Cyclic(6), GroupSpec::Symmetric(3)] {
        let all = g.enumerate()?;
        let t = LinearCA::laplace(&g, &g.standard_generators(), 1)?;
        let v = decide_bijectivity_finite(&t, &all)?;
        println!("{g}: injective={:?} surjective={:?}", v.injective, v.surjective);
        if let Some(w) = &v.witness {
            println!("  kernel witness: {w}");
        }
    }
    Ok(())
}
