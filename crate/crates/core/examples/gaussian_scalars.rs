//! Exact arithmetic over the Gaussian rationals: an automaton whose
//! coefficients involve i, decided by exact rank.

use lincell::analysis::{decide_bijectivity_finite, kernel_witness_global};
use lincell::automaton::LinearCA;
use lincell::exact_arith::{Matrix, Scalar};
use lincell::groups::{GroupElement, GroupSpec};

fn main() -> lincell::error::Result<()> {
    let i = Scalar::i();
    println!("(1+i)/(1-i) = {}", &(&Scalar::from_int(1) + &i) / &(&Scalar::from_int(1) - &i));

    // x(g) + i·x(g+1) on C4 is singular: i^4 = 1 gives a character in the kernel.
    let g = GroupSpec::Cyclic(4);
    let all = g.enumerate()?;
    let t = LinearCA::new(
        &g,
        1,
        [
            (GroupElement::Residue(0), Matrix::identity(1)),
            (GroupElement::Residue(1), Matrix::scalar(1, i.clone())),
        ],
    )?;
    let v = decide_bijectivity_finite(&t, &all)?;
    println!("C4, 1 + i·shift: injective={:?}", v.injective);
    if v.injective == Some(false) {
        println!("kernel element: {}", kernel_witness_global(&t, &all)?);
    }

    let t3 = LinearCA::new(
        &GroupSpec::Cyclic(3),
        1,
        [
            (GroupElement::Residue(0), Matrix::identity(1)),
            (GroupElement::Residue(1), Matrix::scalar(1, i)),
        ],
    )?;
    let all3 = GroupSpec::Cyclic(3).enumerate()?;
    println!("C3, 1 + i·shift: injective={:?}", decide_bijectivity_finite(&t3, &all3)?.injective);
    Ok(())
}
