//! Search balls of growing radius for a nonzero finitely supported x with
//! τ(x) = 0. Laplace on the finite group C6 has one; shift difference on Z
//! has none at any radius.

use lincell::analysis::{preinjectivity_search, Window, preinjectivity_window};
use lincell::automaton::LinearCA;
use lincell::groups::{GroupElement, GroupSpec};

fn main() -> lincell::error::Result<()> {
    let c6 = GroupSpec::Cyclic(6);
    let t = LinearCA::laplace(&c6, &c6.standard_generators(), 1)?;
    let found = preinjectivity_search(&t, 3)?;
    match &found.witness {
        Some((w, x)) => println!("C6: witness on a window of {} points: {x}", w.len()),
        None => println!("C6: nothing up to radius 3"),
    }

    let z = GroupSpec::FreeAbelian(1);
    let t = LinearCA::shift_difference(&z, &GroupElement::IntVector(vec![1]), 1)?;
    let none = preinjectivity_search(&t, 20)?;
    println!("Z: radii tried {:?}, witness found: {}", none.radii_tried.len(), none.witness.is_some());
    let big = Window::interval(&z, -200, 200)?;
    println!("Z: interval [-200, 200] witness: {}", preinjectivity_window(&t, &big)?.is_some());
    Ok(())
}
