//! Preimages of finitely supported targets under x ↦ x(·g0) − x by running
//! sums along the cosets of ⟨g0⟩, on Z² and on the free group.

use lincell::analysis::{certify, preimage_telescope};
use lincell::automaton::LinearCA;
use lincell::config_space::Configuration;
use lincell::exact_arith::{Scalar, Vector};
use lincell::groups::{GroupElement, GroupSpec};

fn show(g: &GroupSpec, g0: GroupElement, y: Vec<(GroupElement, i64)>) -> lincell::error::Result<()> {
    let t = LinearCA::shift_difference(g, &g0, 1)?;
    let y = Configuration::finitely_supported(g, 1, y.into_iter().map(|(e, v)| (e, Vector(vec![Scalar::from_int(v)]))))?;
    let p = preimage_telescope(&t, &y)?;
    println!("{g}, g0 = {g0}");
    println!("  y = {y}");
    println!("  x = {}", p.preimage);
    println!("  finitely supported: {}, certified on {} elements", p.finitely_supported, p.window.len());
    if p.finitely_supported {
        println!("  global check: {}", certify(&t, &p.preimage, &y)?);
    }
    Ok(())
}

fn main() -> lincell::error::Result<()> {
    let z2 = GroupSpec::FreeAbelian(2);
    let v = |a, b| GroupElement::IntVector(vec![a, b]);
    show(&z2, v(1, 0), vec![(v(0, 0), 1), (v(2, 0), -1), (v(0, 1), 3)])?;
    show(&z2, v(1, 0), vec![(v(-3, 0), 2), (v(-1, 0), -2)])?;

    let f2 = GroupSpec::Free(2);
    let w = |l: &[i32]| GroupElement::ReducedWord(l.to_vec());
    show(&f2, w(&[1]), vec![(w(&[2]), 1), (w(&[2, 1, 1]), -1), (w(&[-1]), 5)])?;
    Ok(())
}
