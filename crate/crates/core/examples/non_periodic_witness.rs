//! On a group with an element of infinite order the finite duality breaks:
//! the shift difference kills every constant configuration, yet every
//! finitely supported target has a preimage.

use lincell::analysis::{decide_via_restriction, preimage_telescope};
use lincell::automaton::LinearCA;
use lincell::config_space::Configuration;
use lincell::exact_arith::{Scalar, Vector};
use lincell::groups::{GroupElement, GroupSpec};

fn main() -> lincell::error::Result<()> {
    let z = GroupSpec::FreeAbelian(1);
    let g0 = GroupElement::IntVector(vec![1]);
    let t = LinearCA::shift_difference(&z, &g0, 1)?;

    let c = Configuration::constant(&z, Vector(vec![Scalar::from_int(7)]))?;
    println!("τ(constant 7) = {}", t.apply(&c)?);

    let at = |n: i64, v: i64| (GroupElement::IntVector(vec![n]), Vector(vec![Scalar::from_int(v)]));
    let y = Configuration::finitely_supported(&z, 1, [at(1, 1), at(4, -1)])?;
    let p = preimage_telescope(&t, &y)?;
    println!("preimage of δ1 − δ4: {}", p.preimage);
    println!("τ(x) = y everywhere: {}", t.apply(&p.preimage)? == y);

    // A lone delta needs a preimage that is constant, not zero, on one side.
    let delta = Configuration::finitely_supported(&z, 1, [at(1, 1)])?;
    let p = preimage_telescope(&t, &delta)?;
    println!("preimage of δ1 finitely supported: {}", p.finitely_supported);
    println!("τ(x) = δ1 on {} checked points", p.window.len());

    let d = decide_via_restriction(&t, 1_000)?;
    println!("restriction transfer: {}", serde_json::to_string(&d.to_json()["notes"]).unwrap());
    Ok(())
}
