//! When the memory set generates a finite subgroup H, the behaviour of τ on
//! the whole group is read off from τ restricted to H.

use lincell::analysis::{decide_bijectivity_finite, decide_via_restriction, product_decomposition_check};
use lincell::automaton::LinearCA;
use lincell::groups::{GroupElement, GroupSpec, Subgroup};

fn main() -> lincell::error::Result<()> {
    let g = GroupSpec::Cyclic(12);
    let s = [GroupElement::Residue(4)];
    let t = LinearCA::laplace(&g, &s, 1)?;

    let decision = decide_via_restriction(&t, 1_000)?;
    println!("decision: {}", serde_json::to_string(&decision.to_json()).unwrap());

    let all = g.enumerate()?;
    let h: Vec<_> = all.iter().filter(|e| matches!(e, GroupElement::Residue(v) if v % 4 == 0)).cloned().collect();
    let restricted = t.restrict(&Subgroup::new(&g, &h)?)?;
    let full = decide_bijectivity_finite(&t, &all)?;
    let sub = decide_bijectivity_finite(&restricted, &h)?;
    println!("|G| = {}, |H| = {}", all.len(), h.len());
    println!("injective on G: {:?}, on H: {:?}", full.injective, sub.injective);

    let agree = product_decomposition_check(&t, &h, &all, 25, 7)?;
    println!("coset-wise agreement on 25 random configurations: {agree}");
    Ok(())
}
