//! Finite-window evidence for surjectivity on an infinite group: solve
//! τ(x) = y on an inner window with x supported in a larger outer window.

use lincell::analysis::{preimage_window, verify, Window};
use lincell::automaton::LinearCA;
use lincell::groups::GroupSpec;
use lincell::random;

fn main() -> lincell::error::Result<()> {
    let g = GroupSpec::FreeAbelian(2);
    let t = LinearCA::laplace(&g, &g.standard_generators(), 1)?;
    let mut rng = random::seeded(5);
    let pts = Window::ball(&g, 2)?.elements().to_vec();
    let y = random::configuration_on(&mut rng, &g, 1, &pts, 9)?;

    for r in [2, 3, 4] {
        let inner = Window::ball(&g, r)?;
        let outer = Window::ball(&g, r + 1)?;
        match preimage_window(&t, &y, &inner, &outer)? {
            Some(x) => {
                let ok = verify(&t, &x, &y, inner.elements())?.passed();
                println!("radius {r}: solved on {} points, verified {ok}", inner.len());
            }
            None => println!("radius {r}: no preimage supported in the outer window"),
        }
    }
    Ok(())
}
