//! Build an explicit kernel element of a singular Laplace operator and check
//! it against the automaton by direct evaluation.

use lincell::analysis::{kernel_witness_global, matrix_of};
use lincell::automaton::LinearCA;
use lincell::exact_arith::{kernel_basis, rank};
use lincell::groups::GroupSpec;

fn main() -> lincell::error::Result<()> {
    let g = GroupSpec::Symmetric(3);
    let all = g.enumerate()?;
    let t = LinearCA::laplace(&g, &g.standard_generators(), 2)?;

    let m = matrix_of(&t, &all)?;
    println!("matrix {}x{}, rank {}, kernel dimension {}", m.rows(), m.cols(), rank(&m), kernel_basis(&m).len());

    let x = kernel_witness_global(&t, &all)?;
    println!("witness x = {x}");
    println!("τ(x) is zero: {}", t.apply(&x)?.is_zero());
    Ok(())
}
