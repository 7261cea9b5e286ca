//! Natural lattices for small (d, n): generic hyperplanes, their
//! intersection points, GC certificates and the determinantal presentation.

use gcnodes::chung_yao::{chung_yao_configuration, determinantal_check, generic_matrix};
use gcnodes::geometry::{gc_certificates, is_n_correct, maximal_hyperplanes};

fn main() -> gcnodes::Result<()> {
    for (d, n) in [(2, 1), (2, 2), (2, 3), (3, 2), (4, 1)] {
        let (_, map, x) = chung_yao_configuration(d, n, 1)?;
        let certified = gc_certificates(&x, map.forms(), n, false).is_some();
        let maximal = maximal_hyperplanes(&x, map.forms(), n).iter().filter(|h| h.maximal).count();
        let m = generic_matrix(n + d, n + 1, 1)?;
        println!(
            "d={d} n={n}: {} points, {n}-correct {}, certified {certified}, {maximal} maximal, determinantal {}",
            x.len(),
            is_n_correct(&x, n)?,
            determinantal_check(d, n, &m)?
        );
    }
    Ok(())
}
