//! Monomial GC witnesses on the four-line ideal and on the one-lattice.

use gcnodes::fixtures::{cy_four_lines, one_lattice};
use gcnodes::gc::{monomial_gc_report, parameter_report};

fn main() -> gcnodes::Result<()> {
    for bundle in [cy_four_lines(), one_lattice()?] {
        let params = parameter_report(&bundle.ideal)?;
        let report = monomial_gc_report(&bundle.ideal)?;
        println!("{}: d = {}, n = {}", bundle.name, params.d, params.n);
        for c in &report.components {
            let vars: Vec<usize> = c.vars.vertices().map(|v| bundle.label(v)).collect();
            let tau = c.witness.map(|t| t.vertices().map(|v| bundle.label(v)).collect::<Vec<_>>());
            println!("  {vars:?} -> {tau:?}");
        }
        let maximal: Vec<usize> = report.maximal_hyperplanes.iter().map(|v| bundle.label(v.vertex)).collect();
        println!("  {} of {} components GC, maximal hyperplanes {maximal:?}", report.gc_count, report.components.len());
    }
    Ok(())
}
