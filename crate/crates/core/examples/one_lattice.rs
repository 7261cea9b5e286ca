//! A GC set that is not monomial GC: specialize the one-lattice by generic
//! planes and compare the pool certificates with the monomial witnesses.

use gcnodes::fixtures::one_lattice;
use gcnodes::gc::monomial_gc_report;
use gcnodes::geometry::{augment_with_spanned, certify_points, is_n_correct, maximal_hyperplanes};

fn main() -> gcnodes::Result<()> {
    let bundle = one_lattice()?;
    let x = bundle.configuration()?;
    let pool = &bundle.forms.forms;
    println!("{} points, 2-correct: {}", x.len(), is_n_correct(&x, 2)?);

    let report = monomial_gc_report(&bundle.ideal)?;
    let direct = certify_points(&x, pool, 2, true);
    for (c, cert) in report.components.iter().zip(&direct) {
        let p = x.point_of(gcnodes::PrimeComponent::new(c.vars)?).unwrap();
        println!(
            "point {p}: monomial witness {:?}, pool certificate {:?}",
            c.witness,
            cert.as_ref().map(|c| &c.factors)
        );
    }

    let augmented = augment_with_spanned(&x, pool);
    let all = certify_points(&x, &augmented, 2, false);
    println!("certified with spanned planes: {} of {}", all.iter().flatten().count(), x.len());

    let maximal: Vec<usize> = maximal_hyperplanes(&x, pool, 2)
        .iter()
        .filter(|h| h.maximal)
        .map(|h| bundle.label(h.form))
        .collect();
    println!("maximal planes: {maximal:?}");
    Ok(())
}
