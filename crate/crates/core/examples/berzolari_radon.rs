//! Ten points of a tetrahedron: specialization, n-correctness, certificates
//! and the generators of the vanishing ideal built from them.

use gcnodes::fixtures::berzolari_radon;
use gcnodes::geometry::{augment_with_spanned, certify_points, generators_from_certificates, is_n_correct};

fn main() -> gcnodes::Result<()> {
    let bundle = berzolari_radon();
    let x = bundle.configuration()?;
    for (p, c) in x.points().iter().zip(x.provenance()) {
        let affine: Vec<String> = p.affine(x.chart()).unwrap().iter().map(|a| a.to_string()).collect();
        println!("{:?} -> ({})", c.unwrap(), affine.join(", "));
    }
    println!("2-correct: {}", is_n_correct(&x, 2)?);

    let pool = &bundle.forms.forms;
    let direct = certify_points(&x, pool, 2, true);
    println!("certified from the ten forms: {} of 10", direct.iter().flatten().count());

    // The remaining points need the planes x + y + z = 1 and 2.
    let augmented = augment_with_spanned(&x, pool);
    let certs: Vec<_> = certify_points(&x, &augmented, 2, false).into_iter().flatten().collect();
    println!("certified with spanned planes: {} of 10", certs.len());

    let gens = generators_from_certificates(&x, &certs, &augmented)?;
    println!(
        "{} products spanning {} dimensions of cubics (expected {})",
        gens.products.len(),
        gens.span_dimension,
        gens.expected_dimension
    );
    Ok(())
}
