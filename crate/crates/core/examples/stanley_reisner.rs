//! From a complex to its Stanley–Reisner ideal, the primary decomposition
//! and the dual ideal.

use gcnodes::{sr_ideal, SimplicialComplex};

fn main() -> gcnodes::Result<()> {
    // A path 0-1-2 plus an isolated vertex 3.
    let delta = SimplicialComplex::from_vertex_lists(4, &[&[0, 1], &[1, 2], &[3]])?;
    let ideal = sr_ideal(&delta)?;
    println!("generators: {:?}", ideal.generators());

    let components = ideal.primary_decomposition()?;
    println!("components: {components:?}");
    for c in &components {
        // Each facet is the complement of a component.
        let facet = c.variables().complement(4);
        assert!(delta.facets().contains(&facet));
    }

    let dual = ideal.dual()?;
    println!("dual ideal: {:?}", dual.generators());
    assert_eq!(dual, sr_ideal(&delta.alexander_dual())?);

    match ideal.codim_degree() {
        Ok((c, e)) => println!("codimension {c}, degree {e}"),
        Err(e) => println!("codim/degree: {e}"),
    }
    Ok(())
}
