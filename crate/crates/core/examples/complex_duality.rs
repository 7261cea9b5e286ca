//! Alexander duality on the skeleton complexes and the f-vector law that
//! ties a complex to its dual.

use gcnodes::cm::fv_duality_check;
use gcnodes::{skeleton, SimplicialComplex};

fn main() -> gcnodes::Result<()> {
    for (i, j) in [(4, 2), (5, 2), (6, 3)] {
        let delta = skeleton(i, j)?;
        let dual = delta.alexander_dual();
        println!("Δ({i},{j})   f = {:?}", delta.f_vector().counts());
        println!("Δ({i},{j})^∨ f = {:?}", dual.f_vector().counts());
        println!("  duality law holds: {}", fv_duality_check(&delta));
        assert_eq!(dual.alexander_dual(), delta);
    }

    // The boundary of a square is dual to two disjoint edges.
    let square = SimplicialComplex::from_vertex_lists(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]])?;
    let dual = square.alexander_dual();
    println!("dual of the 4-cycle: {:?}", dual.facets());
    Ok(())
}
