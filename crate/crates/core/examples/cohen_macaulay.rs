//! Reisner's criterion: a complex is Cohen–Macaulay when every link has
//! homology only in top dimension.

use gcnodes::cm::{cm_report, is_cohen_macaulay, reduced_homology};
use gcnodes::{skeleton, SimplicialComplex};

fn main() -> gcnodes::Result<()> {
    let bowtie = SimplicialComplex::from_vertex_lists(5, &[&[0, 1, 2], &[2, 3, 4]])?;
    let sphere = SimplicialComplex::from_vertex_lists(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])?;
    let edges = SimplicialComplex::from_vertex_lists(4, &[&[0, 1], &[2, 3]])?;

    for (name, c) in [("bowtie", &bowtie), ("2-sphere", &sphere), ("two edges", &edges)] {
        let h = reduced_homology(c)?;
        let v = is_cohen_macaulay(c)?;
        println!("{name}: reduced Betti numbers {:?}, CM {}", h.ranks, v.cohen_macaulay);
        if let Some((face, dim)) = v.failure {
            println!("  link of {face} has homology in dimension {dim}");
        }
    }

    let report = cm_report(&skeleton(5, 2)?)?;
    println!("Δ(5,2): {report:?}");
    Ok(())
}
