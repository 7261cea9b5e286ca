//! Graded Betti numbers of a GC_{d,n} set and the Hilbert data they give.

use gcnodes::geometry::resolution_profile;

fn main() -> gcnodes::Result<()> {
    for (d, n) in [(2, 2), (3, 2), (2, 4)] {
        let p = resolution_profile(d, n)?;
        let terms: Vec<String> = p.terms.iter().map(|t| format!("R(-{})^{}", t.shift, t.rank)).collect();
        println!("d={d} n={n}: {}", terms.join(" <- "));
        println!("  numerator {:?}, |X| = {}", p.hilbert_numerator, p.hilbert_polynomial_constant);
        assert_eq!(p.hilbert_polynomial_from_numerator(), Some(p.hilbert_polynomial_constant as i128));
    }
    Ok(())
}
