//! One line per acceptance criterion. Runs every criterion, then exits
//! nonzero if any failed.

mod common;

use std::collections::BTreeSet;

use gcnodes::chung_yao::{chung_yao_configuration, determinantal_check, generic_matrix, in_general_position};
use gcnodes::cm::{bicm_fvector_factorization, fv_duality_check, is_bicm, is_cohen_macaulay, FvectFactorization};
use gcnodes::fixtures::{berzolari_radon, cy_four_lines, one_lattice};
use gcnodes::gc::{infer_parameters, monomial_gc_report, monomial_gc_witness};
use gcnodes::geometry::{
    augment_with_spanned, certify_points, gc_certificates, generators_from_certificates,
    is_n_correct, maximal_hyperplanes, rational, resolution_profile, PointConfiguration,
    ProjectivePoint, ResolutionTerm,
};
use gcnodes::{binomial, skeleton, sr_ideal, Error, Face, PrimeComponent, SimplicialComplex, SquarefreeMonomialIdeal};

type Checks = Vec<(String, bool)>;

fn check(checks: &mut Checks, label: impl Into<String>, ok: bool) {
    checks.push((label.into(), ok));
}

fn face(v: &[usize]) -> Face {
    Face::new(v.iter().copied()).unwrap()
}

fn criterion_1(checks: &mut Checks, notes: &mut Vec<String>) {
    let ideal = sr_ideal(&skeleton(4, 2).unwrap()).unwrap();
    let gens: Vec<Face> = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]].iter().map(|g| face(g)).collect();
    check(checks, "four cubic generators", ideal.generators() == gens.as_slice());

    let comps = ideal.primary_decomposition().unwrap();
    let pairs: Vec<PrimeComponent> = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| PrimeComponent::new(face(&[a, b])).unwrap()))
        .collect();
    check(checks, "decomposition is the six pairs", comps == pairs);

    let complements = comps.iter().all(|&c| {
        monomial_gc_witness(&ideal, c).unwrap().map(|w| w.tau) == Some(c.variables().complement(4))
    });
    check(checks, "witness is the complement", complements);

    let report = monomial_gc_report(&ideal).unwrap();
    let maximal: Vec<(usize, usize)> = report.maximal_hyperplanes.iter().map(|v| (v.vertex, v.count)).collect();
    check(checks, "4 maximal monomial hyperplanes of count 3", maximal == vec![(0, 3), (1, 3), (2, 3), (3, 3)]);

    let bundle = cy_four_lines();
    let pool = &bundle.forms.forms;
    check(checks, "lines in general position", in_general_position(pool, 2, 2));
    let x = bundle.configuration().unwrap();
    check(checks, "2-correct", is_n_correct(&x, 2).unwrap());
    let certs = gc_certificates(&x, pool, 2, false);
    check(checks, "GC-certified from the four lines", certs.is_some());
    if let Some(certs) = certs {
        let origin = x.point_of(pairs[0]).unwrap();
        check(checks, "l1 ∩ l2 certified by l3 l4", certs[origin].factors == vec![2, 3]);
    }
    let lines: Vec<(usize, bool)> = maximal_hyperplanes(&x, pool, 2).iter().map(|h| (h.count, h.maximal)).collect();
    check(checks, "4 maximal lines of 3 points", lines == vec![(3, true); 4]);
    notes.push(format!("{} points", x.len()));
}

fn criterion_2(checks: &mut Checks, _: &mut Vec<String>) {
    let p = resolution_profile(2, 2).unwrap();
    check(
        checks,
        "(2,2) terms",
        p.terms == vec![ResolutionTerm { shift: 3, rank: 4 }, ResolutionTerm { shift: 4, rank: 3 }],
    );
    check(checks, "(2,2) numerator 1 - 4t^3 + 3t^4", p.hilbert_numerator == vec![1, 0, 0, -4, 3]);
    check(checks, "(2,2) Hilbert polynomial 6", p.hilbert_polynomial_constant == 6);
    let q = resolution_profile(3, 2).unwrap();
    let ranks: Vec<(usize, u128)> = q.terms.iter().map(|t| (t.shift, t.rank)).collect();
    check(checks, "(3,2) terms", ranks == vec![(3, 10), (4, 15), (5, 6)]);
    let zero = (1..=6).all(|d| (1..=6).all(|n| resolution_profile(d, n).unwrap().alternating_rank_sum() == 0));
    check(checks, "alternating rank sum 0 for d, n <= 6", zero);
}

fn criterion_3(checks: &mut Checks, notes: &mut Vec<String>) {
    let bundle = berzolari_radon();
    let complex = bundle.ideal.complex();
    check(
        checks,
        "f-vector (1,10,45,110,155,126,55,10)",
        complex.f_vector().counts() == [1, 10, 45, 110, 155, 126, 55, 10],
    );
    check(checks, "Bi-CM", is_bicm(&bundle.ideal).unwrap().is_bicm());

    let x = bundle.configuration().unwrap();
    let expected: BTreeSet<Vec<i64>> = (0..=2)
        .flat_map(|a| (0..=2).flat_map(move |b| (0..=2).map(move |c| vec![a, b, c])))
        .filter(|v| v.iter().sum::<i64>() <= 2)
        .collect();
    let found: BTreeSet<Vec<i64>> = x
        .points()
        .iter()
        .map(|p| {
            p.affine(3)
                .unwrap()
                .iter()
                .map(|a| {
                    assert!(a.is_integer());
                    a.to_integer().try_into().unwrap()
                })
                .collect()
        })
        .collect();
    check(checks, "the 10 integral points of the tetrahedron", x.len() == 10 && found == expected);
    let origin = x.point_of(PrimeComponent::new(face(&[0, 1, 2])).unwrap()).unwrap();
    check(checks, "origin from {0,1,2}", x.points()[origin].affine(3).unwrap() == vec![rational(0); 3]);
    check(checks, "2-correct", is_n_correct(&x, 2).unwrap());

    let pool = &bundle.forms.forms;
    let direct = certify_points(&x, pool, 2, true);
    let missing: Vec<String> = direct
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_none())
        .map(|(p, _)| {
            let coords: Vec<String> = x.points()[p].affine(3).unwrap().iter().map(|a| a.to_string()).collect();
            format!("({})", coords.join(","))
        })
        .collect();
    check(checks, "fully GC-certified from the 10-form pool", missing.is_empty());
    if !missing.is_empty() {
        notes.push(format!(
            "pool certifies {} of 10; no product of two pool forms separates {}",
            10 - missing.len(),
            missing.join(", ")
        ));
    }
    let augmented = augment_with_spanned(&x, pool);
    let full = gc_certificates(&x, &augmented, 2, false).is_some();
    notes.push(format!("pool plus spanned planes certifies all 10 points: {full}"));
}

fn criterion_4(checks: &mut Checks, notes: &mut Vec<String>) {
    let bundle = one_lattice().unwrap();
    let complex = bundle.ideal.complex();
    let f = [1, 8, 28, 46, 35, 10];
    check(checks, "f(Δ) = (1,8,28,46,35,10)", complex.f_vector().counts() == f);
    check(checks, "f(Δ∨) = f(Δ)", complex.alexander_dual().f_vector().counts() == f);
    check(checks, "Bi-CM", is_bicm(&bundle.ideal).unwrap().is_bicm());
    check(checks, "codimension 3, degree 10", bundle.ideal.codim_degree() == Ok((3, 10)));

    let report = monomial_gc_report(&bundle.ideal).unwrap();
    check(checks, "6 of 10 components monomial GC", report.gc_count == 6 && report.components.len() == 10);
    let maximal: Vec<(usize, usize)> = report
        .maximal_hyperplanes
        .iter()
        .map(|v| (bundle.label(v.vertex), v.count))
        .collect();
    check(checks, "maximal monomial hyperplanes {5,6,7,8} with 6 each", maximal == vec![(5, 6), (6, 6), (7, 6), (8, 6)]);
    check(
        checks,
        "factorization (3,5,2)",
        bicm_fvector_factorization(&complex.f_vector()) == Some(FvectFactorization { i: 3, m: 5, k: 2 }),
    );

    let x = bundle.configuration().unwrap();
    check(checks, "generic specialization is 2-correct", is_n_correct(&x, 2).unwrap());
    let pool = &bundle.forms.forms;
    let direct = certify_points(&x, pool, 2, true);
    let certified = direct.iter().flatten().count();
    check(checks, "fully GC-certified from the pool", certified == x.len());
    if certified < x.len() {
        notes.push(format!(
            "pool certifies {certified} of 10, exactly the monomial GC components; with generic forms no pool product vanishes on a point outside its own factors"
        ));
    }
    let augmented = augment_with_spanned(&x, pool);
    notes.push(format!(
        "pool plus spanned planes certifies all 10 points (GC_{{3,2}}): {}",
        gc_certificates(&x, &augmented, 2, false).is_some()
    ));
    let geometric: Vec<usize> = maximal_hyperplanes(&x, pool, 2)
        .iter()
        .filter(|h| h.maximal)
        .map(|h| bundle.label(h.form))
        .collect();
    check(checks, "maximal planes specialize to {5,6,7,8}", geometric == vec![5, 6, 7, 8]);
}

fn criterion_5(checks: &mut Checks, notes: &mut Vec<String>) {
    let corpus = common::complex_corpus(200, 10, 5);
    let mut involution = true;
    let mut fv1 = true;
    let mut routes = true;
    for c in &corpus {
        let dual = c.alexander_dual();
        involution &= dual.alexander_dual() == *c;
        let m = c.vertex_count();
        let (f, g) = (c.f_vector(), dual.f_vector());
        fv1 &= fv_duality_check(c);
        fv1 &= (-1..m as isize).all(|i| {
            g.f(i) as u128 + f.f(m as isize - i - 2) as u128 == binomial(m as u64, (i + 1) as u64)
        });
        routes &= match (sr_ideal(c).and_then(|i| i.dual()), sr_ideal(&dual)) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        };
    }
    check(checks, "duality is an involution", involution);
    check(checks, "f-vector law at every index", fv1);
    check(checks, "dual ideal two ways", routes);
    notes.push(format!("{} complexes", corpus.len()));
}

fn criterion_6(checks: &mut Checks, notes: &mut Vec<String>) {
    let corpus = common::complex_corpus(100, 8, 6);
    let mut agree = 0;
    let mut cm = 0;
    for c in &corpus {
        let fast = is_cohen_macaulay(c).unwrap().cohen_macaulay;
        let slow = common::naive_is_cm(c);
        agree += usize::from(fast == slow);
        cm += usize::from(slow);
    }
    check(checks, "Reisner checker agrees with the naive oracle", agree == corpus.len());
    notes.push(format!("{} complexes, {cm} Cohen-Macaulay", corpus.len()));
}

fn criterion_7(checks: &mut Checks, notes: &mut Vec<String>) {
    let mut corpus = common::gc_ideal_corpus(7);
    corpus.push(berzolari_radon().ideal);
    corpus.push(one_lattice().unwrap().ideal);
    let mut components = 0;
    let mut agree = true;
    for ideal in &corpus {
        let n = infer_parameters(ideal).unwrap().n;
        for c in ideal.primary_decomposition().unwrap() {
            components += 1;
            let fast = monomial_gc_witness(ideal, c).unwrap().map(|w| w.tau);
            agree &= fast == common::brute_force_witness(ideal, c.variables(), n);
        }
        let decomposition: BTreeSet<Face> = ideal.primary_decomposition().unwrap().iter().map(|c| c.variables()).collect();
        agree &= decomposition == common::brute_force_decomposition(ideal);
    }
    check(checks, "witnesses agree with the brute-force search", agree);
    notes.push(format!("{} ideals, {components} components", corpus.len()));
}

fn criterion_8(checks: &mut Checks, notes: &mut Vec<String>) {
    let mut cases = 0;
    for d in 2..=6 {
        for n in 1..=7 - d {
            cases += 1;
            let (_, map, x) = chung_yao_configuration(d, n, 1).unwrap();
            check(checks, format!("({d},{n}) {n}-correct"), is_n_correct(&x, n).unwrap());
            check(checks, format!("({d},{n}) GC-certified"), gc_certificates(&x, map.forms(), n, false).is_some());
            let maximal = maximal_hyperplanes(&x, map.forms(), n).iter().filter(|h| h.maximal).count();
            check(checks, format!("({d},{n}) n+d maximal hyperplanes"), maximal == n + d);
            let m = generic_matrix(n + d, n + 1, 1).unwrap();
            check(checks, format!("({d},{n}) determinantal"), determinantal_check(d, n, &m) == Ok(true));
        }
    }
    notes.push(format!("{cases} parameter pairs"));
}

fn criterion_9(checks: &mut Checks, notes: &mut Vec<String>) {
    let cy = cy_four_lines();
    let x = cy.configuration().unwrap();
    let certs = gc_certificates(&x, &cy.forms.forms, 2, false).unwrap();
    let report = generators_from_certificates(&x, &certs, &cy.forms.forms).unwrap();
    check(checks, "four lines span C(4,3) = 4", report.span_dimension == 4 && report.expected_dimension == 4);
    notes.push(format!("four lines: {} products", report.products.len()));

    let br = berzolari_radon();
    let x = br.configuration().unwrap();
    let pool = augment_with_spanned(&x, &br.forms.forms);
    let certs = gc_certificates(&x, &pool, 2, false).unwrap();
    let report = generators_from_certificates(&x, &certs, &pool).unwrap();
    check(checks, "tetrahedron spans C(5,3) = 10", report.span_dimension == 10 && report.expected_dimension == 10);
    notes.push(format!("tetrahedron: {} products, pool plus spanned planes", report.products.len()));
}

fn criterion_10(checks: &mut Checks, _: &mut Vec<String>) {
    let pts = [[0, 0, 1], [1, 0, 1], [2, 0, 1]]
        .iter()
        .map(|p| ProjectivePoint::from_integers(p).unwrap())
        .collect();
    let collinear = PointConfiguration::new(2, 2, pts).unwrap();
    check(checks, "three collinear points are not 1-correct", is_n_correct(&collinear, 1) == Ok(false));

    let edges = SimplicialComplex::from_vertex_lists(4, &[&[0, 1], &[2, 3]]).unwrap();
    check(checks, "two disjoint edges are not CM", !is_cohen_macaulay(&edges).unwrap().cohen_macaulay);

    let ideal = one_lattice().unwrap().ideal;
    let gens = &ideal.generators()[..ideal.generators().len() - 1];
    let smaller = SquarefreeMonomialIdeal::new(8, gens.iter().copied()).unwrap();
    check(
        checks,
        "one-lattice minus a generator: degree mismatch",
        matches!(infer_parameters(&smaller), Err(Error::DegreeMismatch { .. })),
    );
}

fn main() {
    type Criterion = fn(&mut Checks, &mut Vec<String>);
    let criteria: [(&str, Criterion); 10] = [
        ("Chung-Yao planar fixture", criterion_1),
        ("Eagon-Northcott bookkeeping", criterion_2),
        ("Berzolari-Radon fixture", criterion_3),
        ("one-lattice fixture", criterion_4),
        ("duality property suite", criterion_5),
        ("Reisner oracle suite", criterion_6),
        ("monomial GC oracle suite", criterion_7),
        ("Chung-Yao pipeline sweep", criterion_8),
        ("generator span check", criterion_9),
        ("negative controls", criterion_10),
    ];
    let mut failures = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let mut checks = Vec::new();
        let mut notes = Vec::new();
        run(&mut checks, &mut notes);
        let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.as_str()).collect();
        if failed.is_empty() {
            println!("criterion {:>2} PASS  {title} ({} checks)", i + 1, checks.len());
        } else {
            failures += 1;
            println!("criterion {:>2} FAIL  {title}: {}", i + 1, failed.join("; "));
        }
        for note in notes {
            println!("              {note}");
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
