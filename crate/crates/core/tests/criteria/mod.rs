//! End-to-end checks shared by the core test suite and the acceptance runner.
//! Each check returns a one-line summary on success and the first
//! discrepancy on failure.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ssi_core::{
    borel_leq, enumerate_borel_sets, gotzmann_decomposition, gotzmann_number, growth_vector,
    is_gen_segment, is_hilb_segment, is_hilbert_polynomial, is_reg_segment, lex_ideal,
    macaulay_decomposition, segment_problem, strongly_stable_ideals, BorelSet, Monomial, NumPoly,
    SegmentKind, StronglyStableIdeal, VariableNames,
};

use crate::oracle;

pub type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn poly(src: &str) -> NumPoly {
    src.parse().expect("test polynomial parses")
}

pub fn ideal(arity: usize, src: &str) -> StronglyStableIdeal {
    let names = VariableNames::default_for(arity);
    StronglyStableIdeal::new(arity, names.parse_generators(src).unwrap()).unwrap()
}

fn show(ideals: &[StronglyStableIdeal]) -> Vec<String> {
    ideals
        .iter()
        .map(|i| VariableNames::default_for(i.arity()).ideal(i.generators()))
        .collect()
}

fn same_set(got: &[StronglyStableIdeal], expected: &[StronglyStableIdeal]) -> bool {
    let a: BTreeSet<_> = got.iter().collect();
    let b: BTreeSet<_> = expected.iter().collect();
    a == b && got.len() == expected.len()
}

pub fn decompositions_of_4t() -> Outcome {
    let p = poly("4t");
    ensure!(is_hilbert_polynomial(&p), "4t rejected");
    ensure!(!is_hilbert_polynomial(&poly("5t-6")), "5t-6 accepted");
    let g = gotzmann_decomposition(&p).map_err(|e| e.to_string())?;
    ensure!(g.terms() == [1, 1, 1, 1, 0, 0], "terms of 4t: {:?}", g.terms());
    ensure!(g.gotzmann_number() == 6, "Gotzmann number of 4t: {}", g.gotzmann_number());
    let m = macaulay_decomposition(&p).map_err(|e| e.to_string())?;
    ensure!(m.coefficients() == [6, 4], "Macaulay coefficients of 4t: {:?}", m.coefficients());
    ensure!(m.reconstruct() == p, "Macaulay reconstruction of 4t: {}", m.reconstruct());
    let lex = lex_ideal(&p, 3).map_err(|e| e.to_string())?;
    ensure!(lex == ideal(4, "x3, x2^5, x2^4*x1^2"), "lex ideal of 4t: {}", show(&[lex])[0]);
    ensure!(lex.regularity() == 6, "regularity of the lex ideal: {}", lex.regularity());
    Ok("decompositions, lex ideal and regularity of 4t".into())
}

pub fn enumeration_sets() -> Outcome {
    let cases: [(&str, usize, Option<u32>, Vec<&str>); 4] = [
        (
            "4t",
            3,
            None,
            vec![
                "x3, x2^5, x2^4*x1^2",
                "x3*x1, x3*x2, x3^2, x2^4*x1, x2^5",
                "x3*x2, x3^2, x3*x1^2, x2^4",
                "x3*x2, x3^2, x2^3",
            ],
        ),
        ("4t", 3, Some(4), vec!["x3*x2, x3^2, x3*x1^2, x2^4", "x3*x2, x3^2, x2^3"]),
        ("7", 2, Some(5), vec!["x2^2, x2*x1^2, x1^5", "x2^2, x2*x1^3, x1^4", "x2^3, x2^2*x1, x2*x1^2, x1^4"]),
        ("t+6", 2, Some(5), vec!["x2^3, x2^2*x1, x2*x1^4", "x2^3, x2^2*x1^2, x2*x1^3"]),
    ];
    for (src, n, max_reg, expected) in cases {
        let got = strongly_stable_ideals(&poly(src), n, max_reg).map_err(|e| e.to_string())?;
        let expected: Vec<_> = expected.iter().map(|e| ideal(n + 1, e)).collect();
        ensure!(same_set(&got, &expected), "{src} in {} variables, max regularity {max_reg:?}: {:?}", n + 1, show(&got));
    }
    Ok("4 + 2 + 3 + 2 ideals".into())
}

pub fn growth_vectors() -> Outcome {
    let gv = |p: &str, s, n| growth_vector(&poly(p), s, n).ok().flatten().map(|g| g.entries().to_vec());
    ensure!(gv("t+6", 5, 2) == Some(vec![5, 4, 1]), "gv_5(t+6) = {:?}", gv("t+6", 5, 2));
    ensure!(gv("1", 5, 1) == Some(vec![4, 1]), "gv_5(1) = {:?}", gv("1", 5, 1));
    let mut checked = 0;
    for (src, n, s) in [("4t", 3, 6), ("4t", 3, 4), ("7", 2, 5), ("t+6", 2, 5), ("t+1", 2, 2), ("2t+2", 3, 4)] {
        let p = poly(src);
        let expected = growth_vector(&p, s, n).map_err(|e| e.to_string())?;
        for b in enumerate_borel_sets(n, s, &p).map_err(|e| e.to_string())? {
            ensure!(Some(b.growth_vector()) == expected, "{src}, degree {s}: classes {:?}", b.growth_vector());
            checked += 1;
        }
    }
    Ok(format!("both examples; classes of {checked} enumerated Borel sets"))
}

pub fn segments() -> Outcome {
    let hilb_case = ideal(3, "x2^2, x2*x1^2, x1^5");
    let reg_case = ideal(3, "x2^2, x2*x1^3, x1^4");
    let hilb = is_hilb_segment(&hilb_case).map_err(|e| e.to_string())?;
    let reg = is_reg_segment(&reg_case).map_err(|e| e.to_string())?;
    let gen = is_gen_segment(&reg_case).map_err(|e| e.to_string())?;
    ensure!(hilb.is_segment(), "hilb-segment test failed on (x2^2, x2*x1^2, x1^5)");
    ensure!(!reg.is_segment(), "reg-segment test passed on (x2^2, x2*x1^3, x1^4)");
    ensure!(gen.is_segment(), "gen-segment test failed on (x2^2, x2*x1^3, x1^4)");
    let hilb_problem = segment_problem(&hilb_case, SegmentKind::Hilb).map_err(|e| e.to_string())?;
    let gen_problem = segment_problem(&reg_case, SegmentKind::Gen).map_err(|e| e.to_string())?;
    for (problem, outcome) in [(&hilb_problem, &hilb), (&gen_problem, &gen)] {
        let w = outcome.weights.as_ref().unwrap().weights();
        ensure!(problem.separates(w), "certificate {w:?} fails the full check");
        let blocks = as_blocks(problem);
        ensure!(blocks.iter().all(|(i, o)| oracle::separates(i, o, w)), "certificate {w:?} fails the oracle check");
    }
    ensure!(hilb_problem.separates(&[1, 3, 7]), "(1,3,7) does not separate");
    ensure!(gen_problem.separates(&[1, 3, 4]), "(1,3,4) does not separate");
    let reg_problem = segment_problem(&reg_case, SegmentKind::Reg).map_err(|e| e.to_string())?;
    ensure!(
        oracle::exhaustive_separator(&as_blocks(&reg_problem), 3, 12).is_none(),
        "exhaustive search separates the reg-segment counterexample"
    );
    Ok(format!(
        "hilb {:?}, reg none, gen {:?}; reference vectors validated",
        hilb.weights.unwrap().weights(),
        gen.weights.unwrap().weights()
    ))
}

pub fn as_blocks(problem: &ssi_core::SeparationProblem) -> Vec<(Vec<oracle::Exps>, Vec<oracle::Exps>)> {
    let ex = |ms: &[Monomial]| ms.iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>();
    problem.blocks().iter().map(|b| (ex(&b.inside), ex(&b.outside))).collect()
}

/// Hilbert polynomials with Gotzmann number at most `max_r` and degree below `n`.
fn small_hilbert_polynomials(n: usize, max_r: usize) -> Vec<NumPoly> {
    oracle::all_terms(max_r, n - 1).iter().map(|t| oracle::hilbert_from_terms(t)).collect()
}

pub fn oracle_equivalence() -> Outcome {
    let mut grid: Vec<(usize, u32)> = (1..=2).flat_map(|n| (1..=6).map(move |s| (n, s))).collect();
    grid.extend((1..=4).map(|s| (3, s)));
    let mut compared = 0usize;
    let mut nonempty = 0usize;
    for (n, s) in grid {
        let mut by_size: HashMap<usize, Vec<BTreeSet<oracle::Exps>>> = oracle::all_borel_sets_by_size(n, s);
        let total = oracle::binomial((n as u32 + s) as i64, n as i64);
        for p in small_hilbert_polynomials(n, 6) {
            let got = enumerate_borel_sets(n, s, &p).map_err(|e| e.to_string())?;
            let got: BTreeSet<BTreeSet<oracle::Exps>> = got.iter().map(exps_of).collect();
            let value = p.evaluate_integer(s as i64).unwrap();
            let expected: BTreeSet<BTreeSet<oracle::Exps>> = match growth_vector(&p, s, n).map_err(|e| e.to_string())? {
                None => BTreeSet::new(),
                Some(gv) => {
                    let size: usize = (&total - value).try_into().map_err(|_| format!("negative size for {p}"))?;
                    by_size
                        .entry(size)
                        .or_default()
                        .iter()
                        .filter(|b| oracle::growth_classes(b, n + 1) == gv.entries())
                        .cloned()
                        .collect()
                }
            };
            ensure!(got == expected, "p = {p}, n = {n}, s = {s}: {} sets, oracle {}", got.len(), expected.len());
            for set in &got {
                let b = BorelSet::new(n + 1, s, set.iter().map(|e| Monomial::new(e.clone()).unwrap())).unwrap();
                let generated = StronglyStableIdeal::new(n + 1, b.members().to_vec()).unwrap();
                let interpolated = oracle::interpolate_hilbert_polynomial(&generated);
                ensure!(b.hilbert_polynomial() == interpolated, "polynomial of {set:?}: {} vs {interpolated}", b.hilbert_polynomial());
                ensure!(interpolated == p, "set {set:?} has polynomial {interpolated}, expected {p}");
            }
            compared += 1;
            nonempty += usize::from(!got.is_empty());
        }
    }
    Ok(format!("{compared} (p, n, s) cases, {nonempty} with Borel sets"))
}

fn exps_of(b: &BorelSet) -> BTreeSet<oracle::Exps> {
    b.members().iter().map(|m| m.exponents().to_vec()).collect()
}

/// The fixed random sample of valid Hilbert polynomials, as term sequences.
pub fn random_sample() -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..50).map(|_| oracle::random_terms(&mut rng, 8, 3)).collect()
}

pub fn invariants() -> Outcome {
    for n in 0..=3 {
        for s in 0..=5 {
            let elems = oracle::monomials(n + 1, s);
            for a in &elems {
                for b in &elems {
                    let fast = borel_leq(&Monomial::new(a.clone()).unwrap(), &Monomial::new(b.clone()).unwrap()).unwrap();
                    ensure!(fast == oracle::reachability_borel_leq(a, b), "Borel order disagrees on {a:?}, {b:?}");
                }
            }
        }
    }
    for m in Monomial::all_of_degree(4, 4) {
        for i in 0..3 {
            if let Some(up) = m.increasing_move(i).unwrap() {
                ensure!(up.decreasing_move(i + 1).unwrap().as_ref() == Some(&m), "move inverse fails at {m:?}");
            }
        }
        let closure = BorelSet::closure(4, 4, [m.clone()]).unwrap();
        ensure!(BorelSet::closure(4, 4, closure.members().to_vec()).unwrap() == closure, "closure not idempotent at {m:?}");
    }
    for e in -6i64..6 {
        for c in 1usize..6 {
            ensure!(
                NumPoly::binomial(e, c).finite_difference(1) == NumPoly::binomial(e - 1, c - 1),
                "Pascal identity fails at ({e}, {c})"
            );
        }
    }
    let sample = random_sample();
    for terms in &sample {
        let p = oracle::hilbert_from_terms(terms);
        let g = gotzmann_decomposition(&p).map_err(|e| e.to_string())?;
        ensure!(g.terms() == *terms, "{p}: terms {:?}, built from {terms:?}", g.terms());
        let rebuilt = g.summands().iter().fold(NumPoly::zero(), |acc, x| &acc + x);
        ensure!(rebuilt == p, "{p}: reconstruction gives {rebuilt}");
        let m = macaulay_decomposition(&p).map_err(|e| e.to_string())?;
        ensure!(m.coefficients()[0] == terms.len() as u64, "{p}: m0 = {}, r = {}", m.coefficients()[0], terms.len());
    }
    Ok(format!("order, moves, closure, Pascal; {} sampled polynomials", sample.len()))
}

pub fn lex_membership() -> Outcome {
    let mut checked = 0;
    for terms in random_sample() {
        if terms.len() > 6 {
            continue;
        }
        let p = oracle::hilbert_from_terms(&terms);
        let d = p.degree().unwrap();
        for n in d + 1..=4 {
            let lex = lex_ideal(&p, n).map_err(|e| e.to_string())?;
            ensure!(lex.hilbert_polynomial() == p, "lex ideal of {p} in {} variables has polynomial {}", n + 1, lex.hilbert_polynomial());
            let all = strongly_stable_ideals(&p, n, None).map_err(|e| e.to_string())?;
            ensure!(all.contains(&lex), "lex ideal of {p} in {} variables missing from {} ideals", n + 1, all.len());
            ensure!(gotzmann_number(&p).unwrap() == lex.regularity() as u64, "regularity of lex ideal of {p}");
            checked += 1;
        }
    }
    Ok(format!("{checked} (p, n) pairs"))
}
