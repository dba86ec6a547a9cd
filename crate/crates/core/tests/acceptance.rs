//! End-to-end acceptance checks. Runs as a plain binary so that the
//! PASS/FAIL summary is always printed.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::taylor_numerator;
use depolar::polar::{
    copolar_bijection, depolarize, enumerate_depolarizations, ideal_from_disjoint_paths, is_quasi_stable, isomorphism,
    min_path_partition, natural_order, support_poset, EnumerationLimits, PathPartition,
};
use depolar::reliability::{
    consecutive_k_of_n_ideal, evaluate, exhaustive_reliability, iid_reliability_polynomials, reliability,
    ProbabilityTable, SlotMap, SystemFile, SystemSource, SystemSpec,
};
use depolar::scalar::parse_rational;
use depolar::{
    betti_numbers, height, hilbert_numerator, polarize_ideal, polarize_monomial, proj_dim, regularity, IdealFile,
    Monomial, MonomialIdeal, MultigradedPolynomial, Rational,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> SystemFile {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    SystemFile::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn ideal_fixture(name: &str) -> MonomialIdeal {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    IdealFile::parse(&std::fs::read_to_string(path).unwrap()).unwrap().ideal
}

fn dec(text: &str) -> Rational {
    parse_rational(text).unwrap()
}

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, gens).unwrap()
}

fn poly(n: usize, terms: &[(&[u32], i64)]) -> MultigradedPolynomial {
    MultigradedPolynomial::from_terms(n, terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), BigInt::from(*c))))
}

fn random_row(rng: &mut ChaCha8Rng, states: u32) -> Vec<Rational> {
    let w: Vec<u32> = (0..=states).map(|_| rng.gen_range(1..=9)).collect();
    let total: u32 = w.iter().sum();
    w.iter().map(|&x| Rational::new(x.into(), total.into())).collect()
}

fn exact_reliability_values() -> Check {
    let ms = fixture("ms_k_of_3.system");
    let p = ms.probabilities.as_ref().unwrap();
    for (j, big, small) in [(3, "0.396", "0.396"), (2, "0.826", "0.430"), (1, "0.89", "0.064"), (0, "1", "0.11")] {
        let r = reliability(&ms.system, p, j).map_err(|e| e.to_string())?;
        ensure!(r.reliability == dec(big), "MS R_{j} = {}", r.reliability);
        ensure!(r.point_mass == dec(small), "MS r_{j} = {}", r.point_mass);
    }

    let flow = fixture("flow_network.system");
    let p = flow.probabilities.as_ref().unwrap();
    for (j, want) in [(1, "0.99"), (2, "0.97"), (3, "0.80"), (4, "0.64")] {
        let r = reliability(&flow.system, p, j).map_err(|e| e.to_string())?.reliability;
        ensure!(r == dec(want), "flow R_{j} = {r}");
    }

    let table = fixture("structure_function.system");
    let p = table.probabilities.as_ref().unwrap();
    let want = dec("0.9606");
    let i = table.system.j_reliability_ideal(1).unwrap();
    let direct = evaluate(&hilbert_numerator(&i), p, &SlotMap::direct(table.system.states())).unwrap();
    ensure!(direct == want, "original ideal gives {direct}");
    let (ip, map) = polarize_ideal(&i).unwrap();
    let polar = evaluate(&hilbert_numerator(&ip), p, &SlotMap::from_polarization(&map)).unwrap();
    ensure!(polar == want, "polarization gives {polar}");
    // slots of I^P: x1 y1 y2 z1 t1
    let record = depolarize(&ip, &PathPartition::new(vec![vec![0], vec![1, 2], vec![3, 4]])).unwrap();
    let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
    ensure!(record.ideal == j, "depolarization is {:?}", record.ideal);
    let slots = SlotMap::for_depolarization(&map, &record);
    let dep = evaluate(&hilbert_numerator(&record.ideal), p, &slots).unwrap();
    ensure!(dep == want, "depolarization gives {dep}");
    Ok("MS, flow and structure-function values exact; 0.9606 three ways".into())
}

fn hilbert_displays() -> Check {
    let flow = fixture("flow_network.system").system;
    let displays = [
        poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], -1)]),
        poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1), (&[2, 1], -1), (&[1, 2], -1)]),
        poly(2, &[(&[2, 1], 1), (&[1, 2], 1), (&[2, 2], -1)]),
        poly(2, &[(&[2, 2], 1)]),
    ];
    for (j, want) in (1..).zip(&displays) {
        let h = hilbert_numerator(&flow.j_reliability_ideal(j).unwrap());
        ensure!(&h == want, "flow H_{j} differs");
    }

    let ms = fixture("ms_k_of_3.system").system;
    let displays = [
        poly(
            3,
            &[
                (&[1, 1, 1], 1),
                (&[2, 2, 0], 1),
                (&[2, 0, 2], 1),
                (&[0, 2, 2], 1),
                (&[1, 2, 2], -1),
                (&[2, 1, 2], -1),
                (&[2, 2, 1], -1),
            ],
        ),
        poly(3, &[(&[2, 2, 0], 1), (&[2, 0, 2], 1), (&[0, 2, 2], 1), (&[2, 2, 2], -2)]),
        poly(3, &[(&[3, 3, 0], 1), (&[3, 0, 3], 1), (&[0, 3, 3], 1), (&[3, 3, 3], -2)]),
    ];
    for (j, want) in (1..).zip(&displays) {
        let h = hilbert_numerator(&ms.j_reliability_ideal(j).unwrap());
        ensure!(&h == want, "MS H_S{j} differs");
    }

    // x y z t
    let is = fixture("structure_function.system").system.j_reliability_ideal(1).unwrap();
    let want = poly(
        4,
        &[
            (&[1, 1, 0, 0], 1),
            (&[1, 0, 1, 0], 1),
            (&[0, 2, 0, 0], 1),
            (&[0, 1, 1, 0], 1),
            (&[0, 0, 1, 1], 1),
            (&[1, 1, 1, 0], -2),
            (&[1, 2, 0, 0], -1),
            (&[1, 0, 1, 1], -1),
            (&[0, 2, 1, 0], -1),
            (&[0, 1, 1, 1], -1),
            (&[1, 2, 1, 0], 1),
            (&[1, 1, 1, 1], 1),
        ],
    );
    ensure!(hilbert_numerator(&is) == want, "H_IS differs");

    // x1 y1 y2 z1 t1
    let (ip, _) = polarize_ideal(&is).unwrap();
    let want = poly(
        5,
        &[
            (&[1, 1, 0, 0, 0], 1),
            (&[1, 0, 0, 1, 0], 1),
            (&[0, 1, 1, 0, 0], 1),
            (&[0, 1, 0, 1, 0], 1),
            (&[0, 0, 0, 1, 1], 1),
            (&[1, 1, 0, 1, 0], -2),
            (&[1, 1, 1, 0, 0], -1),
            (&[1, 0, 0, 1, 1], -1),
            (&[0, 1, 1, 1, 0], -1),
            (&[0, 1, 0, 1, 1], -1),
            (&[1, 1, 1, 1, 0], 1),
            (&[1, 1, 0, 1, 1], 1),
        ],
    );
    ensure!(hilbert_numerator(&ip) == want, "H_IS^P differs");

    // a b c
    let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
    let want = poly(
        3,
        &[
            (&[1, 1, 0], 1),
            (&[1, 0, 1], 1),
            (&[0, 2, 0], 1),
            (&[0, 1, 1], 1),
            (&[0, 0, 2], 1),
            (&[1, 1, 1], -2),
            (&[1, 2, 0], -1),
            (&[1, 0, 2], -1),
            (&[0, 2, 1], -1),
            (&[0, 1, 2], -1),
            (&[1, 2, 1], 1),
            (&[1, 1, 2], 1),
        ],
    );
    ensure!(hilbert_numerator(&j) == want, "H_J differs");
    Ok("flow, MS, H_IS, H_IS^P and H_J displays term for term".into())
}

fn depolarization_fixtures() -> Check {
    let i = ideal_fixture("ten_variables.ideal");
    let p = PathPartition::new(vec![vec![3, 1, 0, 2], vec![5, 4], vec![6, 7, 8], vec![9]]);
    let record = depolarize(&i, &p).map_err(|e| e.to_string())?;
    let want = ideal(4, &[&[4, 0, 0, 0], &[1, 1, 1, 0], &[3, 2, 0, 0], &[0, 0, 3, 0], &[0, 0, 2, 1]]);
    ensure!(record.ideal == want, "got {:?}", record.ideal);

    // x y z t u
    let i = ideal(5, &[&[1, 1, 1, 0, 0], &[1, 1, 0, 1, 0], &[0, 1, 1, 1, 0], &[0, 1, 0, 1, 1]]);
    let j = ideal(3, &[&[1, 2, 0], &[2, 1, 0], &[1, 1, 1], &[2, 0, 1]]);
    let j2 = ideal(3, &[&[1, 2, 0], &[1, 1, 1], &[0, 3, 0], &[0, 2, 1]]);
    let all = enumerate_depolarizations(&i, &EnumerationLimits::default()).map_err(|e| e.to_string())?;
    for (name, target) in [("J", &j), ("J'", &j2)] {
        ensure!(copolar_bijection(&i, target).unwrap().is_some(), "{name} not certified copolar");
        let found = all.records().any(|r| isomorphism(&r.ideal, target, 1_000_000).unwrap().is_some());
        ensure!(found, "{name} missing from the enumeration");
    }

    let m = ideal(3, &[&[3, 0, 0], &[0, 2, 0], &[0, 0, 2], &[2, 1, 0], &[0, 2, 1], &[1, 1, 1]]);
    // x12 x13 x14 x21 x24 x31 x34
    let big_m = ideal(
        7,
        &[
            &[1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1],
            &[0, 1, 1, 0, 1, 0, 0],
            &[1, 0, 1, 0, 0, 0, 1],
            &[0, 0, 1, 0, 1, 0, 1],
        ],
    );
    // x12 x13 x14 x24 x34
    let o = ideal(
        5,
        &[
            &[1, 1, 1, 0, 0],
            &[1, 0, 0, 1, 0],
            &[0, 1, 0, 0, 1],
            &[0, 1, 1, 1, 0],
            &[1, 0, 1, 0, 1],
            &[0, 0, 1, 1, 1],
        ],
    );
    ensure!(copolar_bijection(&m, &big_m).unwrap().is_none(), "M reported copolar");
    ensure!(copolar_bijection(&o, &big_m).unwrap().is_none(), "O reported copolar");
    Ok(format!("partition reproduced; J, J' among {} classes; M, O not copolar", all.len()))
}

fn quasi_stable_pipeline() -> Check {
    let i = ideal_fixture("not_quasi_stable.ideal");
    ensure!(!is_quasi_stable(&i), "I reported quasi-stable");
    let j = ideal(3, &[&[4, 0, 0], &[0, 3, 0], &[0, 0, 2], &[3, 1, 0], &[2, 0, 1], &[0, 2, 1], &[1, 1, 1]]);
    let all = enumerate_depolarizations(&i, &EnumerationLimits::default()).map_err(|e| e.to_string())?;
    let found = all
        .maximum_records()
        .any(|r| r.num_vars() == 3 && copolar_bijection(&r.ideal, &j).unwrap().is_some());
    ensure!(found, "no 3-variable maximum depolarization copolar to J");
    ensure!(is_quasi_stable(&j), "J not quasi-stable");
    let (pi, pj) = (proj_dim(&i).unwrap(), proj_dim(&j).unwrap());
    ensure!(pi == 2 && pj == 2, "pd(I) = {pi}, pd(J) = {pj}");
    let (ri, rj) = (regularity(&i).unwrap(), regularity(&j).unwrap());
    ensure!(ri == 5 && rj == 5, "reg(I) = {ri}, reg(J) = {rj}");
    Ok("maximum depolarization copolar to J; pd 2, reg 5".into())
}

fn random_ideal(rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(1..=6);
        let count = rng.gen_range(1..=6);
        let gens = (0..count).map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=3)).collect()));
        let i = MonomialIdeal::new(n, gens).unwrap();
        if i.require_proper().is_ok() {
            return i;
        }
    }
}

fn random_system(rng: &mut ChaCha8Rng, index: usize) -> SystemSpec {
    let n = rng.gen_range(2..=4);
    if index.is_multiple_of(2) {
        let states: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
        loop {
            let count = rng.gen_range(1..=4);
            let gens = (0..count).map(|_| Monomial::new(states.iter().map(|&m| rng.gen_range(0..=m)).collect()));
            let i = MonomialIdeal::new(n, gens).unwrap();
            if i.require_proper().is_err() {
                continue;
            }
            let paths = i.generators().iter().map(|g| g.exponents().to_vec()).collect();
            return SystemSpec::new(states, 1, SystemSource::Paths(vec![paths])).unwrap();
        }
    }
    let levels = rng.gen_range(1..=3);
    let mut k: Vec<usize> = (0..levels).map(|_| rng.gen_range(1..=n)).collect();
    k.sort_unstable_by(|a, b| b.cmp(a));
    SystemSpec::new(vec![levels as u32; n], levels as u32, SystemSource::MsKOfN(k)).unwrap()
}

fn structural_invariants() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut chain_failures = Vec::new();
    for _ in 0..50 {
        let i = random_ideal(&mut rng);
        let (p, map) = polarize_ideal(&i).unwrap();
        let caps = map.caps();
        let mapped = betti_numbers(&i).unwrap().map_multidegrees(|mu| polarize_monomial(mu, &caps).unwrap());
        ensure!(mapped == betti_numbers(&p).unwrap(), "Betti tables differ for {i:?}");
        ensure!(height(&i).unwrap() == height(&p).unwrap(), "heights differ for {i:?}");
        let hi = hilbert_numerator(&i);
        ensure!(
            hi.total_degree_specialization() == hilbert_numerator(&p).total_degree_specialization(),
            "graded numerators differ for {i:?}"
        );
        ensure!(hi == taylor_numerator(&i), "Hilbert numerator differs from inclusion-exclusion for {i:?}");

        let poset = natural_order(&support_poset(&p).unwrap());
        let (pd, paths, width) = (proj_dim(&i).unwrap(), min_path_partition(&poset).len(), poset.width());
        if !(pd <= paths && paths <= width) {
            chain_failures.push(format!("{:?}: pd {pd}, paths {paths}, width {width}", i.generators()));
        }
    }
    for index in 0..20 {
        let system = random_system(&mut rng, index);
        let probs = ProbabilityTable::new(system.states().iter().map(|&m| random_row(&mut rng, m)).collect()).unwrap();
        for j in 1..=system.levels() {
            let algebraic = reliability(&system, &probs, j).unwrap().reliability;
            let oracle = exhaustive_reliability(&system, &probs, j).unwrap();
            ensure!(algebraic == oracle, "system {index} level {j}: {algebraic} vs {oracle}");
        }
    }
    ensure!(chain_failures.is_empty(), "pd <= |min path partition| <= width fails on {}", chain_failures.join("; "));
    Ok("50 ideals and 20 systems".into())
}

fn consecutive_systems() -> Check {
    let mut detail = String::new();
    for (n, k) in [(10, 3), (20, 6), (100, 30)] {
        let i = consecutive_k_of_n_ideal(k, n);
        let poset = natural_order(&support_poset(&i).unwrap());
        let partition = min_path_partition(&poset);
        ensure!(partition.len() == n + 2 - 2 * k, "J_{k},{n}: {} blocks", partition.len());
        if n == 100 {
            let record = depolarize(&i, &partition).map_err(|e| e.to_string())?;
            let t = Instant::now();
            let h = hilbert_numerator(&i);
            let original = t.elapsed();
            let t = Instant::now();
            let hd = hilbert_numerator(&record.ideal);
            let depolarized = t.elapsed();
            ensure!(depolarized < original, "depolarized {depolarized:?} vs original {original:?}");
            ensure!(h.total_degree_specialization() == hd.total_degree_specialization(), "graded numerators differ");
            detail = format!("(100,30): original {original:.2?}, depolarized {depolarized:.2?}");
        }
    }
    Ok(detail)
}

fn ms_k_of_10() -> Check {
    let k = vec![9, 8, 7, 6, 5, 5, 4, 4, 3, 2];
    let system = SystemSpec::new(vec![10; 10], 10, SystemSource::MsKOfN(k)).unwrap();
    let polys = iid_reliability_polynomials(&system).map_err(|e| e.to_string())?;
    ensure!(polys.len() == 10, "{} polynomials", polys.len());
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut rows: Vec<Vec<Rational>> = (0..20).map(|_| random_row(&mut rng, 10)).collect();
    rows.push((0..=10).map(|_| Rational::new(1.into(), 11.into())).collect());
    for row in &rows {
        let at_least: Vec<Rational> = (1..=10).map(|a| row[a..].iter().sum()).collect();
        let values: Vec<Rational> = polys.iter().map(|p| p.evaluate(&at_least)).collect();
        ensure!(values.windows(2).all(|w| w[1] <= w[0]), "not monotone at {row:?}");
        ensure!(values.iter().all(|v| *v >= Rational::from_integer(0.into()) && *v <= Rational::from_integer(1.into())), "value outside [0, 1]");
    }
    let terms: usize = polys.iter().map(|p| p.len()).sum();
    Ok(format!("10 polynomials, {terms} terms, monotone at {} tables", rows.len()))
}

fn disjoint_paths_constructor() -> Check {
    let built = ideal_from_disjoint_paths(&[6, 4, 1, 1, 1, 1]).map_err(|e| e.to_string())?;
    let mono = |vars: &[usize]| Monomial::from_support(14, vars.iter().map(|v| v - 1));
    let sorted = |mut v: Vec<Monomial>| {
        v.sort();
        v
    };
    let g1 = vec![mono(&[1, 2, 3, 4, 5, 6]), mono(&[7, 8, 9, 10])];
    let g2 = vec![
        mono(&[1, 2, 7]),
        mono(&[1, 2, 3, 11]),
        mono(&[1, 2, 3, 4, 12]),
        mono(&[1, 2, 3, 4, 5, 13]),
        mono(&[7, 8, 11]),
        mono(&[7, 8, 9, 12]),
    ];
    let g3 = vec![mono(&[1, 14]), mono(&[13, 14])];
    ensure!(sorted(built.g1.clone()) == sorted(g1), "G1 differs: {:?}", built.g1);
    ensure!(sorted(built.g2.clone()) == sorted(g2), "G2 differs: {:?}", built.g2);
    ensure!(sorted(built.g3.clone()) == sorted(g3), "G3 differs: {:?}", built.g3);
    let mut cands = built.g3_candidates.clone();
    cands.sort_unstable();
    ensure!(cands == [0, 12, 13], "G3' differs: {cands:?}");

    let poset = support_poset(&built.ideal).unwrap();
    for path in &built.paths {
        for (j, &v) in path.iter().enumerate() {
            let want: BTreeSet<usize> = path[..=j].iter().copied().collect();
            ensure!(poset.set_of(v) == Some(&want), "C of variable {} differs", v + 1);
        }
    }
    ensure!(ideal_from_disjoint_paths(&[2, 1]).is_err(), "(2,1) accepted");
    Ok("G1, G2, G3 and the poset match; (2,1) rejected".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("exact reliability values", exact_reliability_values, Duration::from_secs(1)),
        ("Hilbert numerator displays", hilbert_displays, Duration::from_secs(1)),
        ("depolarization fixtures", depolarization_fixtures, Duration::from_secs(10)),
        ("quasi-stable pipeline", quasi_stable_pipeline, Duration::from_secs(30)),
        ("structural invariants", structural_invariants, Duration::from_secs(300)),
        ("consecutive systems", consecutive_systems, Duration::from_secs(300)),
        ("MS k-out-of-10", ms_k_of_10, Duration::from_secs(300)),
        ("disjoint-path constructor", disjoint_paths_constructor, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (number, (name, check, budget)) in (1..).zip(criteria) {
        let t = Instant::now();
        let outcome = check();
        let elapsed = t.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {number} ({name}): PASS [{elapsed:.2?}] {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {number} ({name}): FAIL [{elapsed:.2?}] {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
