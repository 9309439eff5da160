//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits non-zero when a criterion fails that is not listed in
//! `KNOWN_FAILURES`, or when a listed one unexpectedly passes.

use std::time::{Duration, Instant};

use htsasm::asm::{self, fixtures as asm_fixtures};
use htsasm::detkit::{self, Lemma, LemmaCheckConfig};
use htsasm::identities::{
    bs_identification, bs_normalization, delta_product, scheme_alphabet, specialize_scheme, sum_wgt,
    verify_factorization, verify_with_table, weyl_specialization, TableEntry, WeightScheme, WeightTable,
};
use htsasm::laurent::var::{a0, a1, a2, c, x};
use htsasm::laurent::{poly, GaussianRational, LaurentPoly, Monomial, Substitution};
use htsasm::paths::{fixtures as path_fixtures, verify_pdet, LatticePathConfig};
use htsasm::symfunc::{class_c, phi_b_prime, skew_schur_lr, so_universal, Partition};
use htsasm::tableaux::{count_tableaux, Alphabet, ShiftedTableau};
use htsasm::{AsmKind, Limits, StrictPartition};

/// Seed for every random-point check.
const SEED: u64 = 20_240_611;
const POINTS: usize = 20;

/// Criteria expected to fail, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    9,
    "z0 -> -1, y -> -x leaves (1 + x_i x_j) unchanged, so the image differs from the Weyl denominator for n >= 2",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Strict partitions with exactly `n` parts and largest part at most `top`.
fn strict_shapes(n: usize, top: u32) -> Vec<StrictPartition> {
    fn go(n: usize, below: u32, acc: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if acc.len() == n {
            out.push(StrictPartition::new(acc.clone()).unwrap());
            return;
        }
        let need = (n - acc.len()) as u32;
        for p in (need..below).rev() {
            acc.push(p);
            go(n, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, top + 1, &mut Vec::new(), &mut out);
    out
}

fn limits() -> Limits {
    Limits::default()
}

fn delta_closed_forms() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=3 {
        let delta = StrictPartition::staircase(n);
        for scheme in [WeightScheme::Generic, WeightScheme::BnCorollary] {
            let s = sum_wgt(&WeightTable::new(scheme, n), &delta, &limits()).unwrap();
            if s != delta_product(scheme, n) {
                bad.push(format!("{scheme} n={n}"));
            }
        }
        let generic = sum_wgt(&WeightTable::new(WeightScheme::Generic, n), &delta, &limits()).unwrap();
        for target in [WeightScheme::Okada, WeightScheme::Simpson] {
            let specialized = generic.substitute(&specialize_scheme(target, n).unwrap()).unwrap();
            let own = sum_wgt(&WeightTable::new(target, n), &delta, &limits()).unwrap();
            if specialized != delta_product(target, n) || own != delta_product(target, n) {
                bad.push(format!("{target} n={n}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("Generic, BnCorollary, Okada, Simpson at n=1..3; failures: {bad:?}"))
}

fn factorization_grid(table_for: impl Fn(usize) -> WeightTable) -> Vec<String> {
    let mut bad = Vec::new();
    for n in 1..=3 {
        let table = table_for(n);
        for mu in Partition::all_up_to(4, n) {
            let r = verify_with_table(&table, &mu, &limits()).unwrap();
            if !r.equal {
                bad.push(r.to_string());
            }
        }
    }
    bad
}

fn factorization() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for scheme in [WeightScheme::Generic, WeightScheme::BnCorollary] {
        for n in 1..=3 {
            for mu in Partition::all_up_to(4, n) {
                cases += 1;
                let r = verify_factorization(scheme, n, &mu, &limits()).unwrap();
                if !r.equal {
                    bad.push(r.to_string());
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} (scheme, n, mu) cases with |mu| <= 4; failures: {bad:?}"))
}

fn tableau_route() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 1..=3 {
        for mu in Partition::all_up_to(3, n) {
            let lambda = StrictPartition::from_mu(mu.parts(), n).unwrap();
            cases += 1;
            if !verify_pdet(&lambda).unwrap().equal {
                bad.push(lambda.to_string());
            }
        }
    }
    // A second route for n <= 2: the coefficient of the closed product.
    for n in 1..=2 {
        for mu in Partition::all_up_to(3, n) {
            let lambda = StrictPartition::from_mu(mu.parts(), n).unwrap();
            if !detkit::zkq_matches_tableaux(&lambda).unwrap() {
                bad.push(format!("closed product {lambda}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} shapes; failures: {bad:?}"))
}

fn run_lemma(cfg: LemmaCheckConfig, bad: &mut Vec<String>) {
    let r = detkit::check(&cfg).unwrap();
    if !r.ok {
        bad.push(format!("{r}: {:?}", r.failures));
    }
}

fn determinant_lemmas() -> Outcome {
    let mut bad = Vec::new();
    for lemma in [Lemma::Deth, Lemma::Detm] {
        for n in 1..=3 {
            run_lemma(LemmaCheckConfig::symbolic(lemma, n), &mut bad);
        }
        for n in 1..=6 {
            run_lemma(LemmaCheckConfig::random(lemma, n, POINTS, SEED), &mut bad);
        }
    }
    outcome(bad.is_empty(), format!("symbolic n<=3, random n<=6 with {POINTS} points, seed {SEED}; failures: {bad:?}"))
}

fn appendix_identities() -> Outcome {
    let mut bad = Vec::new();
    for r in 0..=6 {
        for vars in 0..=3 {
            run_lemma(LemmaCheckConfig::symbolic(Lemma::Hr { r }, vars), &mut bad);
        }
    }
    for n in 1..=4 {
        run_lemma(LemmaCheckConfig::symbolic(Lemma::Edet, n), &mut bad);
    }
    for n in 1..=3 {
        run_lemma(LemmaCheckConfig::symbolic(Lemma::EdetClasses, n), &mut bad);
    }
    outcome(bad.is_empty(), format!("h_r difference r<=6 with <=3 extra variables, e-determinant n<=4, class expansions n<=3; failures: {bad:?}"))
}

const PRINTED_A: &str = "0 1 0 0 0 0 0 0
0 -1 0 1 0 0 0 0
1 0 0 0 0 0 0 0
-1 0 1 -1 0 0 1 0
0 0 -1 0 1 0 -1 1
0 1 0 0 -1 1 0 0
0 -1 1 0 0 0 0 0";

const PRINTED_B: &str = "1 1 0 0 0 0 0 0
0 0 1 1 0 0 0 0
1 0 0 0 0 0 0 0
0 1 1 0 1 1 1 0
0 0 0 1 1 0 0 1
1 1 0 0 0 1 0 0
0 0 1 0 0 0 0 0";

const PRINTED_T: &str = "1 1 2 2 0 0 0 -3 / 3 0 0 -3 -3 -2 / -2 -2 -1";

fn grid<T: ToString>(rows: &[Vec<T>]) -> String {
    rows.iter().map(|r| r.iter().map(T::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("\n")
}

fn bijections() -> Outcome {
    let mut bad = Vec::new();
    let mut objects = 0usize;
    for n in 1..=3 {
        for lambda in strict_shapes(n, 6) {
            for kind in [AsmKind::OddBPrime, AsmKind::EvenB] {
                let alphabet = Alphabet::for_kind(kind);
                let all = asm::enumerate(kind, &lambda, &limits()).unwrap();
                let mut weighted = 0u64;
                for a in &all {
                    objects += 1;
                    let t = ShiftedTableau::from_asm(a);
                    if t.validate_unprimed(alphabet).is_err() || t.to_asm(kind).as_ref() != Ok(a) {
                        bad.push(format!("{kind} {lambda}: {t}"));
                    }
                    weighted += 1u64 << a.neg_count();
                }
                let tableaux = count_tableaux(&lambda, alphabet, false).unwrap();
                if tableaux != all.len() as u64 {
                    bad.push(format!("{kind} {lambda}: {} matrices, {tableaux} tableaux", all.len()));
                }
                let primed = count_tableaux(&lambda, alphabet, true).unwrap();
                if primed != weighted {
                    bad.push(format!("{kind} {lambda}: {primed} primed tableaux, sum of 2^neg = {weighted}"));
                }
            }
        }
    }
    let a = asm_fixtures::odd_863();
    let t = ShiftedTableau::from_asm(&a);
    if grid(a.entries()) != PRINTED_A || grid(&a.right_sums()) != PRINTED_B || t.to_string() != PRINTED_T {
        bad.push("printed matrix/tableau pair".into());
    }
    let parsed: ShiftedTableau = PRINTED_T.parse().unwrap();
    if parsed.to_asm(AsmKind::OddBPrime).ok() != Some(a) {
        bad.push("printed tableau back to matrix".into());
    }
    let first = htsasm::paths::to_paths(&path_fixtures::first_example()).unwrap();
    let second = htsasm::paths::to_paths(&path_fixtures::second_example()).unwrap();
    let meeting = LatticePathConfig::from_rows(3, &path_fixtures::intersecting_example()).unwrap();
    if !first.is_non_intersecting() || !second.is_non_intersecting() || meeting.is_non_intersecting() {
        bad.push("path classification".into());
    }
    outcome(bad.is_empty(), format!("{objects} matrices round-tripped, printed pair and path figures; failures: {bad:?}"))
}

fn row_statistics() -> Outcome {
    let mut bad = Vec::new();
    let mut objects = 0usize;
    for n in 1..=3 {
        for lambda in strict_shapes(n, 6) {
            for kind in [AsmKind::OddBPrime, AsmKind::EvenB] {
                for a in asm::enumerate(kind, &lambda, &limits()).unwrap() {
                    objects += 1;
                    let s = a.stats();
                    if !s.row_identity_failures().is_empty() || !s.symmetry_failures(n).is_empty() {
                        bad.push(format!("{kind} {lambda} {:?}", a.entries()));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{objects} matrices; failures: {}", bad.len()))
}

fn mono(pairs: &[(htsasm::VarId, i32)]) -> LaurentPoly {
    LaurentPoly::term(Monomial::from_pairs(pairs.iter().copied()), GaussianRational::one())
}

fn free_fermion() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=2 {
        let table = WeightTable::new(WeightScheme::BrubakerSchultz, n);
        let delta = delta_product(WeightScheme::BrubakerSchultz, n);
        if sum_wgt(&table, &StrictPartition::staircase(n), &limits()).unwrap() != delta {
            bad.push(format!("delta product n={n}"));
        }
        let z = scheme_alphabet(WeightScheme::BrubakerSchultz, n);
        for mu in Partition::all_up_to(2, n) {
            let lambda = StrictPartition::from_mu(mu.parts(), n).unwrap();
            let lhs = sum_wgt(&table, &lambda, &limits()).unwrap();
            // Ratio against w0 * sum_C s_{mu/gamma}(z), by Littlewood-Richardson.
            let w = mu.part(0) as i32;
            let mut pairs = vec![(a0(), w)];
            for i in 1..=n {
                pairs.extend([(a1(i), w), (a2(i), w)]);
            }
            let skew: LaurentPoly = class_c(mu.weight()).iter().map(|g| skew_schur_lr(&mu, g, &z)).sum();
            let ratio = mono(&pairs) * skew;
            if lhs.div_exact(&delta) != Some(ratio) {
                bad.push(format!("ratio n={n} mu={:?}", mu.parts()));
            }
            // The generic sum under the identification, rescaled.
            let g = sum_wgt(&WeightTable::new(WeightScheme::Generic, n), &lambda, &limits()).unwrap();
            if g.substitute(&bs_identification(n)).unwrap() * bs_normalization(n, lambda.first()) != lhs {
                bad.push(format!("identification n={n} mu={:?}", mu.parts()));
            }
        }
    }
    outcome(bad.is_empty(), format!("n=1,2 with |mu|<=2; failures: {bad:?}"))
}

/// Returns (pass, detail, extra info line).
fn character_sanity() -> (Outcome, String) {
    let mut bad = Vec::new();
    for n in 1..=2 {
        let z: Vec<LaurentPoly> = (1..=2 * n + 1).map(|i| LaurentPoly::var(c(i))).collect();
        for mu in Partition::all_up_to(3, 2 * n + 1) {
            let phi = phi_b_prime(&mu, &z);
            for i in 1..=2 * n + 1 {
                for j in i + 1..=2 * n + 1 {
                    let mut swap = Substitution::new();
                    swap.insert(c(i), LaurentPoly::var(c(j)));
                    swap.insert(c(j), LaurentPoly::var(c(i)));
                    if phi.substitute(&swap).unwrap() != phi {
                        bad.push(format!("n={n} mu={:?} swap {i},{j}", mu.parts()));
                    }
                }
            }
        }
    }
    let one_box = so_universal(&Partition::new(vec![1]).unwrap(), &[LaurentPoly::var(x(1)), LaurentPoly::one(), poly("x1^-1")]);
    if one_box != poly("x1 + 1 + x1^-1") {
        bad.push("one-box character".into());
    }
    let mut weyl_literal = Vec::new();
    let mut weyl_quarter = Vec::new();
    for n in 1..=3 {
        let w = weyl_specialization(n);
        if !w.sign_flip_ok() {
            weyl_literal.push(n);
        }
        if !w.quarter_turn_ok() {
            weyl_quarter.push(n);
        }
    }
    if !weyl_literal.is_empty() {
        bad.push(format!("z0 -> -1, y -> -x differs from the Weyl denominator at n = {weyl_literal:?}"));
    }
    let info = format!(
        "z0 -> i, x -> i x, y -> -i x matches the Weyl denominator at n=1..3: {}",
        if weyl_quarter.is_empty() { "yes" } else { "no" }
    );
    (outcome(bad.is_empty(), format!("symmetry n<=2 |mu|<=3, one-box character, Weyl specialization; failures: {bad:?}")), info)
}

fn negative_controls() -> Outcome {
    let mut survived = Vec::new();
    let mut total = 0;
    for scheme in [WeightScheme::Generic, WeightScheme::BnCorollary] {
        for entry in TableEntry::all(scheme) {
            total += 1;
            let broken = factorization_grid(|n| {
                let mut t = WeightTable::new(scheme, n);
                t.perturb(entry);
                t
            });
            if broken.is_empty() {
                survived.push(format!("{scheme} {entry}"));
            }
        }
    }
    outcome(survived.is_empty(), format!("{total} single-entry perturbations; undetected: {survived:?}"))
}

fn main() {
    let mut unexpected = Vec::new();
    let mut report = |id: u32, title: &str, run: &dyn Fn() -> Outcome, budget: Option<Duration>| {
        let start = Instant::now();
        let mut o = run();
        let elapsed = start.elapsed();
        if let Some(b) = budget {
            if elapsed > b {
                o.pass = false;
                o.detail.push_str(&format!("; over the {b:?} budget"));
            }
        }
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {verdict}: {title} ({:.2?}) {}", elapsed, o.detail);
        match (o.pass, known) {
            (false, Some((_, why))) => println!("             known failure: {why}"),
            (false, None) => unexpected.push(id),
            (true, Some(_)) => {
                println!("             listed as a known failure but passed");
                unexpected.push(id);
            }
            (true, None) => {}
        }
    };
    report(1, "delta-shape closed forms", &delta_closed_forms, Some(Duration::from_secs(60)));
    report(2, "factorization over mu", &factorization, Some(Duration::from_secs(600)));
    report(3, "tableau sum equals coefficient of det(h)", &tableau_route, None);
    report(4, "determinant evaluations", &determinant_lemmas, None);
    report(5, "complete/elementary symmetric identities", &appendix_identities, None);
    report(6, "matrix, tableau and path bijections", &bijections, None);
    report(7, "row statistics and L-symmetry", &row_statistics, None);
    report(8, "free-fermion weights", &free_fermion, None);
    let weyl_info = std::cell::RefCell::new(String::new());
    report(
        9,
        "character sanity",
        &|| {
            let (o, info) = character_sanity();
            *weyl_info.borrow_mut() = info;
            o
        },
        None,
    );
    println!("             info: {}", weyl_info.borrow());
    report(10, "perturbed tables are detected", &negative_controls, None);
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected");
    } else {
        println!("acceptance: unexpected results for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
