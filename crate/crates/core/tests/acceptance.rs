mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::worked_examples::{fpf4_table, s3_table, sp_351624};
use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sympgroth::coxeter::{
    grassmannian_perm, is_fpf_grassmannian, shift_perm, FpfInvolution, Partition, Permutation,
    StrictPartition,
};
use sympgroth::grothendieck::{
    beta_rescale_check, grothendieck, is_sp_dominant, sp_dominant_poly, sp_grothendieck,
    sp_transition_recurrence, verify_lenart_transition, verify_sp_transition, GrothExpansion,
    SpGrothExpansion,
};
use sympgroth::poly::{BetaInt, OperatorKind};
use sympgroth::stable::{
    expand_in_g_basis, expand_in_gp_basis, gp_partition, gp_sp, gp_via_pi_formula,
    sp_grassmannian_formula, stable_groth_partition, stable_groth_perm, verify_f_grass, Window,
};

type Outcome = Result<String, String>;

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn z(s: &str) -> FpfInvolution {
    s.parse().unwrap()
}

fn cyc(c: &[(usize, usize)]) -> FpfInvolution {
    FpfInvolution::from_cycles(c).unwrap()
}

fn b(d: usize) -> BetaInt {
    BetaInt::beta().pow(d)
}

fn default_window() -> Window {
    Window::new(4, 6).unwrap()
}

fn tables() -> Outcome {
    for (w, expected) in s3_table() {
        check(grothendieck(&p(w), Some(3)) == expected, || format!("G_{w} differs"))?;
    }
    for (y, expected) in fpf4_table() {
        check(sp_grothendieck(&z(y), None) == expected, || format!("Sp G_{y} differs"))?;
    }
    let g = sp_grothendieck(&z("351624"), None);
    check(g == sp_351624(), || "Sp G_351624 differs".into())?;
    Ok(format!("6 + 3 polynomials, 351624 with {} terms", g.len()))
}

fn lenart() -> Outcome {
    let t = verify_lenart_transition(&p("13452"), 3).map_err(|e| e.to_string())?;
    let expected = GrothExpansion::from_terms([
        (p("13452"), b(0)),
        (p("13542"), b(1)),
        (p("14352"), -b(1)),
        (p("14532"), -b(2)),
        (p("34152"), b(2)),
        (p("34512"), b(3)),
        (p("34251"), b(3)),
        (p("34521"), b(4)),
    ]);
    check(t.signed_terms == expected, || format!("signed terms {}", t.signed_terms))?;
    check(t.equal && t.signed_equal, || "example identity fails".into())?;
    let mut count = 0;
    for v in Permutation::all(4) {
        for k in 1..=5 {
            let t = verify_lenart_transition(&v, k).map_err(|e| e.to_string())?;
            check(t.equal && t.signed_equal, || format!("v={v} k={k}"))?;
            count += 1;
        }
    }
    Ok(format!("8 signed terms; {count} sweep cases"))
}

fn sp_transition() -> Outcome {
    let v = cyc(&[(1, 2), (3, 5), (4, 8), (6, 7)]);
    let t = verify_sp_transition(&v, 3, 5).map_err(|e| e.to_string())?;
    check(t.lower == [2] && t.upper == [8, 6], || format!("indices {:?} {:?}", t.lower, t.upper))?;
    let lhs = SpGrothExpansion::from_terms([(v.clone(), b(0)), (cyc(&[(1, 3), (2, 5), (4, 8), (6, 7)]), b(1))]);
    let rhs = SpGrothExpansion::from_terms([
        (v.clone(), b(0)),
        (cyc(&[(1, 2), (3, 8), (4, 5), (6, 7)]), b(1)),
        (cyc(&[(1, 2), (3, 6), (4, 8), (5, 7)]), b(1)),
        (cyc(&[(1, 2), (3, 8), (4, 6), (5, 7)]), b(2)),
    ]);
    check(t.lhs_terms == lhs && t.rhs_terms == rhs, || "example terms differ".into())?;
    check(t.equal, || "example identity fails".into())?;
    let mut count = 0;
    for v in FpfInvolution::all(6) {
        for j in 1..=6 {
            let k = v.apply(j);
            if k > j {
                let t = verify_sp_transition(&v, j, k).map_err(|e| e.to_string())?;
                check(t.equal, || format!("v={v} (j,k)=({j},{k})"))?;
                count += 1;
            }
        }
    }
    Ok(format!("example term by term; {count} sweep cases"))
}

fn recurrence() -> Outcome {
    let mut count = 0;
    for y in FpfInvolution::all(6).into_iter().filter(|y| !y.is_theta()) {
        let r = sp_transition_recurrence(&y).map_err(|e| e.to_string())?;
        check(r.certified, || format!("z={y} upper={:?} l={}", r.upper, r.l))?;
        count += 1;
    }
    Ok(format!("{count} involutions certified"))
}

fn main_theorem() -> Outcome {
    let win = default_window();
    let mut seen = Vec::new();
    for y in FpfInvolution::all(8) {
        if is_fpf_grassmannian(&y).is_some() {
            let ok = verify_f_grass(&y, &win).map_err(|e| e.to_string())?;
            check(ok, || format!("z={y}"))?;
            seen.push(y.to_string());
        }
    }
    for must in ["47816523", "4321"] {
        check(seen.iter().any(|s| s == must), || format!("{must} not covered"))?;
    }
    Ok(format!("{} FPF-Grassmannian involutions at (4,6)", seen.len()))
}

fn buch() -> Outcome {
    let win = default_window();
    let mut count = 0;
    for lam in (0..=4).flat_map(Partition::all_of_size) {
        let lhs = stable_groth_perm(&grassmannian_perm(&lam), &win);
        check(lhs == stable_groth_partition(&lam, &win), || format!("λ={lam}"))?;
        count += 1;
    }
    Ok(format!("{count} partitions at (4,6)"))
}

fn positivity() -> Outcome {
    let win = default_window();
    for w in Permutation::all(4) {
        let e = expand_in_g_basis(&stable_groth_perm(&w, &win), &win).map_err(|e| e.to_string())?;
        check(e.is_nonnegative(), || format!("G_{w}: {}", e.terms))?;
    }
    for y in FpfInvolution::all(6) {
        let f = gp_sp(&y, &win).map_err(|e| e.to_string())?;
        let e = expand_in_gp_basis(&f, &win).map_err(|e| e.to_string())?;
        check(e.is_nonnegative(), || format!("GP_{y}: {}", e.terms))?;
    }
    for lam in (1..=4).flat_map(StrictPartition::all_of_size) {
        let e = expand_in_g_basis(&gp_partition(&lam, &win), &win).map_err(|e| e.to_string())?;
        check(e.is_nonnegative(), || format!("GP_{lam}: {}", e.terms))?;
    }
    Ok("24 + 15 + strict |λ| ≤ 4 expansions in N[β]".into())
}

fn operator_suite() -> Outcome {
    const CASES: usize = 250;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for case in 0..CASES {
        let laurent = case % 2 == 1;
        let f = random_poly(&mut rng, laurent);
        let g = random_poly(&mut rng, laurent);
        let i = rng.gen_range(1..=4);
        let fail = |name: &str| format!("{name} failed on case {case}: f = {f}, g = {g}, i = {i}");
        check(dd_squared_vanishes(&f, i), || fail("∂∂ = 0"))?;
        check(beta_dd_squared(&f, i), || fail("∂β∂β = -β∂β"))?;
        let bi = rng.gen_range(1..=3);
        check(
            KINDS.iter().all(|&k| braid(k, &f, bi) && commute(k, &f, 1, 3) && commute(k, &f, 2, 4)),
            || fail("braid"),
        )?;
        check(leibniz(&f, &g, i), || fail("Leibniz"))?;
        check(invariant_factor(&f, &g, i), || fail("invariant factor"))?;
        check(pi_idempotent(&f, i), || fail("π idempotence"))?;
        let a = rng.gen_range(1..=3);
        let e = rng.gen_range(0..=2);
        check(eee(a, a + 2, e), || fail("single power chain"))?;
        let (ya, yb) = (rng.gen_range(1..=2), rng.gen_range(1..=3));
        check(yyy(&random_poly(&mut rng, false), ya, ya + yb), || fail("symmetric chain"))?;
        check(vartheta(&f, rng.gen_range(2..=4)), || fail("π of the longest element"))?;
        check(tech_first(&f, rng.gen_range(0..=2), rng.gen_range(2..=3)), || fail("β vs plain"))?;
    }
    Ok(format!("10 identity families × {CASES} random cases"))
}

fn stabilization() -> Outcome {
    let word = Permutation::longest(3).reduced_word();
    for v in Permutation::all(3) {
        let limit = grothendieck(&v, Some(3)).apply_word(OperatorKind::Isobaric, &word);
        for n in 3..=6 {
            let lhs = grothendieck(&shift_perm(n, &v), None).restricted(3);
            check(lhs == limit, || format!("v={v} N={n}"))?;
        }
    }
    Ok("6 × 4 exact equalities".into())
}

fn dual_routes() -> Outcome {
    let (mut dominant, mut grass) = (0, 0);
    for y in FpfInvolution::all(8) {
        if is_sp_dominant(&y) {
            let f = sp_dominant_poly(&y).map_err(|e| e.to_string())?;
            check(f == sp_grothendieck(&y, None), || format!("dominant z={y}"))?;
            dominant += 1;
        }
        if is_fpf_grassmannian(&y).is_some() && !y.is_theta() {
            let f = sp_grassmannian_formula(&y).map_err(|e| e.to_string())?;
            check(f == sp_grothendieck(&y, None), || format!("Grassmannian z={y}"))?;
            grass += 1;
        }
    }
    let mut pi = 0;
    for lam in (1..=4).flat_map(StrictPartition::all_of_size) {
        for n in lam.len().max(1)..=4 {
            let f = gp_via_pi_formula(&lam, n).map_err(|e| e.to_string())?;
            let top = f.max_degree().unwrap_or(0) as usize + 1;
            let win = Window::new(n, top).map_err(|e| e.to_string())?;
            check(f == gp_partition(&lam, &win), || format!("λ={lam} n={n}"))?;
            pi += 1;
        }
    }
    Ok(format!("{dominant} dominant, {grass} Grassmannian, {pi} π-formula cases"))
}

fn rescaling() -> Outcome {
    for w in Permutation::all(4) {
        check(beta_rescale_check(&w), || format!("w={w}"))?;
    }
    Ok("24 permutations".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("worked-example tables", 1, tables),
        ("transition example and S4 sweep", 60, lenart),
        ("symplectic transition example and sweep", 300, sp_transition),
        ("last visible descent recurrence", 300, recurrence),
        ("GP_z = GP_λ for FPF-Grassmannian z", 600, main_theorem),
        ("G of Grassmannian permutations", 120, buch),
        ("positivity of expansions", 600, positivity),
        ("operator identities", 60, operator_suite),
        ("exact stabilization", 10, stabilization),
        ("dual routes", 600, dual_routes),
        ("β-rescaling", 30, rescaling),
    ];
    let mut failures = 0;
    for (idx, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the {limit} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("{status} criterion {:>2} {name}: {detail} [{:.2} s ≤ {limit} s]", idx + 1, elapsed.as_secs_f64());
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
