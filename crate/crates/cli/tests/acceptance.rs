//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use complexity_core::assembling::{classify_torus_bundle, seifert_piece_22, seifert_piece_32, Geometry};
use complexity_core::spine::{
    criterion_one, dual_spine, enumerate_one_vertex, sigma_stats, stiefel_whitney_surface, surface_topology, w1_cocycle,
    EnumerateOptions,
};
use complexity_core::theta::{flip_distance, lens_complexity, lens_complexity_by_flips, Gl2, LensSpace, Slope, ThetaGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<String, String>;

fn census(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_census")).args(args).output().expect("run census");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"), start.elapsed())
}

fn ensure(ok: bool, why: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.into())
    }
}

fn lens_census_matches_the_table() -> Check {
    let (code, out, elapsed) = census(&["lens-census", "--cmax", "9", "--check"]);
    ensure(code == 0, format!("exit status {code}"))?;
    let counts: Vec<usize> =
        out.lines().filter(|l| !l.starts_with('#')).map(|l| l.split('\t').nth(1).unwrap().parse().unwrap()).collect();
    ensure(counts == [3, 2, 3, 6, 10, 20, 36, 72, 136, 272], format!("counts {counts:?}"))?;
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    let mut compared = 0;
    for p in 1..=200u64 {
        for q in 0..p.max(2) {
            let Ok(l) = LensSpace::new(p, q) else { continue };
            if l.q() != q {
                continue;
            }
            let (formula, flips) = (lens_complexity(l), lens_complexity_by_flips(l));
            ensure(formula == flips, format!("{l}: digit sums give {formula}, flips give {flips}"))?;
            compared += 1;
        }
    }
    Ok(format!("counts {counts:?} in {elapsed:.2?}; formula = flip oracle on {compared} classes with p ≤ 200"))
}

fn census_rows() -> Result<(Vec<Value>, Duration), String> {
    let (code, out, elapsed) = census(&["nonorientable-census", "--check", "--format", "json"]);
    ensure(code == 0, format!("exit status {code}"))?;
    let rows: Vec<Value> = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    Ok((rows, elapsed))
}

fn census_at_six() -> Check {
    let (rows, elapsed) = census_rows()?;
    let six: Vec<&Value> = rows.iter().filter(|r| r["complexity"] == 6).collect();
    ensure(six.len() == 5, format!("{} classes", six.len()))?;
    let flat: Vec<&Value> = six.iter().copied().filter(|r| r["geometry"] == "E3").collect();
    let sol: Vec<&Value> = six.iter().copied().filter(|r| r["geometry"] == "Sol").collect();
    ensure(flat.len() == 4 && sol.len() == 1, "expected 4 flat and 1 Sol")?;
    let mut homologies: Vec<&str> = flat.iter().map(|r| r["homology"].as_str().unwrap()).collect();
    homologies.sort();
    homologies.dedup();
    ensure(homologies.len() == 4, "flat classes are not distinct")?;
    ensure(sol[0]["monodromy"] == serde_json::json!([[1, 1], [1, 0]]), format!("Sol monodromy {}", sol[0]["monodromy"]))?;
    ensure(six.iter().all(|r| r["ledger"] == 6), "ledger other than 6")?;
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("4 flat ({}) + Sol [[1,1],[1,0]] in {elapsed:.2?}", homologies.join(", ")))
}

fn constructions_at_seven() -> Check {
    let (rows, _) = census_rows()?;
    let seven: Vec<&Value> = rows.iter().filter(|r| r["complexity"] == 7).collect();
    let mut bases: Vec<&str> = Vec::new();
    for r in seven.iter().filter(|r| r["geometry"] == "H2xR") {
        ensure(r["chi_orb"] == "-1/6" && r["ledger"] == 7, format!("row {r}"))?;
        bases.push(r["fibrations"][0].as_str().unwrap());
    }
    bases.sort();
    ensure(bases == ["RP²(3,1)(2,1)", "disc+mirror(3,1)(2,1)"], format!("bases {bases:?}"))?;
    let sol = seven.iter().find(|r| r["geometry"] == "Sol").ok_or("no Sol row")?;
    ensure(sol["monodromy"] == serde_json::json!([[2, 1], [1, 0]]) && sol["ledger"] == 7, format!("Sol row {sol}"))?;
    Ok("H2xR over RP²(3,1)(2,1) and disc+mirror(3,1)(2,1) with χ = -1/6, Sol [[2,1],[1,0]], all ledger 7".into())
}

/// A `P` with `P A P⁻¹ = N` for `N = [[1,1],[1,0]]` (trace 1) or its inverse (trace −1):
/// `PA = NP` forces the second row of `P` from the first, so only the first row is searched.
fn conjugator(a: Gl2) -> Option<Gl2> {
    let m = a.entries();
    let row_times = |r: [i64; 2]| [r[0] * m[0][0] + r[1] * m[1][0], r[0] * m[0][1] + r[1] * m[1][1]];
    for radius in 1..=500i64 {
        for x in -radius..=radius {
            for y in -radius..=radius {
                if x.abs().max(y.abs()) != radius {
                    continue;
                }
                let ra = row_times([x, y]);
                let second = if a.trace() == 1 { [ra[0] - x, ra[1] - y] } else { ra };
                if let Ok(p) = Gl2::new([[x, y], second]) {
                    return Some(p);
                }
            }
        }
    }
    None
}

fn sol_normal_form() -> Check {
    let start = Instant::now();
    let golden = Gl2::new([[1, 1], [1, 0]]).unwrap();
    let mut checked = 0;
    for a in -20..=20i64 {
        for b in -20..=20i64 {
            for c in -20..=20i64 {
                for d in -20..=20i64 {
                    if a * d - b * c != -1 || (a + d).abs() > 1 {
                        continue;
                    }
                    let m = Gl2::new([[a, b], [c, d]]).unwrap();
                    if m.is_periodic() {
                        continue;
                    }
                    let target = if m.trace() == 1 { golden } else { golden.inverse() };
                    let p = conjugator(m).ok_or(format!("no conjugator for {m}"))?;
                    ensure(m.conjugate_by(p) == target, format!("{p} does not conjugate {m} to {target}"))?;
                    let class = classify_torus_bundle(m.entries()).map_err(|e| e.to_string())?;
                    ensure(class.geometry == Geometry::Sol, format!("{m} classified {}", class.geometry))?;
                    ensure(class.normal_form == target, format!("{m}: normal form {}", class.normal_form))?;
                    ensure(class.monodromy == golden, format!("{m}: bundle form {}", class.monodromy))?;
                    checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"))?;
    Ok(format!("{checked} matrices conjugate to [[1,1],[1,0]] or its inverse, classifier agrees, {elapsed:.2?}"))
}

fn spine_duality() -> Check {
    let start = Instant::now();
    let mut summary = Vec::new();
    for n in 1..=4usize {
        let tables = enumerate_one_vertex(n, &EnumerateOptions { workers: 4, ..Default::default() }).map_err(|e| e.to_string())?;
        let mut survivors_with_sigma = 0;
        for e in &tables {
            let sig = e.signature.as_str();
            let s = dual_spine(&e.table).map_err(|e| e.to_string())?;
            let shape = (s.vertex_count(), s.edges().len(), s.faces().len(), s.euler_characteristic());
            ensure(shape == (n, 2 * n, n + 1, 1), format!("{sig}: (V, E, F, χ) = {shape:?}"))?;
            let orientable = w1_cocycle(&e.table).map_err(|e| e.to_string())?.orientable();
            let sigma = stiefel_whitney_surface(&s).map_err(|e| e.to_string())?;
            ensure(sigma.is_empty() == orientable, format!("{sig}: Σ empty {} but orientable {orientable}", sigma.is_empty()))?;
            if sigma.is_empty() {
                continue;
            }
            let stats = sigma_stats(&s, &sigma).map_err(|e| format!("{sig}: {e}"))?;
            for c in &stats.components {
                ensure((c.v3 + c.v4) as i64 == c.f as i64 - c.euler, format!("{sig}: v3 + v4 ≠ f − χ"))?;
            }
            if criterion_one(&s).is_none() {
                let topology = surface_topology(&s, &sigma).map_err(|e| e.to_string())?;
                let good = topology.components.iter().all(|c| c.orientable && !c.is_sphere());
                ensure(good, format!("{sig}: a component of Σ is non-orientable or a sphere"))?;
                survivors_with_sigma += 1;
            }
        }
        summary.push(format!("n={n}: {} tables, {survivors_with_sigma} survivors with Σ", tables.len()));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), format!("took {elapsed:?}"))?;
    Ok(format!("{} in {elapsed:.2?}", summary.join("; ")))
}

fn random_theta(rng: &mut ChaCha8Rng) -> ThetaGraph {
    let mut t = ThetaGraph::standard();
    for _ in 0..rng.gen_range(0..10) {
        t = t.flip(t.slopes()[rng.gen_range(0..3)]).unwrap();
    }
    t
}

fn random_gl2(rng: &mut ChaCha8Rng) -> Gl2 {
    loop {
        let m = [[rng.gen_range(-4..=4), rng.gen_range(-4..=4)], [rng.gen_range(-4..=4), rng.gen_range(-4..=4)]];
        if let Ok(g) = Gl2::new(m) {
            return g;
        }
    }
}

fn theta_calculus() -> Check {
    let start = Instant::now();
    let theta0 = ThetaGraph::standard();
    ensure(theta0.flip(Slope::integer(1)).unwrap() == ThetaGraph::integral(-1), "flip({0,1,∞}, 1)")?;
    let image = Gl2::new([[2, 1], [1, 0]]).unwrap().apply_theta(theta0);
    ensure(image == "{2,3,inf}".parse().unwrap(), format!("[[2,1],[1,0]] sends θ₀ to {image}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let t = random_theta(&mut rng);
        let s = t.slopes()[rng.gen_range(0..3)];
        let (u, new) = t.flip_with_new(s).unwrap();
        ensure(u.flip(new).unwrap() == t, format!("flipping {t} at {s} twice"))?;
    }
    for _ in 0..1000 {
        let (t, g) = (random_theta(&mut rng), random_gl2(&mut rng));
        let s = t.slopes()[rng.gen_range(0..3)];
        let lhs = g.apply_theta(t.flip(s).unwrap());
        ensure(lhs == g.apply_theta(t).flip(g.apply(s)).unwrap(), format!("{g} and the flip of {t} at {s}"))?;
    }
    for _ in 0..1000 {
        let (a, b, c) = (random_theta(&mut rng), random_theta(&mut rng), random_theta(&mut rng));
        let (ab, ba, bc, ac) = (flip_distance(a, b), flip_distance(b, a), flip_distance(b, c), flip_distance(a, c));
        ensure(ab == ba && ac <= ab + bc && (ab == 0) == (a == b), format!("metric fails on {a}, {b}, {c}"))?;
        let g = random_gl2(&mut rng);
        ensure(flip_distance(g.apply_theta(a), g.apply_theta(b)) == ab, format!("{g} changes d({a}, {b})"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("3 × 1000 random checks and both fixed cases in {elapsed:.2?}"))
}

fn ledgers() -> Check {
    let (p22, p32) = (seifert_piece_22(), seifert_piece_32());
    ensure(p22.ledger.bound == 3, format!("(D2xS1)_{{2,2}} ledger {}", p22.ledger.bound))?;
    ensure(p32.ledger.bound == 4, format!("(D2xS1)_{{3,2}} ledger {}", p32.ledger.bound))?;
    let (t22, t32) = (p22.trace.to_string(), p32.trace.to_string());
    let bricks = |t: &str, b: &str| t.matches(&format!("{b},")).count() + t.matches(&format!("{b})")).count();
    ensure((bricks(&t22, "B4"), bricks(&t22, "B2")) == (1, 2), format!("built as {t22}"))?;
    ensure((bricks(&t32, "B4"), bricks(&t32, "B3"), bricks(&t32, "B2")) == (1, 1, 2), format!("built as {t32}"))?;
    Ok("B4+B2+B2 = 3 and B4+B3+2·B2 = 4".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("lens census", lens_census_matches_the_table),
        ("non-orientable census at complexity 6", census_at_six),
        ("constructions at complexity 7", constructions_at_seven),
        ("GL2(Z) normal form", sol_normal_form),
        ("spine duality", spine_duality),
        ("theta-graph calculus", theta_calculus),
        ("ledgers of the Seifert pieces", ledgers),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
