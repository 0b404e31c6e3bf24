//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines show up in `cargo test` output.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use polyspan::cones::ConeSign;
use polyspan::generate::{generate, standard_instance};
use polyspan::io::{parse_instance, write_edge_list};
use polyspan::spanners::{build_g_infinity, SpannerSuite};
use polyspan::verify::{
    canonical_pairs, check_canonical_paths, check_empty_triangles, check_per_edge_bound_ginf,
    check_planarity, check_shortcuts, oracle_g_infinity, per_edge_factor, stretch_factor,
};
use polyspan::{Graph, Scene};

const TOL: f64 = 1e-9;
const ORACLE_BUDGET: Duration = Duration::from_secs(60);

struct Instance {
    name: String,
    scene: Scene,
    suite: SpannerSuite,
}

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn fixture_scenes() -> Vec<(String, Scene)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(fixtures_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let scene = parse_instance(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, scene)
        })
        .collect()
}

fn instances() -> Vec<Instance> {
    let generated = (0..100).map(|i| (format!("seed {i}"), generate(&standard_instance(i)).unwrap()));
    generated
        .chain(fixture_scenes())
        .map(|(name, scene)| {
            let suite = SpannerSuite::build(&scene).unwrap_or_else(|e| panic!("{name}: {e}"));
            Instance { name, scene, suite }
        })
        .collect()
}

/// First failure message, or a summary on success.
type Verdict = Result<String, String>;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn first_failure(set: &[Instance], mut f: impl FnMut(&Instance) -> Result<(), String>) -> Result<(), String> {
    for inst in set {
        f(inst).map_err(|e| format!("{}: {e}", inst.name))?;
    }
    Ok(())
}

fn oracle_equivalence(set: &[Instance]) -> Verdict {
    let start = Instant::now();
    first_failure(set, |i| {
        let built = build_g_infinity(&i.scene).map_err(|e| e.to_string())?;
        let oracle = oracle_g_infinity(&i.scene).map_err(|e| e.to_string())?;
        if built != oracle {
            return Err(format!(
                "extra {:?} missing {:?}",
                built.difference(&oracle),
                oracle.difference(&built)
            ));
        }
        Ok(())
    })?;
    let took = start.elapsed();
    if took > ORACLE_BUDGET {
        return Err(format!("took {took:.1?}, budget {ORACLE_BUDGET:?}"));
    }
    Ok(format!("{} instances identical in {took:.1?}", set.len()))
}

fn planarity(set: &[Instance]) -> Verdict {
    first_failure(set, |i| {
        let s = &i.suite;
        for (name, g) in [("ginf", &s.ginf), ("g15", &s.g15), ("g10", &s.g10), ("g7", &s.g7)] {
            let r = check_planarity(&i.scene, g);
            if !r.crossing_pairs.is_empty() || !r.obstacle_conflicts.is_empty() {
                return Err(format!(
                    "{name}: crossings {:?} obstacle conflicts {:?}",
                    r.crossing_pairs, r.obstacle_conflicts
                ));
            }
        }
        Ok(())
    })?;
    Ok(format!("{} instances x 4 graphs plane", set.len()))
}

fn degree_bounds(set: &[Instance]) -> Verdict {
    let mut worst = [0usize; 3];
    first_failure(set, |i| {
        let s = &i.suite;
        for (k, (name, g, cap)) in [("g15", &s.g15, 15), ("g10", &s.g10, 10), ("g7", &s.g7, 7)].into_iter().enumerate() {
            let d = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
            worst[k] = worst[k].max(d);
            if d > cap {
                return Err(format!("{name} max degree {d} > {cap}"));
            }
        }
        // every g10 edge is charged at both ends, so charge(v) >= deg(v)
        let mut charge = vec![0usize; i.scene.len()];
        let mut per_subcone = BTreeMap::new();
        for c in s.ledger.iter() {
            charge[c.endpoint] += 1;
            *per_subcone.entry(c.subcone).or_insert(0usize) += 1;
        }
        for (v, &c) in charge.iter().enumerate() {
            if c < s.g10.degree(v) {
                return Err(format!("vertex {v}: charge {c} < degree {}", s.g10.degree(v)));
            }
        }
        for (u, v) in s.g10.edges() {
            for end in [u, v] {
                if s.ledger.get(u, v, end).is_none() {
                    return Err(format!("edge ({u}, {v}) uncharged at {end}"));
                }
            }
        }
        for (sub, n) in per_subcone {
            let cap = if sub.label.sign == ConeSign::Positive { 2 } else { 1 };
            if n > cap {
                return Err(format!("{sub}: {n} charges > {cap}"));
            }
        }
        Ok(())
    })?;
    Ok(format!("max degrees g15 {} g10 {} g7 {}; ledger within caps", worst[0], worst[1], worst[2]))
}

fn spanning_ratios(set: &[Instance]) -> Verdict {
    let mut worst: BTreeMap<&str, f64> = BTreeMap::new();
    first_failure(set, |i| {
        let s = &i.suite;
        let checks: [(&str, &Graph, &Graph, f64); 7] = [
            ("ginf/vis", &s.ginf, &s.vis, 2.0),
            ("g15/ginf", &s.g15, &s.ginf, 3.0),
            ("g10/ginf", &s.g10, &s.ginf, 3.0),
            ("g7/ginf", &s.g7, &s.ginf, 3.0),
            ("g15/vis", &s.g15, &s.vis, 6.0),
            ("g10/vis", &s.g10, &s.vis, 6.0),
            ("g7/vis", &s.g7, &s.vis, 6.0),
        ];
        for (name, sub, base, t) in checks {
            let r = stretch_factor(&i.scene, sub, base).map_err(|e| e.to_string())?;
            if r.max_ratio > t * (1.0 + TOL) {
                return Err(format!("{name} ratio {} > {t} at {:?}", r.max_ratio, r.witness_pair));
            }
            let e = worst.entry(name).or_insert(1.0);
            *e = e.max(r.max_ratio);
        }
        Ok(())
    })?;
    let summary: Vec<String> = worst.iter().map(|(k, v)| format!("{k} {v:.4}")).collect();
    Ok(format!("worst {}", summary.join(", ")))
}

fn per_edge(set: &[Instance]) -> Verdict {
    let at = |theta: f64, want: f64| {
        let got = per_edge_factor(theta);
        if (got - want).abs() > TOL * want {
            Err(format!("factor({theta}) = {got}, want {want}"))
        } else {
            Ok(())
        }
    };
    at(0.0, 3f64.sqrt())?;
    at(PI / 6.0, 2.0)?;
    // the factor grows on [0, pi/6], so the maximum sits at pi/6
    let samples: Vec<f64> = (0..=600).map(|k| per_edge_factor(PI / 6.0 * k as f64 / 600.0)).collect();
    if samples.windows(2).any(|w| w[1] < w[0]) {
        return Err("factor not increasing on [0, pi/6]".into());
    }
    let mut worst = 0f64;
    first_failure(set, |i| {
        let r = check_per_edge_bound_ginf(&i.scene, &i.suite.vis, &i.suite.ginf);
        if !r.violations.is_empty() {
            return Err(format!("{:?}", r.violations));
        }
        worst = worst.max(r.worst);
        Ok(())
    })?;
    Ok(format!("spot values ok; worst path/bound {worst:.6}"))
}

fn structural(set: &[Instance]) -> Verdict {
    first_failure(set, |i| {
        let missing = check_canonical_paths(&i.scene, &i.suite.ginf, &i.suite.g15).map_err(|e| e.to_string())?;
        if !missing.is_empty() {
            return Err(format!("canonical path edges missing {missing:?}"));
        }
        let w = check_empty_triangles(&i.scene, &i.suite.ginf).map_err(|e| e.to_string())?;
        if !w.is_empty() {
            return Err(format!("non-empty triangles {w:?}"));
        }
        Ok(())
    })?;

    // negative controls: drop one edge and expect the checker to object
    let mut path_control = None;
    let mut triangle_control = None;
    for i in set {
        if path_control.is_none() {
            if let Some(&(apex, a, b)) = canonical_pairs(&i.scene, &i.suite.ginf).unwrap().first() {
                let mut g15 = i.suite.g15.clone();
                g15.remove_edge(a, b);
                let missing = check_canonical_paths(&i.scene, &i.suite.ginf, &g15).unwrap();
                if missing.contains(&(apex, a, b)) {
                    path_control = Some(format!("{} without ({a}, {b})", i.name));
                } else {
                    return Err(format!("{}: removing ({a}, {b}) went unnoticed", i.name));
                }
            }
        }
        if triangle_control.is_none() {
            for (u, v) in i.suite.ginf.edges() {
                let mut g = i.suite.ginf.clone();
                g.remove_edge(u, v);
                if !check_empty_triangles(&i.scene, &g).unwrap().is_empty() {
                    triangle_control = Some(format!("{} without ({u}, {v})", i.name));
                    break;
                }
            }
        }
        if path_control.is_some() && triangle_control.is_some() {
            break;
        }
    }
    match (path_control, triangle_control) {
        (Some(p), Some(t)) => Ok(format!("all pass; controls fail: paths on {p}, triangles on {t}")),
        _ => Err("a negative control did not fail".into()),
    }
}

fn subgraph_chain(set: &[Instance]) -> Verdict {
    let mut added = 0;
    let mut removed_w = 0;
    first_failure(set, |i| {
        let s = &i.suite;
        for (name, sub, sup) in [("g10 in g15", &s.g10, &s.g15), ("g15 in ginf", &s.g15, &s.ginf), ("ginf in vis", &s.ginf, &s.vis)] {
            let extra: Vec<_> = sub.edges().filter(|&(a, b)| !sup.has_edge(a, b)).collect();
            if !extra.is_empty() {
                return Err(format!("{name}: extra {extra:?}"));
            }
        }
        for (a, b) in s.g7.edges().filter(|&(a, b)| !s.g10.has_edge(a, b)) {
            let logged = s.shortcuts.iter().any(|t| t.added && (t.x.min(t.y), t.x.max(t.y)) == (a, b));
            if !logged {
                return Err(format!("g7 edge ({a}, {b}) is not a logged (x, y) edge"));
            }
        }
        added += s.shortcuts.iter().filter(|t| t.added).count();
        removed_w += s.shortcuts.iter().filter(|t| t.removed_w.is_some()).count();
        let stray = check_shortcuts(&i.scene, &s.g10, &s.g7, &s.shortcuts);
        if !stray.is_empty() {
            return Err(format!("edges outside their quadrilateral {stray:?}"));
        }
        Ok(())
    })?;
    Ok(format!("chain exact; {added} added (x, y) edges, {removed_w} (x, w) removals"))
}

fn micro_instance() -> Verdict {
    let scene = Scene::from_ints(&[(0, 0), (-1, 2), (1, 3)], vec![]);
    let suite = SpannerSuite::build(&scene).map_err(|e| e.to_string())?;
    let edges: Vec<_> = suite.ginf.edges().collect();
    if edges != [(0, 1), (1, 2)] {
        return Err(format!("ginf = {edges:?}"));
    }
    // the only detour is 0 -> 1 -> 2 against the direct edge 0 -> 2:
    // (sqrt 5 + sqrt 5) / sqrt 10 = sqrt 2
    let r = stretch_factor(&scene, &suite.ginf, &suite.vis).map_err(|e| e.to_string())?;
    if (r.max_ratio - 2f64.sqrt()).abs() > TOL {
        return Err(format!("stretch {} != sqrt 2", r.max_ratio));
    }
    Ok(format!("ginf {edges:?}, stretch {:.12}", r.max_ratio))
}

fn cli(bin: &str, args: &[&str]) -> (i32, String) {
    let out = Command::new(bin).args(args).output().expect("run binary");
    let text = String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr);
    (out.status.code().unwrap_or(-1), text)
}

fn end_to_end() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_polyspan");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let p = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    for seed in 0..100 {
        let c = standard_instance(seed);
        let scene = p("scene.json");
        let (code, out) = cli(bin, &[
            "gen", "--n", &c.n_points.to_string(), "--obstacles", &c.n_obstacles.to_string(),
            "--size", &c.obstacle_size.to_string(), "--seed", &seed.to_string(), "--out", &scene,
        ]);
        if code != 0 {
            return Err(format!("seed {seed}: gen exited {code}: {out}"));
        }
        let mut verify = vec!["verify".to_string(), "--in".into(), scene.clone(), "--quiet".into()];
        for kind in ["ginf", "g15", "g10", "g7"] {
            let file = p(&format!("{kind}.txt"));
            let (code, out) = cli(bin, &["build", "--graph", kind, "--in", &scene, "--out", &file]);
            if code != 0 {
                return Err(format!("seed {seed}: build {kind} exited {code}: {out}"));
            }
            verify.push("--graph".into());
            verify.push(format!("{kind}={file}"));
        }
        let args: Vec<&str> = verify.iter().map(String::as_str).collect();
        let (code, out) = cli(bin, &args);
        if code != 0 {
            return Err(format!("seed {seed}: verify exited {code}: {out}"));
        }
    }

    let fixtures = fixtures_dir();
    let manifest = std::fs::read_to_string(fixtures.join("corrupted/manifest.txt")).unwrap();
    let mut n = 0;
    for line in manifest.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let f: Vec<&str> = line.split_whitespace().collect();
        let [scene, kind, edges, expected] = f[..] else {
            return Err(format!("bad manifest line {line:?}"));
        };
        let scene = fixtures.join(scene).to_string_lossy().into_owned();
        let graph = format!("{kind}={}", fixtures.join("corrupted").join(edges).display());
        let (code, out) = cli(bin, &["verify", "--in", &scene, "--graph", &graph, "--quiet"]);
        if code != 1 || !out.contains(&format!("FAIL {expected}:")) {
            return Err(format!("{edges}: exit {code}, expected FAIL {expected}; output:\n{out}"));
        }
        n += 1;
    }
    Ok(format!("100 seeds verified; {n} corrupted edge lists rejected with the named check"))
}

fn main() -> ExitCode {
    // sanity: the edge-list writer is what build emits
    assert_eq!(write_edge_list(&Graph::from_edges(2, [(0, 1)])), "2 1\n0 1\n");

    let set = instances();
    let criteria: Vec<Criterion> = vec![
        ("oracle equivalence", Box::new(|| oracle_equivalence(&set))),
        ("planarity", Box::new(|| planarity(&set))),
        ("degree bounds and charges", Box::new(|| degree_bounds(&set))),
        ("spanning ratios", Box::new(|| spanning_ratios(&set))),
        ("per-edge bound", Box::new(|| per_edge(&set))),
        ("canonical paths and empty triangles", Box::new(|| structural(&set))),
        ("subgraph chain and shortcuts", Box::new(|| subgraph_chain(&set))),
        ("three-point instance", Box::new(micro_instance)),
        ("end-to-end cli", Box::new(end_to_end)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
