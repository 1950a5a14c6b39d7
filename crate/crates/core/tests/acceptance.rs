//! Acceptance criteria. Each test prints one `[PASS]` / `[FAIL]` line
//! (visible with `--nocapture`) and fails on any miss.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::{
    dominates, independent, random_connected_bipartite, random_dominating_set, random_gnp, rng,
};
use domkit::bounds::{furuya_exceeds_half_delta, rad_volkmann_bound, Rational};
use domkit::families::{
    complete_bipartite, double_star, odd_cycle_corona, random_bipartite, Family,
};
use domkit::solvers::{gamma_bnb, gamma_oracle, i_bnb, i_oracle};
use domkit::transform::{independent_dominating_from, verify_theorem3};
use domkit::Graph;

fn verdict(
    id: u32,
    name: &str,
    started: Instant,
    limit: Duration,
    outcome: Result<String, String>,
) {
    let elapsed = started.elapsed();
    let outcome = match outcome {
        Ok(detail) if elapsed > limit => {
            Err(format!("{detail}; took {elapsed:?}, limit {limit:?}"))
        }
        other => other,
    };
    match outcome {
        Ok(detail) => println!("[PASS] criterion {id:>2}: {name} ({detail}; {elapsed:.2?})"),
        Err(why) => {
            println!("[FAIL] criterion {id:>2}: {name}: {why}");
            panic!("criterion {id} failed: {why}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn criterion_01_complete_bipartite_tight() {
    let t = Instant::now();
    let outcome = (|| {
        for m in 2..=6 {
            let g = complete_bipartite(m).unwrap();
            let (gamma, i, delta) = (gamma_bnb(&g).value, i_bnb(&g).value, g.max_degree());
            ensure((gamma, i, delta) == (2, m, m), || {
                format!("K_{{{m},{m}}}: got {gamma},{i},{delta}")
            })?;
            ensure(2 * i == gamma * delta, || {
                format!("K_{{{m},{m}}} not tight")
            })?;
        }
        Ok("m = 2..6: gamma = 2, i = delta = m, 2i = gamma*delta".into())
    })();
    verdict(
        1,
        "complete balanced bipartite attains delta/2",
        t,
        Duration::from_secs(1),
        outcome,
    );
}

#[test]
fn criterion_02_double_star_tight() {
    let t = Instant::now();
    let outcome = (|| {
        for s in 2..=6 {
            let g = double_star(s).unwrap();
            let (gamma, i, delta) = (gamma_bnb(&g).value, i_bnb(&g).value, g.max_degree());
            ensure((gamma, i, delta) == (2, s + 1, s + 1), || {
                format!("s={s}: got {gamma},{i},{delta}")
            })?;
            ensure(2 * i == gamma * delta, || format!("s={s} not tight"))?;
        }
        Ok("s = 2..6: gamma = 2, i = delta = s+1".into())
    })();
    verdict(
        2,
        "balanced double star attains delta/2",
        t,
        Duration::from_secs(1),
        outcome,
    );
}

#[test]
fn criterion_03_corona_counterexample() {
    let g = odd_cycle_corona(1, 5).unwrap();
    let cf = Family::OddCycleCorona { k: 1, s: 5 }
        .closed_forms()
        .unwrap();

    let t = Instant::now();
    let outcome = (|| {
        ensure(g.n() == 18, || format!("n = {}", g.n()))?;
        let (gamma, i) = (gamma_oracle(&g).unwrap().value, i_oracle(&g).unwrap().value);
        ensure((gamma, i, g.max_degree()) == (3, 11, 7), || {
            format!("oracle: {gamma},{i},{}", g.max_degree())
        })?;
        ensure((gamma, i) == (cf.gamma, cf.i), || {
            "oracle disagrees with closed forms".into()
        })?;
        ensure(2 * i == 22 && gamma * g.max_degree() == 21, || {
            "22 > 21 check".into()
        })?;
        Ok("oracle: gamma = 3, i = 11, delta = 7, 22 > 21".into())
    })();
    verdict(
        3,
        "corona G'(1,5) exceeds delta/2 (oracle)",
        t,
        Duration::from_secs(30),
        outcome,
    );

    let t = Instant::now();
    let outcome = (|| {
        let (gamma, i) = (gamma_bnb(&g).value, i_bnb(&g).value);
        ensure((gamma, i) == (3, 11), || format!("bnb: {gamma},{i}"))?;
        ensure(2 * i > gamma * g.max_degree(), || "not exceeding".into())?;
        Ok("branch-and-bound: gamma = 3, i = 11".into())
    })();
    verdict(
        3,
        "corona G'(1,5) exceeds delta/2 (branch-and-bound)",
        t,
        Duration::from_secs(1),
        outcome,
    );
}

#[test]
fn criterion_04_strictness_threshold() {
    let t = Instant::now();
    let outcome = (|| {
        for k in 1..=2usize {
            for (s, equal) in [(2 * k + 2, true), (2 * k + 3, false)] {
                let g = odd_cycle_corona(k, s).unwrap();
                let (gamma, i, delta) = (gamma_bnb(&g).value, i_bnb(&g).value, g.max_degree());
                let cf = Family::OddCycleCorona { k, s }.closed_forms().unwrap();
                ensure((gamma, i, delta) == (cf.gamma, cf.i, cf.delta), || {
                    format!("k={k} s={s} solver/closed form")
                })?;
                let ratio = Rational::new(i as i64, gamma as i64);
                let half = Rational::new(delta as i64, 2);
                if equal {
                    ensure(ratio == half, || format!("k={k} s={s}: {ratio} != {half}"))?;
                    ensure(ratio == Rational::from_integer(k as i64 + 2), || {
                        "ratio != k+2".into()
                    })?;
                } else {
                    ensure(ratio > half, || format!("k={k} s={s}: {ratio} <= {half}"))?;
                }
            }
        }
        Ok("s = 2k+2 equal, s = 2k+3 strictly above, k = 1, 2".into())
    })();
    verdict(
        4,
        "corona ratio threshold at s = 2k+2",
        t,
        Duration::from_secs(30),
        outcome,
    );
}

#[test]
fn criterion_05_theorem3_property_suite() {
    let t = Instant::now();
    let outcome = (|| {
        let mut r = rng(5);
        let mut tight = 0;
        for idx in 0..1000 {
            let n = 6 + common::below(&mut r, 11);
            let p = [0.2, 0.4, 0.7][idx % 3];
            let g = random_connected_bipartite(n, p, &mut r);
            let rep = verify_theorem3(&g).map_err(|e| format!("instance {idx}: {e}"))?;
            ensure(2 * rep.i <= rep.gamma * rep.delta, || {
                format!("instance {idx} violates: {g:?}")
            })?;
            let d = gamma_bnb(&g).witness;
            ensure(d.len() == rep.gamma, || "witness size".into())?;
            let tr = &rep.trace;
            let (dl, b1, a2, delta) = (d.len(), tr.b1.len(), tr.a2.len(), rep.delta);
            ensure(
                independent(&g, &tr.result) && dominates(&g, &tr.result),
                || format!("instance {idx}: not an IDS"),
            )?;
            ensure(tr.result.len() <= rep.gamma * delta / 2, || {
                format!("instance {idx}: |I| too big")
            })?;
            ensure(a2 <= (delta - 1) * b1, || {
                format!("instance {idx}: |A2| > (delta-1)|B1|")
            })?;
            ensure(b1 <= dl / 2, || format!("instance {idx}: |B1| > |D|/2"))?;
            ensure(tr.result.len() <= dl + (delta - 2) * b1, || {
                format!("instance {idx}: middle link")
            })?;
            if 2 * rep.i == rep.gamma * rep.delta {
                tight += 1;
            }
        }
        Ok(format!("1000 instances, 0 violations, {tight} tight"))
    })();
    verdict(
        5,
        "i <= gamma*delta/2 with transform certificate",
        t,
        Duration::from_secs(120),
        outcome,
    );
}

#[test]
fn criterion_06_transform_fuzz() {
    let t = Instant::now();
    let outcome = (|| {
        let mut r = rng(6);
        let mut done = 0;
        while done < 500 {
            let na = 1 + common::below(&mut r, 8);
            let nb = 1 + common::below(&mut r, 8);
            let g = random_bipartite(na, nb, 0.35, r_next(&mut r)).unwrap();
            if g.max_degree() < 2 {
                continue;
            }
            let mut d = random_dominating_set(&g, 0.3, &mut r);
            let gamma = gamma_bnb(&g).value;
            if d.len() == gamma {
                match (0..g.n()).find(|&v| !d.contains(v)) {
                    Some(v) => {
                        d.insert(v);
                    }
                    None => continue,
                }
            }
            ensure(d.len() > gamma && dominates(&g, &d), || {
                "bad fuzz input".into()
            })?;
            let parts = g.bipartition().unwrap();
            let tr = independent_dominating_from(&g, &parts, &d).map_err(|e| e.to_string())?;
            ensure(independent(&g, &tr.result), || {
                format!("not independent: {g:?} {d:?}")
            })?;
            ensure(dominates(&g, &tr.result), || {
                format!("not dominating: {g:?} {d:?}")
            })?;
            ensure(2 * tr.result.len() <= d.len() * g.max_degree(), || {
                format!("size: {g:?} {d:?}")
            })?;
            done += 1;
        }
        Ok("500 non-minimum dominating sets".into())
    })();
    verdict(
        6,
        "transform on arbitrary dominating sets",
        t,
        Duration::from_secs(60),
        outcome,
    );
}

fn r_next(r: &mut rand_chacha::ChaCha8Rng) -> u64 {
    rand_core::Rng::next_u64(r)
}

/// 150 random bipartite and 150 general graphs, n <= 14.
fn crosscheck_graphs() -> Vec<Graph> {
    let mut r = rng(7);
    let mut out = Vec::new();
    for idx in 0..150 {
        let n = 2 + common::below(&mut r, 13);
        let na = 1 + common::below(&mut r, n - 1);
        let p = [0.2, 0.4, 0.6][idx % 3];
        out.push(random_bipartite(na, n - na, p, r_next(&mut r)).unwrap());
    }
    for idx in 0..150 {
        let n = 1 + common::below(&mut r, 14);
        let p = [0.15, 0.3, 0.5, 0.8][idx % 4];
        out.push(random_gnp(n, p, &mut r));
    }
    out
}

#[test]
fn criterion_07_oracle_bnb_crosscheck() {
    let t = Instant::now();
    let outcome = (|| {
        for (idx, g) in crosscheck_graphs().iter().enumerate() {
            let (go, gb) = (gamma_oracle(g).unwrap().value, gamma_bnb(g).value);
            let (io, ib) = (i_oracle(g).unwrap().value, i_bnb(g).value);
            ensure(go == gb, || {
                format!("graph {idx}: gamma oracle {go} vs bnb {gb}")
            })?;
            ensure(io == ib, || {
                format!("graph {idx}: i oracle {io} vs bnb {ib}")
            })?;
            ensure(gb <= ib, || format!("graph {idx}: gamma > i"))?;
        }
        Ok("300 graphs agree, gamma <= i throughout".into())
    })();
    verdict(
        7,
        "oracle and branch-and-bound agree",
        t,
        Duration::from_secs(120),
        outcome,
    );
}

#[test]
fn criterion_08_rad_volkmann_instances() {
    let t = Instant::now();
    let outcome = (|| {
        ensure(
            rad_volkmann_bound(4).unwrap() == Rational::from_integer(2),
            || "RV(4) != 2".into(),
        )?;
        ensure(
            rad_volkmann_bound(6).unwrap() == Rational::new(17, 5),
            || "RV(6) != 17/5".into(),
        )?;
        let mut checked = 0;
        for (idx, g) in crosscheck_graphs().iter().enumerate() {
            let delta = g.max_degree();
            if delta < 3 {
                continue;
            }
            let ratio = Rational::new(i_bnb(g).value as i64, gamma_bnb(g).value as i64);
            let bound = rad_volkmann_bound(delta).unwrap();
            ensure(ratio <= bound, || format!("graph {idx}: {ratio} > {bound}"))?;
            checked += 1;
        }
        Ok(format!("{checked} graphs with delta >= 3 within the bound"))
    })();
    verdict(
        8,
        "ratio within the piecewise degree bound",
        t,
        Duration::from_secs(120),
        outcome,
    );
}

#[test]
fn criterion_09_furuya_comparison() {
    let t = Instant::now();
    let outcome = (|| {
        for d in 3..=100 {
            let got = furuya_exceeds_half_delta(d).unwrap();
            ensure(got == (d != 4), || format!("delta = {d}: {got}"))?;
        }
        Ok("false only at delta = 4 on 3..100".into())
    })();
    verdict(
        9,
        "delta - 2 sqrt(delta) + 2 versus delta/2",
        t,
        Duration::from_secs(1),
        outcome,
    );
}

#[test]
fn criterion_10_cli_determinism() {
    let t = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let k33 = dir.path().join("k33.txt");
    std::fs::write(
        &k33,
        domkit::io::write_edge_list(&complete_bipartite(3).unwrap()),
    )
    .unwrap();
    let dset = dir.path().join("d.txt");
    std::fs::write(&dset, "0 3\n").unwrap();
    let (k33, dset) = (k33.to_str().unwrap(), dset.to_str().unwrap());

    let invocations: Vec<Vec<&str>> = vec![
        vec!["solve", "--input", k33],
        vec!["transform", "--input", k33, "--dominating-set", dset],
        vec!["generate", "complete-bipartite", "--m", "6"],
        vec!["generate", "double-star", "--s", "6"],
        vec!["generate", "corona", "--k", "1", "--s", "5"],
        vec!["generate", "cycle", "--n", "6"],
        vec![
            "generate",
            "random-bipartite",
            "--na",
            "8",
            "--nb",
            "8",
            "--edge-prob",
            "0.3",
            "--seed",
            "42",
        ],
        vec!["verify", "--count", "1000", "--max-n", "16", "--seed", "7"],
        vec![
            "sweep", "--k-min", "1", "--k-max", "2", "--s-min", "1", "--s-max", "7",
        ],
    ];
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_domkit"))
            .args(args)
            .env_remove("DOMKIT_ORACLE_CAP")
            .output()
            .unwrap()
    };
    let outcome = (|| {
        for args in &invocations {
            let a = run(args);
            let b = run(args);
            ensure(a.status.code() == Some(0), || {
                format!(
                    "{args:?} exited {:?}: {}",
                    a.status.code(),
                    String::from_utf8_lossy(&a.stderr)
                )
            })?;
            ensure(
                a.stdout == b.stdout && a.stderr == b.stderr && a.status == b.status,
                || format!("{args:?} not byte-identical"),
            )?;
        }
        Ok(format!("{} invocations byte-identical", invocations.len()))
    })();
    verdict(
        10,
        "CLI output is deterministic",
        t,
        Duration::from_secs(240),
        outcome,
    );
}
