//! Acceptance suite. Every criterion runs, prints one `[PASS]` or `[FAIL]`
//! line, and the test fails at the end if any criterion failed.
//!
//! Run with `cargo test -p edge-hosoya --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use edge_hosoya::chain::{build_graph, enumerate_chains, ChainSpec};
use edge_hosoya::indices::{edge_hyper_wiener, edge_hyper_wiener_in, edge_wiener, edge_wiener_in, to_hat, IndexError};
use edge_hosoya::oracle::{
    edge_hosoya_bruteforce, edge_hyper_wiener_direct, edge_wiener_direct, hat_edge_hosoya_bruteforce, line_graph,
    vertex_hosoya_bruteforce,
};
use edge_hosoya::poly::PolyError;
use edge_hosoya::polyacene::{beta_closed, delta_closed, delta_closed_plus_x3_reading, edge_hosoya_closed};
use edge_hosoya::recurrence::{chain_edge_hosoya, AnnelationCase, ChainState};
use edge_hosoya::report::Report;
use edge_hosoya::{edge_hosoya, Graph, Method, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let elapsed = start.elapsed();
    ensure!(elapsed < limit, "{what} took {elapsed:?}, limit {limit:?}");
    Ok(())
}

fn all_chains(max_h: usize) -> Vec<ChainSpec> {
    (1..=max_h).flat_map(|h| enumerate_chains(h).unwrap()).collect()
}

fn random_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2017);
    (0..100)
        .map(|_| {
            let n = rng.gen_range(2..=30);
            let extra = rng.gen_range(0..=(61 - n));
            Graph::random_connected(n, extra, &mut rng)
        })
        .collect()
}

fn mixed_corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = all_chains(7).iter().map(|s| build_graph(s).graph().clone()).collect();
    graphs.extend(random_corpus());
    graphs
}

fn poly(c: &[u64]) -> Polynomial {
    Polynomial::new(c.to_vec())
}

fn spec(text: &str) -> ChainSpec {
    text.parse().unwrap()
}

fn polyacene(h: usize) -> String {
    format!("{h}:{}", "S".repeat(h.saturating_sub(2)))
}

fn benzene_three_ways() -> Outcome {
    let expected = poly(&[6, 6, 6, 3]);
    for method in [Method::Oracle, Method::Recurrence, Method::ClosedForm] {
        let p = edge_hosoya(&spec("1"), method).map_err(|e| e.to_string())?;
        ensure!(p == expected, "{method}: {p}");
    }
    ensure!(edge_wiener(&expected) == Ok(27), "W_e");
    ensure!(edge_hyper_wiener(&expected) == Ok(42), "WW_e");
    Ok(())
}

fn naphthalene_golden() -> Outcome {
    let expected = poly(&[11, 14, 18, 16, 6, 1]);
    let g = build_graph(&spec("2"));
    for method in [Method::Oracle, Method::Recurrence, Method::ClosedForm] {
        let p = edge_hosoya(&spec("2"), method).map_err(|e| e.to_string())?;
        ensure!(p == expected, "{method}: {p}");
    }
    ensure!(edge_wiener(&expected) == Ok(127), "W_e");
    ensure!(edge_hyper_wiener(&expected) == Ok(239), "WW_e");
    ensure!(edge_wiener_direct(g.graph()) == Ok(127), "direct W_e");
    ensure!(edge_hyper_wiener_direct(g.graph()) == Ok(239), "direct WW_e");
    Ok(())
}

fn recurrence_on_all_small_chains() -> Outcome {
    let start = Instant::now();
    let chains = all_chains(7);
    ensure!(chains.len() == 365, "enumerated {} chains", chains.len());
    for s in &chains {
        let brute = edge_hosoya_bruteforce(build_graph(s).graph()).map_err(|e| e.to_string())?;
        let rec = chain_edge_hosoya(s).map_err(|e| e.to_string())?;
        ensure!(rec == brute, "{s}: recurrence {rec}, oracle {brute}");
    }
    within(start, Duration::from_secs(60), "365 chains")
}

fn hat_conversion() -> Outcome {
    let start = Instant::now();
    for g in mixed_corpus() {
        let he = edge_hosoya_bruteforce(&g).map_err(|e| e.to_string())?;
        let hat = hat_edge_hosoya_bruteforce(&g).map_err(|e| e.to_string())?;
        let converted = to_hat(&he, g.edge_count() as u64).map_err(|e| e.to_string())?;
        ensure!(converted == hat, "mismatch on\n{}", g.to_edge_list());
    }
    within(start, Duration::from_secs(60), "hat conversion corpus")
}

fn line_graph_identity() -> Outcome {
    for g in mixed_corpus() {
        let lg = line_graph(&g).map_err(|e| e.to_string())?;
        let lhs = vertex_hosoya_bruteforce(lg.graph()).map_err(|e| e.to_string())?;
        let rhs = edge_hosoya_bruteforce(&g).map_err(|e| e.to_string())?;
        ensure!(lhs == rhs, "mismatch on\n{}", g.to_edge_list());
    }
    Ok(())
}

fn closed_form_matches_linear_recurrence() -> Outcome {
    let start = Instant::now();
    let mut state = ChainState::initial();
    for h in 0..=500 {
        if h > 0 {
            state = state.step(AnnelationCase::Case2).map_err(|e| e.to_string())?;
            let closed = edge_hosoya_closed(h).map_err(|e| e.to_string())?;
            ensure!(closed == state.alpha, "H_e at h = {h}");
        }
        if [1, 2, 3, 250, 500].contains(&h) {
            let closed = edge_hosoya_closed(h).map_err(|e| e.to_string())?;
            let rec = chain_edge_hosoya(&spec(&polyacene(h))).map_err(|e| e.to_string())?;
            ensure!(closed == rec, "chain recurrence at h = {h}");
        }
        ensure!(beta_closed(h).as_ref() == Ok(&state.beta), "beta at h = {h}");
        ensure!(delta_closed(h).as_ref() == Ok(&state.delta), "delta at h = {h}");
    }
    within(start, Duration::from_secs(10), "h in 1..=500")
}

fn conservation() -> Outcome {
    for s in all_chains(7) {
        let p = chain_edge_hosoya(&s).map_err(|e| e.to_string())?;
        let m = 5 * s.hexagons() as u64 + 1;
        ensure!(p.coeff(0) == m, "{s}: constant term {}", p.coeff(0));
        ensure!(p.eval_at_one() == Ok(m * (m + 1) / 2), "{s}: H_e(1) = {:?}", p.eval_at_one());
    }
    for h in [1, 10, 100, 1000] {
        let p = edge_hosoya_closed(h).map_err(|e| e.to_string())?;
        let m = 5 * h as u64 + 1;
        ensure!(p.eval_at_one() == Ok(m * (m + 1) / 2), "L_{h}");
    }
    Ok(())
}

fn symmetry() -> Outcome {
    for s in all_chains(7) {
        let p = chain_edge_hosoya(&s).map_err(|e| e.to_string())?;
        for other in [s.mirrored(), s.reversed()] {
            let q = chain_edge_hosoya(&other).map_err(|e| e.to_string())?;
            let brute = edge_hosoya_bruteforce(build_graph(&other).graph()).map_err(|e| e.to_string())?;
            ensure!(q == p && brute == p, "{s} vs {other}");
        }
    }
    Ok(())
}

fn plus_x3_reading_is_rejected() -> Outcome {
    match delta_closed_plus_x3_reading(1) {
        Err(PolyError::NonZeroRemainder { .. }) => {}
        other => return Err(format!("h = 1 gave {other:?}")),
    }
    for h in 1..=20 {
        ensure!(delta_closed_plus_x3_reading(h).is_err(), "h = {h} divided exactly");
    }
    ensure!(delta_closed(1) == Ok(poly(&[1, 2, 2, 1])), "delta_1");
    Ok(())
}

fn performance() -> Outcome {
    let start = Instant::now();
    let closed = edge_hosoya_closed(10_000).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(1), "closed form at h = 10000")?;
    ensure!(closed.degree() == Some(20_001), "degree {:?}", closed.degree());

    let start = Instant::now();
    let rec = chain_edge_hosoya(&spec(&polyacene(2000))).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(5), "recurrence at h = 2000")?;
    ensure!(rec == edge_hosoya_closed(2000).map_err(|e| e.to_string())?, "h = 2000 disagreement");
    ensure!(rec.degree() == Some(4001), "degree {:?}", rec.degree());
    Ok(())
}

fn overflow_contract() -> Outcome {
    let last_fitting = edge_hosoya_closed(45_869).map_err(|e| e.to_string())?;
    let first_overflowing = edge_hosoya_closed(45_870).map_err(|e| e.to_string())?;
    ensure!(edge_hyper_wiener_in::<u64>(&last_fitting) == Ok(18_445_597_851_798_117_102), "h = 45869 in u64");
    ensure!(
        edge_hyper_wiener_in::<u64>(&first_overflowing) == Err(IndexError::Overflow(64)),
        "h = 45870 in u64 did not report overflow"
    );
    ensure!(edge_hyper_wiener(&first_overflowing) == Ok(18_447_206_425_391_078_005), "h = 45870 in u128");
    ensure!(edge_wiener_in::<u64>(&first_overflowing).is_ok(), "W_e should still fit");

    let bin = env!("CARGO_BIN_EXE_edge-hosoya");
    let run = |h: usize| {
        Command::new(bin)
            .args(["compute", &polyacene(h), "--method", "closed-form", "--index-width", "64", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let ok = run(45_869)?;
    ensure!(ok.status.code() == Some(0), "h = 45869 exit {:?}", ok.status.code());
    let report = Report::from_json(&String::from_utf8_lossy(&ok.stdout)).map_err(|e| e.to_string())?;
    ensure!(report.edge_hyper_wiener == "18445597851798117102", "reported {}", report.edge_hyper_wiener);
    let over = run(45_870)?;
    ensure!(over.status.code() == Some(3), "h = 45870 exit {:?}", over.status.code());
    ensure!(over.stdout.is_empty(), "overflowing run printed a result");
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("benzene agrees across oracle, recurrence and closed form", benzene_three_ways),
        ("naphthalene golden polynomial and indices", naphthalene_golden),
        ("recurrence equals oracle on all 365 chains with h <= 7", recurrence_on_all_small_chains),
        ("hat conversion matches brute force on chains and random graphs", hat_conversion),
        ("line-graph Hosoya equals edge-Hosoya", line_graph_identity),
        ("polyacene closed forms equal linear recurrence for h <= 500", closed_form_matches_linear_recurrence),
        ("H_e(1) = m(m+1)/2 and constant term m", conservation),
        ("mirror and reversal invariance for h <= 7", symmetry),
        ("+x^3 reading of delta leaves a remainder", plus_x3_reading_is_rejected),
        ("closed form at h = 10^4 and recurrence at h = 2000 within budget", performance),
        ("64-bit index overflow is reported, not wrapped", overflow_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("[PASS] {:>2} {name} ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
