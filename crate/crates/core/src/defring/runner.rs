//! The report runner: builds the claim list for the requested cases and
//! primes, executes the claims (optionally in parallel and under a per-claim
//! timeout), and assembles the deterministic report. Claims are independent
//! pure computations; aggregation order is fixed by claim id.

use super::claims;
use super::report::{ClaimResult, ClaimStatus, VerificationReport};
use super::{Corruption, DeformationCase};
use std::collections::BTreeMap;
use std::sync::mpsc;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub cases: Vec<DeformationCase>,
    pub primes: Vec<u64>,
    pub corruption: Option<Corruption>,
    pub jobs: usize,
    pub timeout: Option<Duration>,
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            cases: DeformationCase::ALL.to_vec(),
            primes: vec![3, 5, 7, 13],
            corruption: None,
            jobs: 1,
            timeout: None,
            timings: false,
        }
    }
}

type ClaimBody = Box<dyn FnOnce() -> Vec<ClaimResult> + Send + 'static>;
type CollectedResults = Vec<(usize, Vec<ClaimResult>)>;

struct ClaimSpec {
    id: String,
    anchor: String,
    run: ClaimBody,
}

fn spec(
    id: &str,
    anchor: &str,
    run: impl FnOnce() -> Vec<ClaimResult> + Send + 'static,
) -> ClaimSpec {
    ClaimSpec {
        id: id.to_string(),
        anchor: anchor.to_string(),
        run: Box::new(run) as ClaimBody,
    }
}

fn build_specs(opts: &RunOptions) -> Vec<ClaimSpec> {
    let corruption = opts.corruption;
    let mut specs = Vec::new();
    specs.push(spec("char0/identities", "congruence identities", move || {
        claims::identity_claims(corruption)
    }));
    specs.push(spec("char0/minor-ideal", "pairwise-dependence minors", move || {
        vec![claims::minor_ideal_claim(corruption)]
    }));
    specs.push(spec(
        "char0/ramified-chain",
        "ramified-case elimination chain",
        move || vec![claims::ramified_chain_claim(corruption)],
    ));
    for &p in &opts.primes {
        specs.push(spec(
            &format!("p{p:03}/decomposition-mod-p"),
            "mod-p decomposition",
            move || vec![claims::modp_decomposition_claim(p, corruption)],
        ));
        specs.push(spec(
            &format!("p{p:03}/graded-fibre-domain"),
            "graded special-fibre domain",
            move || vec![claims::graded_domain_claim(p, corruption)],
        ));
        for &case in &opts.cases {
            specs.push(spec(
                &format!("p{p:03}/{}/multiplicity-tangent-cone", case.slug()),
                "multiplicity, tangent-cone route",
                move || vec![claims::multiplicity_tangent_claim(case, p, corruption)],
            ));
            specs.push(spec(
                &format!("p{p:03}/{}/multiplicity-colength-replay", case.slug()),
                "multiplicity, colength route",
                move || vec![claims::multiplicity_replay_claim(case, p, corruption)],
            ));
            if case.is_unramified() {
                specs.push(spec(
                    &format!("p{p:03}/{}/annihilator-non-cm", case.slug()),
                    "failure of Cohen-Macaulayness",
                    move || vec![claims::annihilator_non_cm_claim(case, p, corruption)],
                ));
            }
            specs.push(spec(
                &format!("p{p:03}/{}/irreducible-generically-reduced", case.slug()),
                "irreducibility and generic reducedness",
                move || vec![claims::irreducible_reduced_claim(case, p, corruption)],
            ));
        }
    }
    specs
}

fn run_one(spec: ClaimSpec, timeout: Option<Duration>, timings: bool) -> Vec<ClaimResult> {
    let started = Instant::now();
    let mut results = match timeout {
        None => (spec.run)(),
        Some(limit) => {
            let (tx, rx) = mpsc::channel();
            let run = spec.run;
            std::thread::spawn(move || {
                let _ = tx.send(run());
            });
            match rx.recv_timeout(limit) {
                Ok(results) => results,
                Err(_) => {
                    // the worker thread is abandoned; it dies with the process
                    vec![ClaimResult {
                        claim_id: spec.id.clone(),
                        paper_anchor: spec.anchor.clone(),
                        status: ClaimStatus::Skipped,
                        witnesses: BTreeMap::from([(
                            "timeout".to_string(),
                            format!("exceeded {} ms", limit.as_millis()),
                        )]),
                        elapsed_ms: None,
                    }]
                }
            }
        }
    };
    if timings {
        let ms = started.elapsed().as_millis() as u64;
        for r in &mut results {
            r.elapsed_ms = Some(ms);
        }
    }
    results
}

/// Execute every claim for the requested cases and primes and aggregate the
/// deterministic report.
pub fn run_full_verification(opts: &RunOptions) -> VerificationReport {
    let specs = build_specs(opts);
    let jobs = opts.jobs.max(1);
    let mut collected: Vec<(usize, Vec<ClaimResult>)> = if jobs == 1 {
        specs
            .into_iter()
            .enumerate()
            .map(|(i, s)| (i, run_one(s, opts.timeout, opts.timings)))
            .collect()
    } else {
        let queue: Arc<Mutex<Vec<(usize, ClaimSpec)>>> =
            Arc::new(Mutex::new(specs.into_iter().enumerate().rev().collect()));
        let out: Arc<Mutex<CollectedResults>> = Arc::new(Mutex::new(Vec::new()));
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                let queue = Arc::clone(&queue);
                let out = Arc::clone(&out);
                let timeout = opts.timeout;
                let timings = opts.timings;
                scope.spawn(move || loop {
                    let item = queue.lock().unwrap().pop();
                    match item {
                        None => break,
                        Some((i, s)) => {
                            let r = run_one(s, timeout, timings);
                            out.lock().unwrap().push((i, r));
                        }
                    }
                });
            }
        });
        Arc::try_unwrap(out).unwrap().into_inner().unwrap()
    };
    collected.sort_by_key(|(i, _)| *i);
    let mut claims: Vec<ClaimResult> = collected.into_iter().flat_map(|(_, r)| r).collect();
    claims.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    VerificationReport::assemble(
        opts.cases.iter().map(|c| c.slug().to_string()).collect(),
        opts.primes.clone(),
        opts.corruption.map(|c| c.to_string()),
        claims,
    )
}
