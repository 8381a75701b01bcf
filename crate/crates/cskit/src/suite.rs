//! Seeded verification suites: randomized sweeps of the library's core
//! contracts, shared between the test harness and the command line.
//!
//! Every suite is deterministic in its seed; reports serialize stably so
//! repeated runs are byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::club::Club;
use crate::color::{
    adversary, check_suitable, chromatic_number, chromatic_number_bruteforce,
    coloring_number, extend_suitable, max_back_degree, neighborhood_witness, validate_nbr_witness,
    CaptureOutcome, Certificate, Coloring, PaletteSpec,
};
use crate::cseq::{check_coherence, CSequence, Relation};
use crate::forcing::{
    extension_lemma, generic_sample, leq, play_game, project_star, stage_schedule, validate,
    Condition, GameOutcome,
};
use crate::graph::{verify_in_neighborhood, verify_triangle_free, EdgeRule, GraphWindow};
use crate::ord::{CardinalTag, Ordinal};
use crate::postproc::{verify_postproc, PostprocFn, ZFamily};
use crate::rng::Rng;
use crate::window::Window;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub pass: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    pub seed: u64,
}

impl SuiteReport {
    fn new(name: &str, seed: u64) -> SuiteReport {
        SuiteReport {
            name: name.into(),
            pass: true,
            checked: 0,
            failures: Vec::new(),
            seed,
        }
    }

    fn fail(&mut self, msg: String) {
        self.pass = false;
        if self.failures.len() < 16 {
            self.failures.push(msg);
        }
    }
}

/// Sizes for the randomized sweeps; the defaults match the acceptance
/// thresholds.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteParams {
    pub corpus_specs: usize,
    pub chromatic_graphs: usize,
    pub coloring_graphs: usize,
    pub postproc_samples: usize,
    pub extension_runs: usize,
    pub projection_runs: usize,
    pub games: usize,
    pub generic_runs: usize,
    pub suitable_runs: usize,
    pub witness_windows: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            corpus_specs: 100,
            chromatic_graphs: 200,
            coloring_graphs: 100,
            postproc_samples: 500,
            extension_runs: 1000,
            projection_runs: 100,
            games: 100,
            generic_runs: 20,
            suitable_runs: 100,
            witness_windows: 50,
        }
    }
}

fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

// ---------------------------------------------------------------------------
// Random generators
// ---------------------------------------------------------------------------

fn random_budget(rng: &mut Rng) -> Ordinal {
    match rng.below(5) {
        0 => o("w*2"),
        1 => o("w*4"),
        2 => o("w^(2)"),
        3 => o("w^(2)*2"),
        _ => o("w^(3)"),
    }
}

/// A random club cofinal in the limit ordinal `at`.
fn random_club_in(at: &Ordinal, rng: &mut Rng) -> Club {
    if rng.chance(1, 4) {
        return Club::full_below(at.clone());
    }
    // Split the last CNF term: at = b + w^e.
    let mut terms = at.terms().to_vec();
    let (e, c) = terms.pop().expect("limit is nonzero");
    if c > 1 {
        terms.push((e.clone(), c - 1));
    }
    let b = Ordinal::from_terms(terms);
    match e.pred() {
        Some(ep) => {
            let unit = Ordinal::omega_pow(ep);
            let k = 1 + rng.below(3);
            let step = unit.mul(&Ordinal::from_nat(k));
            let base = b.add(&unit.mul(&Ordinal::from_nat(rng.below(2))));
            let tail = Club::arithmetic(base, step, Ordinal::omega());
            if rng.chance(1, 3) {
                // stack an explicit head below the tail's first member
                let head: Vec<Ordinal> = (0..rng.below(3))
                    .map(|i| b.add(&Ordinal::from_nat(i)))
                    .filter(|x| x < &tail.min_or_zero())
                    .collect();
                Club::from_members(head).union(&tail).unwrap_or(tail)
            } else {
                tail
            }
        }
        None => Club::fundamental(at).expect("limit"),
    }
}

/// A random C-sequence spec: canonical or full default with a few random
/// overrides at limits below the budget.
fn random_cseq(rng: &mut Rng) -> CSequence {
    let budget = random_budget(rng);
    let mut vec = if rng.chance(1, 2) {
        CSequence::canonical(budget.clone()).unwrap()
    } else {
        CSequence::full(budget.clone()).unwrap()
    };
    let (limits, _) = Window::upto(budget.clone()).with_cap(24).limit_points();
    let overrides = rng.below(4);
    for _ in 0..overrides {
        if limits.is_empty() {
            break;
        }
        let at = rng.pick(&limits).clone();
        let club = random_club_in(&at, rng);
        if let Ok(v) = vec.clone().with_override(at, club) {
            vec = v;
        }
    }
    vec
}

/// A random window for a budget, with a bounded vertex lattice.
fn random_window(budget: &Ordinal, rng: &mut Rng, max_vertices: usize) -> (Window, Vec<Ordinal>) {
    let lo = if rng.chance(1, 3) {
        o("w").mul(&Ordinal::from_nat(rng.below(3)))
    } else {
        Ordinal::zero()
    };
    let hi = budget.clone();
    let window = Window::new(lo, hi).with_cap(16 + rng.usize_below(24));
    let run = 2 + rng.usize_below(5);
    let mut verts = window.vertex_lattice(run);
    verts.truncate(max_vertices);
    (window, verts)
}

fn random_graph(rng: &mut Rng, max_n: usize, density_num: u64, density_den: u64) -> GraphWindow {
    let n = 2 + rng.usize_below(max_n - 1);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(density_num, density_den) {
                edges.push((i, j));
            }
        }
    }
    let vertices = (0..n as u64).map(Ordinal::from_nat).collect();
    GraphWindow::foreign(vertices, &edges)
}

/// A random condition built by a few extension steps from the empty one.
fn random_condition(rng: &mut Rng, budget: &Ordinal, chi: &CardinalTag) -> Condition {
    let mut p = Condition::empty(chi.clone());
    for _ in 0..rng.below(3) {
        let t = random_cofinal_target(rng, budget);
        let sigma = 1 + rng.below(2);
        if let Ok(q) = extension_lemma(&p, &t, sigma, budget) {
            p = q;
        }
    }
    p
}

fn random_cofinal_target(rng: &mut Rng, budget: &Ordinal) -> Club {
    match rng.below(4) {
        0 => Club::full_below(budget.clone()),
        1 => {
            // successor ordinals below the budget
            Club::full_below(budget.clone()).nacc().suffix(&o("1"))
        }
        2 => {
            // the k-th successor of every limit
            let off = Ordinal::from_nat(1 + rng.below(3));
            Club::arithmetic_offset(o("w"), o("w"), budget.count_limits_below(), off)
        }
        _ => {
            // limit ordinals from some point on
            Club::arithmetic(o("w"), o("w"), budget.count_limits_below())
        }
    }
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Triangle-freeness of C-sequence graph windows, plus the neighborhood
/// coincidence and the chromatic-vs-coloring comparison on the same corpus.
pub fn suite_cseq_graph_corpus(seed: u64, params: &SuiteParams) -> Vec<SuiteReport> {
    let mut rng = Rng::new(seed ^ 0x7160);
    let mut tri = SuiteReport::new("triangle_free", seed);
    let mut nbr = SuiteReport::new("neighborhood", seed);
    let mut cmp = SuiteReport::new("chr_le_col", seed);
    for _ in 0..params.corpus_specs {
        let vec = random_cseq(&mut rng);
        let budget = vec.budget().clone();
        let (window, verts) = random_window(&budget, &mut rng, 200);
        let rule = EdgeRule::CSeq(vec);
        let g = match GraphWindow::build(&rule, &verts) {
            Ok(g) => g,
            Err(e) => {
                tri.fail(format!("window build failed: {e}"));
                continue;
            }
        };
        tri.checked += 1;
        if let Some(t) = verify_triangle_free(&g) {
            tri.fail(format!("triangle {t:?} in a derived window"));
        }
        // neighborhood coincidence for every vertex in the window
        for b in &g.vertices {
            nbr.checked += 1;
            match verify_in_neighborhood(&rule, b, &window) {
                Ok(true) => {}
                Ok(false) => nbr.fail(format!("neighborhood mismatch at {b}")),
                Err(e) => nbr.fail(format!("neighborhood undecidable at {b}: {e}")),
            }
        }
        // chromatic never exceeds coloring number
        cmp.checked += 1;
        match chromatic_number(&g) {
            Ok((chr, _)) => {
                let (col, _) = coloring_number(&g);
                if chr > col {
                    cmp.fail(format!("chr {chr} > col {col} on a window of {} vertices", g.n()));
                }
            }
            Err(e) => cmp.fail(format!("chromatic solver error: {e}")),
        }
    }
    vec![tri, nbr, cmp]
}

/// Exact chromatic solver against the plain backtracking oracle.
pub fn suite_chromatic_oracle(seed: u64, params: &SuiteParams) -> SuiteReport {
    let mut rng = Rng::new(seed ^ 0xc401);
    let mut rep = SuiteReport::new("chromatic_oracle", seed);
    for _ in 0..params.chromatic_graphs {
        let dn = 1 + rng.below(2);
        let g = random_graph(&mut rng, 9, dn, 3);
        rep.checked += 1;
        let exact = chromatic_number(&g).unwrap().0;
        let oracle = chromatic_number_bruteforce(&g);
        if exact != oracle {
            rep.fail(format!("chromatic {exact} != oracle {oracle} on {g:?}"));
        }
    }
    rep
}

/// Degeneracy+1 against the all-orderings oracle.
pub fn suite_coloring_oracle(seed: u64, params: &SuiteParams) -> SuiteReport {
    let mut rng = Rng::new(seed ^ 0xc01);
    let mut rep = SuiteReport::new("coloring_oracle", seed);
    for _ in 0..params.coloring_graphs {
        let g = random_graph(&mut rng, 7, 1, 2);
        rep.checked += 1;
        let (k, _) = coloring_number(&g);
        let n = g.n();
        let mut best = usize::MAX;
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let order: Vec<Ordinal> = perm.iter().map(|&i| g.vertices[i].clone()).collect();
            best = best.min(max_back_degree(&g, &order));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        if k != best + 1 {
            rep.fail(format!("coloring number {k} != oracle {} on {g:?}", best + 1));
        }
    }
    rep
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Sample clubs for the postprocessing sweeps.
fn random_k_club(rng: &mut Rng) -> Club {
    match rng.below(5) {
        0 => Club::arithmetic(
            Ordinal::from_nat(rng.below(5)),
            Ordinal::from_nat(1 + rng.below(4)),
            Ordinal::omega(),
        ),
        1 => Club::full_below(o("w").mul(&Ordinal::from_nat(1 + rng.below(3)))),
        2 => Club::fundamental(&o("w^(2)")).unwrap(),
        3 => {
            // stacked: evens, then the limit, then a shifted tail
            let k = 1 + rng.below(2);
            let lim = o("w").mul(&Ordinal::from_nat(k));
            Club::arithmetic(o("0"), o("2"), Ordinal::omega())
                .union(&Club::singleton(o("w")))
                .unwrap()
                .union(&Club::arithmetic(
                    lim.add(&Ordinal::one()),
                    Ordinal::from_nat(1 + rng.below(3)),
                    Ordinal::omega(),
                ))
                .unwrap()
        }
        _ => Club::fundamental(&o("w^(3)")).unwrap(),
    }
}

/// Postprocessing axioms for the trim, guide-set, and replacement
/// transformers and their compositions.
pub fn suite_postproc(seed: u64, params: &SuiteParams) -> SuiteReport {
    let mut rng = Rng::new(seed ^ 0x9057);
    let mut rep = SuiteReport::new("postproc_axioms", seed);
    let mut samples: Vec<(Club, Window)> = Vec::new();
    while samples.len() * 4 < params.postproc_samples {
        let x = random_k_club(&mut rng);
        if !x.in_k_class() {
            continue;
        }
        let hi = x.sup().succ();
        samples.push((x, Window::upto(hi).with_cap(40)));
    }
    let b_guides = [
        Club::arithmetic(o("0"), o("2"), Ordinal::omega()),
        Club::full_below(o("w^(2)")),
        Club::arithmetic(o("0"), o("4"), Ordinal::omega()),
    ];
    let mut z_table = BTreeMap::new();
    z_table.insert(o("4"), Club::from_members(vec![o("3")]));
    z_table.insert(o("w+2"), Club::from_members(vec![o("w+1")]));
    let phis: Vec<(String, PostprocFn)> = vec![
        ("xi_2".into(), PostprocFn::Xi(o("2"))),
        ("xi_w".into(), PostprocFn::Xi(o("w"))),
        ("b_evens".into(), PostprocFn::B(b_guides[0].clone())),
        ("b_full".into(), PostprocFn::B(b_guides[1].clone())),
        ("z_table".into(), PostprocFn::Z(ZFamily::from_table(z_table.clone()))),
        (
            "compose_z_xi".into(),
            PostprocFn::Compose(vec![
                PostprocFn::Z(ZFamily::from_table(z_table.clone())),
                PostprocFn::Xi(o("1")),
            ]),
        ),
        (
            "compose_b_xi".into(),
            PostprocFn::Compose(vec![
                PostprocFn::B(b_guides[2].clone()),
                PostprocFn::Xi(o("2")),
            ]),
        ),
    ];
    for (name, phi) in &phis {
        match verify_postproc(phi, &samples) {
            Ok(r) => {
                rep.checked += r.checked;
                for f in &r.failures {
                    rep.fail(format!("{name}: sup {} fails {:?}", f.sup, f.failures));
                }
                if name.starts_with("z_") && !r.all_acc_preserving {
                    rep.fail(format!("{name}: replacement transformer not acc-preserving"));
                }
            }
            Err(e) => rep.fail(format!("{name}: undecidable sweep: {e}")),
        }
    }
    rep
}

/// Extension contracts: validity, top end-extension, and target hits.
pub fn suite_extension(seed: u64, params: &SuiteParams) -> SuiteReport {
    let mut rng = Rng::new(seed ^ 0xe87e);
    let mut rep = SuiteReport::new("extension_contracts", seed);
    let budget = o("w^(2)");
    let chi = CardinalTag::Aleph0;
    for _ in 0..params.extension_runs {
        let p = random_condition(&mut rng, &budget, &chi);
        let a = random_cofinal_target(&mut rng, &budget);
        let sigma = 1 + rng.below(3);
        let q = match extension_lemma(&p, &a, sigma, &budget) {
            Ok(q) => q,
            Err(e) => {
                rep.fail(format!("extension failed: {e}"));
                continue;
            }
        };
        rep.checked += 1;
        let vr = validate(&q).unwrap();
        if !vr.is_valid() {
            rep.fail(format!("extension output invalid: {vr:?}"));
            continue;
        }
        if !leq(&q, &p, true).unwrap() {
            rep.fail("extension does not star-extend its input".into());
            continue;
        }
        // suc_sigma of the new top above the old gamma lies in the target
        let top = q.club_at(q.gamma().unwrap());
        let above = match p.gamma() {
            Some(g) => top.suffix(g),
            None => top,
        };
        let (hits, _) = above.suc_sigma(sigma).prefix(sigma as usize);
        if hits.len() != sigma as usize || hits.iter().any(|x| !a.contains(x)) {
            rep.fail(format!("target misses: {hits:?}"));
        }
    }
    rep
}

/// Projection contracts on random pairs.
pub fn suite_projection(seed: u64, params: &SuiteParams) -> SuiteReport {
    let mut rng = Rng::new(seed ^ 0x9207);
    let mut rep = SuiteReport::new("projection_contracts", seed);
    let budget = o("w^(2)");
    let chi = CardinalTag::Aleph0;
    for _ in 0..params.projection_runs {
        let s0 = random_condition(&mut rng, &budget, &chi);
        let mut s1 = s0.clone();
        for _ in 0..rng.below(3) {
            let t = random_cofinal_target(&mut rng, &budget);
            if let Ok(q) = extension_lemma(&s1, &t, 1 + rng.below(2), &budget) {
                s1 = q;
            }
        }
        let s2 = match project_star(&s0, &s1) {
            Ok(s2) => s2,
            Err(e) => {
                rep.fail(format!("projection failed: {e}"));
                continue;
            }
        };
        rep.checked += 1;
        if !validate(&s2).unwrap().is_valid() {
            rep.fail("projected condition invalid".into());
        }
        if !leq(&s2, &s0, true).unwrap() {
            rep.fail("s2 does not star-extend s0".into());
        }
        if !leq(&s2, &s1, false).unwrap() {
            rep.fail("s2 does not extend s1".into());
        }
    }
    rep
}

/// Game safety: the chain strategy survives adversarial extension play.
pub fn suite_game(seed: u64, params: &SuiteParams) -> SuiteReport {
    let mut rng = Rng::new(seed ^ 0x6a3e);
    let mut rep = SuiteReport::new("game_safety", seed);
    for _ in 0..params.games {
        let budget = o("w^(3)");
        let stages = 6 + 2 * rng.usize_below(18); // up to 40 stages
        let schedule = stage_schedule(stages);
        let mut arng = Rng::new(rng.next_u64());
        let outcome = play_game(&schedule, CardinalTag::Aleph0, &budget, |last, _idx| {
            if arng.chance(1, 5) {
                Ok(last.clone()) // a legal stalling move
            } else {
                let t = random_cofinal_target(&mut arng, &budget);
                extension_lemma(last, &t, 1 + arng.below(2), &budget)
            }
        });
        rep.checked += 1;
        match outcome {
            Ok(t) => match t.outcome {
                GameOutcome::IiWins | GameOutcome::ILoses { .. } => {}
                GameOutcome::IiLoses { at, reason } => {
                    rep.fail(format!("II lost at stage {at}: {reason}"));
                }
            },
            Err(e) => rep.fail(format!("game error: {e}")),
        }
    }
    rep
}

/// Generic sampler: coherence plus certified capture at every logged point.
pub fn suite_generic(seed: u64, params: &SuiteParams) -> SuiteReport {
    let mut rng = Rng::new(seed ^ 0x6e2c);
    let mut rep = SuiteReport::new("generic_capture", seed);
    let budget = o("w^(2)");
    for _ in 0..params.generic_runs {
        let targets: Vec<Club> = vec![
            Club::full_below(budget.clone()).nacc().suffix(&o("1")),
            Club::arithmetic_offset(o("w"), o("w"), o("w"), Ordinal::from_nat(2 + rng.below(3))),
            Club::arithmetic(o("w"), o("w"), o("w")),
            Club::full_below(budget.clone()),
        ];
        let (vec, log) = match generic_sample(&budget, &targets, &[], 2, 3, CardinalTag::Aleph0) {
            Ok(r) => r,
            Err(e) => {
                rep.fail(format!("sampler failed: {e}"));
                continue;
            }
        };
        rep.checked += 1;
        if log.is_empty() {
            rep.fail("empty capture log".into());
            continue;
        }
        for entry in &log {
            match &entry.outcome {
                CaptureOutcome::Captured { cert } => {
                    // re-certify independently
                    if !revalidate_capture(&vec, cert, &targets) {
                        rep.fail(format!("capture certificate at {} fails revalidation", entry.at));
                    }
                }
                CaptureOutcome::NotCaptured { reason } => {
                    rep.fail(format!("closure at {} not captured: {reason}", entry.at));
                }
            }
        }
        let coh = check_coherence(
            &vec,
            Relation::SqChi(CardinalTag::Aleph0),
            &Window::upto(budget.clone()).with_cap(24),
        );
        if !coh.violations.is_empty() || !coh.undecidable.is_empty() {
            rep.fail(format!("sampled sequence incoherent: {:?}", coh.violations));
        }
    }
    rep
}

/// Independent membership-query revalidation of a capture certificate.
pub fn revalidate_capture(vec: &CSequence, cert: &Certificate, targets: &[Club]) -> bool {
    let Certificate::Capture { delta, pairs } = cert else {
        return false;
    };
    let cd = vec.club_at(delta);
    if cd.min_or_zero() < targets[0].min_or_zero() {
        return false;
    }
    pairs.iter().all(|(i, iota)| {
        let Ok(x0) = cd.index(iota) else { return false };
        let Ok(x1) = cd.index(&iota.succ()) else { return false };
        targets[*i].contains(&x0) && targets[*i].contains(&x1)
    })
}

/// Suitable-extension contracts on random windows.
pub fn suite_suitable(seed: u64, params: &SuiteParams) -> SuiteReport {
    let mut rng = Rng::new(seed ^ 0x5017);
    let mut rep = SuiteReport::new("suitable_extension", seed);
    for _ in 0..params.suitable_runs {
        let vec = random_cseq(&mut rng);
        let budget = vec.budget().clone();
        let (window, mut pts) = random_window(&budget, &mut rng, 30);
        pts.retain(|p| *p < budget);
        let palette = match rng.below(3) {
            0 => PaletteSpec::Tail(1),
            1 => PaletteSpec::ExplicitInfinite { base: 0, step: 2 },
            _ => PaletteSpec::Tail(0),
        };
        let base = Coloring::empty(palette.clone());
        let c = match extend_suitable(&vec, &base, &budget, &pts, &palette) {
            Ok(c) => c,
            Err(e) => {
                rep.fail(format!("extension failed: {e}"));
                continue;
            }
        };
        rep.checked += 1;
        if !c.extends(&base) {
            rep.fail("output does not extend its input".into());
        }
        for p in &pts {
            match c.get(p) {
                Some(col) => {
                    if !palette.contains(col) {
                        rep.fail(format!("color {col} at {p} outside the palette"));
                    }
                }
                None => rep.fail(format!("window point {p} left uncolored")),
            }
        }
        match check_suitable(&vec, &c, &window, &CardinalTag::Aleph0) {
            Ok(Certificate::Proper) => {}
            Ok(other) => rep.fail(format!("not suitable: {other:?}")),
            Err(e) => rep.fail(format!("suitability undecidable: {e}")),
        }
        match adversary(&vec, &c, &window, 64) {
            Ok(None) => {}
            Ok(Some(e)) => rep.fail(format!("adversary found {e:?}")),
            Err(e) => rep.fail(format!("adversary error: {e}")),
        }
    }
    rep
}

/// Witness soundness on crafted windows: every produced witness
/// revalidates and forces the coloring number above mu.
pub fn suite_witness(seed: u64, params: &SuiteParams) -> SuiteReport {
    let mut rng = Rng::new(seed ^ 0x3141);
    let mut rep = SuiteReport::new("witness_soundness", seed);
    for k in 0..params.witness_windows {
        let mu = 2 + rng.usize_below(3);
        let (a_side, b_side) = if k == 0 {
            (3usize, 4usize) // the canonical bipartite case
        } else {
            (mu, mu + 1 + rng.usize_below(3))
        };
        let mu = if k == 0 { 3 } else { mu };
        let n = a_side + b_side + rng.usize_below(3);
        let mut edges = Vec::new();
        for i in 0..a_side {
            for j in a_side..a_side + b_side {
                edges.push((i, j));
            }
        }
        let vertices = (0..n as u64).map(Ordinal::from_nat).collect();
        let g = GraphWindow::foreign(vertices, &edges);
        rep.checked += 1;
        match neighborhood_witness(&g, mu) {
            Some(cert) => {
                if !validate_nbr_witness(&g, &cert) {
                    rep.fail(format!("witness fails revalidation on K_{a_side},{b_side}"));
                }
                let (col, _) = coloring_number(&g);
                if col <= mu {
                    rep.fail(format!("witness exists but col {col} <= mu {mu}"));
                }
            }
            None => rep.fail(format!("no witness found on K_{a_side},{b_side} with mu {mu}")),
        }
    }
    rep
}

/// Runs every suite, fanning the independent ones out across threads;
/// report assembly is deterministic (sorted by suite name).
pub fn run_all(seed: u64, params: &SuiteParams) -> Vec<SuiteReport> {
    let singles: Vec<fn(u64, &SuiteParams) -> SuiteReport> = vec![
        suite_chromatic_oracle,
        suite_coloring_oracle,
        suite_postproc,
        suite_extension,
        suite_projection,
        suite_game,
        suite_generic,
        suite_suitable,
        suite_witness,
    ];
    let mut out = std::thread::scope(|scope| {
        let corpus = scope.spawn(|| suite_cseq_graph_corpus(seed, params));
        let handles: Vec<_> = singles
            .iter()
            .map(|f| scope.spawn(move || f(seed, params)))
            .collect();
        let mut out = corpus.join().expect("suite thread");
        for h in handles {
            out.push(h.join().expect("suite thread"));
        }
        out
    });
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}
