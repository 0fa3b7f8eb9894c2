//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use chordfree::coloring::{
    chi_e, chi_star_e, color_constructive, exact_equitable, exact_list_coloring, extend_coloring,
    list_color_constructive, random_uniform_lists, validate_coloring, validate_list_coloring,
    ConstructiveOptions,
};
use chordfree::config::{builtin_catalog, configuration_h, find_reducible_set, match_configuration, FindOptions};
use chordfree::corpus::{random_plane_graph, Fixture};
use chordfree::degeneracy::degeneracy_ordering;
use chordfree::discharging::{
    apply_ruleset, initial_charges, ChargeScalar, Element, RuleTable, Scheme,
};
use chordfree::graph::{Adjacency, PlaneGraph, SimpleGraph, VertexId};
use chordfree::structure::{classify_faces_and_vertices, find_chordal_cycles};
use chordfree::Charge;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Proper, colors in `1..=k`, class sizes within one of each other.
fn equitable_by_hand(g: &impl Adjacency, colors: &[usize], k: usize) -> bool {
    if colors.len() != g.vertex_count() || colors.iter().any(|&c| c == 0 || c > k) {
        return false;
    }
    let mut sizes = vec![0usize; k];
    for &c in colors {
        sizes[c - 1] += 1;
    }
    let spread = sizes.iter().max().unwrap() - sizes.iter().min().unwrap();
    spread <= 1 && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

fn outside_counts(g: &impl Adjacency, order: &[VertexId]) -> Vec<usize> {
    let inside: BTreeSet<VertexId> = order.iter().copied().collect();
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|w| !inside.contains(w)).count())
        .collect()
}

fn reducible_by_hand(g: &impl Adjacency, order: &[VertexId], k: usize) -> bool {
    let distinct: BTreeSet<VertexId> = order.iter().copied().collect();
    order.len() == k
        && distinct.len() == k
        && outside_counts(g, order)
            .iter()
            .enumerate()
            .all(|(i, &c)| c <= k - (i + 1))
}

fn scheme_for(table: &str) -> Scheme {
    if table == "D" {
        Scheme::A
    } else {
        Scheme::B
    }
}

fn final_face_charge(g: &PlaneGraph, table: &str, degrees: &[usize]) -> Result<(Charge, Charge), String> {
    let mut want = degrees.to_vec();
    want.sort_unstable();
    let f = g
        .faces()
        .iter()
        .find(|f| {
            let mut d: Vec<usize> = f.walk.iter().map(|&v| g.degree(v)).collect();
            d.sort_unstable();
            d == want
        })
        .ok_or_else(|| format!("no {degrees:?} face"))?
        .id;
    let classes = classify_faces_and_vertices(g);
    let ledger = initial_charges::<Charge>(g, scheme_for(table)).map_err(|e| e.to_string())?;
    let table = RuleTable::builtin(table).map_err(|e| e.to_string())?;
    let ledger = apply_ruleset(g, &classes, ledger, &table).map_err(|e| e.to_string())?;
    Ok((
        ledger.initial(Element::Face(f)).clone(),
        ledger.final_charge(Element::Face(f)).clone(),
    ))
}

fn fixture<'a>(all: &'a [Fixture], name: &str) -> Result<&'a PlaneGraph, String> {
    all.iter()
        .find(|f| f.name == name)
        .map(|f| &f.graph)
        .ok_or_else(|| format!("fixture {name} missing"))
}

fn charge_identities(all: &[Fixture]) -> Outcome {
    ensure(all.len() >= 30, || format!("only {} fixtures", all.len()))?;
    let start = Instant::now();
    let mut checked = 0;
    for f in all {
        for scheme in [Scheme::A, Scheme::B] {
            let ledger = initial_charges::<Charge>(&f.graph, scheme).map_err(|e| e.to_string())?;
            let want = Charge::from_int(scheme.component_total());
            for (c, total) in ledger.initial_component_totals(&f.graph).iter().enumerate() {
                ensure(*total == want, || {
                    format!("{} scheme {scheme} component {c}: {total}", f.name)
                })?;
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{} fixtures, {checked} component totals, {elapsed:?}", all.len()))
}

fn conservation(all: &[Fixture]) -> Outcome {
    let mut runs = 0;
    for f in all {
        let classes = classify_faces_and_vertices(&f.graph);
        for id in RuleTable::builtin_ids() {
            let table = RuleTable::builtin(id).map_err(|e| e.to_string())?;
            let run = || -> Result<_, String> {
                let ledger = initial_charges::<Charge>(&f.graph, scheme_for(id))
                    .map_err(|e| e.to_string())?;
                apply_ruleset(&f.graph, &classes, ledger, &table).map_err(|e| e.to_string())
            };
            let (a, b) = (run()?, run()?);
            ensure(a.final_total() == a.initial_total(), || {
                format!("{} {id}: {} -> {}", f.name, a.initial_total(), a.final_total())
            })?;
            ensure(a == b, || format!("{} {id}: ledger differs between runs", f.name))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} fixture/ruleset runs conserved and repeatable"))
}

fn spot_values(all: &[Fixture]) -> Outcome {
    let zero = Charge::from_int(0);
    let (i, f) = final_face_charge(fixture(all, "triangle-444")?, "D", &[4, 4, 4])?;
    ensure(i == Charge::from_int(-3) && f == zero, || format!("(4,4,4) under D: {i} -> {f}"))?;
    let (i, f) = final_face_charge(fixture(all, "triangle-555")?, "R1", &[5, 5, 5])?;
    ensure(i == Charge::from_int(-4) && f == zero, || format!("(5,5,5) under R6: {i} -> {f}"))?;
    let (i, q) = final_face_charge(fixture(all, "quad-3366")?, "R1", &[3, 3, 6, 6])?;
    ensure(i == Charge::from_int(-2) && q >= zero, || format!("(3,3,6,6) under R5: {i} -> {q}"))?;
    Ok(format!("(4,4,4): -3 -> 0, (5,5,5): -4 -> 0, (3,3,6,6): -2 -> {q}"))
}

fn four_degenerate(all: &[Fixture]) -> Outcome {
    let (mut checked, mut oracle) = (0, 0);
    for f in all {
        let g = &f.graph;
        if !find_chordal_cycles(g, 4).map_err(|e| e.to_string())?.is_empty() {
            continue;
        }
        let cert = degeneracy_ordering(g);
        let mut pos = vec![0; g.vertex_count()];
        for (i, &v) in cert.ordering.iter().enumerate() {
            pos[v] = i;
        }
        let back = cert
            .ordering
            .iter()
            .enumerate()
            .map(|(i, &v)| g.neighbors(v).iter().filter(|&&w| pos[w] > i).count())
            .max()
            .unwrap_or(0);
        ensure(back <= 4 && back == cert.degeneracy, || {
            format!("{}: degeneracy {} back-degree {back}", f.name, cert.degeneracy)
        })?;
        if g.vertex_count() <= 10 {
            let exact = common::subset_degeneracy(g);
            ensure(exact == cert.degeneracy, || {
                format!("{}: smallest-last {} subset oracle {exact}", f.name, cert.degeneracy)
            })?;
            oracle += 1;
        }
        checked += 1;
    }
    Ok(format!("{checked} fixtures at most 4-degenerate, {oracle} cross-checked by subsets"))
}

fn reducible_sets(all: &[Fixture]) -> Outcome {
    let catalog = builtin_catalog();
    let mut checked = 0;
    let mut slowest = Duration::ZERO;
    for f in all.iter().filter(|f| f.expected.member) {
        let g = &f.graph;
        if g.component_sizes().iter().all(|&s| s < 5) {
            continue;
        }
        let k = 7.max(g.max_degree());
        let start = Instant::now();
        let cert = find_reducible_set(g, k, &catalog, &FindOptions::default())
            .ok_or_else(|| format!("{}: no reducible set for k = {k}", f.name))?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure(elapsed < Duration::from_secs(5), || format!("{}: {elapsed:?}", f.name))?;
        ensure(reducible_by_hand(g, &cert.set.vertices, k), || {
            format!("{}: certificate {:?} fails", f.name, cert.set.vertices)
        })?;
        let out = color_constructive(g, k, &ConstructiveOptions::default())
            .map_err(|e| format!("{}: {e}", f.name))?;
        ensure(out.anomalies.is_empty(), || format!("{}: {:?}", f.name, out.anomalies))?;
        checked += 1;
    }
    Ok(format!("{checked} member fixtures certified, slowest {slowest:?}, 0 anomalies"))
}

fn constructive_vs_exact(all: &[Fixture]) -> Outcome {
    let mut runs = 0;
    for f in all.iter().filter(|f| f.expected.member && f.graph.vertex_count() <= 14) {
        let g = &f.graph;
        let low = 7.max(g.max_degree());
        let ks: BTreeSet<usize> = (low..=g.max_degree() + 2).chain([low]).collect();
        for k in ks {
            let out = color_constructive(g, k, &ConstructiveOptions::default())
                .map_err(|e| format!("{} k={k}: {e}", f.name))?;
            ensure(
                validate_coloring(g, &out.coloring.colors, k).is_ok()
                    && equitable_by_hand(g, &out.coloring.colors, k),
                || format!("{} k={k}: invalid coloring", f.name),
            )?;
            let exact = exact_equitable(g, k).map_err(|e| e.to_string())?;
            ensure(exact.is_some(), || format!("{} k={k}: exact solver disagrees", f.name))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} (fixture, k) pairs agree"))
}

fn list_colorings(all: &[Fixture]) -> Outcome {
    let mut runs = 0;
    for f in all.iter().filter(|f| f.expected.member && f.graph.vertex_count() <= 12) {
        let g = &f.graph;
        let n = g.vertex_count();
        let k = 7.max(g.max_degree());
        for seed in 0..100 {
            let lists = random_uniform_lists(n, k, 3 * k, seed);
            let out = list_color_constructive(g, &lists, &ConstructiveOptions::default())
                .map_err(|e| format!("{} seed {seed}: {e}", f.name))?;
            let colors = &out.coloring.colors;
            let cap = n.div_ceil(k);
            let in_lists = (0..n).all(|v| lists.lists[v].contains(&colors[v]));
            let proper = g.edges().iter().all(|&(u, v)| colors[u] != colors[v]);
            let capped = colors.iter().all(|c| colors.iter().filter(|&d| d == c).count() <= cap);
            ensure(
                in_lists && proper && capped
                    && validate_list_coloring(g, colors, &lists.lists, k).is_ok(),
                || format!("{} seed {seed}: invalid list coloring", f.name),
            )?;
            runs += 1;
        }
    }
    Ok(format!("{runs} list assignments colored, 0 failures"))
}

fn complete_bipartite() -> Outcome {
    let k33 = SimpleGraph::complete_bipartite(3, 3);
    let three = exact_equitable(&k33, 3).map_err(|e| e.to_string())?;
    ensure(three.is_none(), || "K3,3 has an equitable 3-coloring".into())?;
    ensure(!common::brute_equitable(&k33, 3), || "brute force finds a 3-coloring".into())?;
    let ce = chi_e(&k33).map_err(|e| e.to_string())?;
    let cs = chi_star_e(&k33).map_err(|e| e.to_string())?.value;
    ensure(ce == 2 && cs == 4, || format!("chi_e = {ce}, chi*_e = {cs}"))?;
    Ok("chi_e(K3,3) = 2, chi*_e(K3,3) = 4, k = 3 infeasible".into())
}

fn delta_plus_one(all: &[Fixture]) -> Outcome {
    let (mut plain, mut lists) = (0, 0);
    for f in all.iter().filter(|f| f.graph.vertex_count() <= 12) {
        let g = &f.graph;
        let k = g.max_degree() + 1;
        let c = exact_equitable(g, k)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{}: no equitable {k}-coloring", f.name))?;
        ensure(equitable_by_hand(g, &c.colors, k), || format!("{}: invalid", f.name))?;
        plain += 1;
        if g.max_degree() <= 3 && g.vertex_count() <= 10 {
            for seed in 0..20 {
                let l = random_uniform_lists(g.vertex_count(), k, 2 * k, seed);
                let found = exact_list_coloring(g, &l, 20)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| format!("{} seed {seed}: no list coloring", f.name))?;
                ensure(validate_list_coloring(g, &found.colors, &l.lists, k).is_ok(), || {
                    format!("{} seed {seed}: invalid list coloring", f.name)
                })?;
                lists += 1;
            }
        }
    }
    Ok(format!("{plain} fixtures (Δ+1)-colorable, {lists} list assignments colored"))
}

fn matcher_equivalence(all: &[Fixture]) -> Outcome {
    let h = configuration_h();
    let mut checked = 0;
    for f in all.iter().filter(|f| f.graph.vertex_count() <= 14) {
        let found: BTreeSet<Vec<VertexId>> =
            match_configuration(&f.graph, &h).into_iter().map(|m| m.map).collect();
        let brute = common::brute_h_matches(&f.graph);
        ensure(found == brute, || {
            format!("{}: matcher {} vs brute force {}", f.name, found.len(), brute.len())
        })?;
        checked += 1;
    }
    let gadget = match_configuration(fixture(all, "h-gadget")?, &h).len();
    let cube = match_configuration(fixture(all, "cube")?, &h).len();
    let oct = match_configuration(fixture(all, "octahedron")?, &h).len();
    ensure(gadget >= 1 && cube == 0 && oct == 0, || {
        format!("h-gadget {gadget}, cube {cube}, octahedron {oct}")
    })?;
    Ok(format!("{checked} fixtures agree; h-gadget {gadget} match(es), cube 0, octahedron 0"))
}

fn extension_trials() -> Outcome {
    for seed in 0..1000u64 {
        let n = 8 + (seed % 11) as usize;
        let extra = (seed as usize * 7) % (2 * n);
        let g = random_plane_graph(n, extra, true, seed);
        let k = 7.max(g.max_degree());
        let cert = find_reducible_set(&g, k, &[], &FindOptions::default())
            .ok_or_else(|| format!("seed {seed}: no reducible set"))?;
        ensure(reducible_by_hand(&g, &cert.set.vertices, k), || {
            format!("seed {seed}: certificate fails")
        })?;
        let (rest, kept) = g.remove_vertices(&cert.set.vertices);
        let base = exact_equitable(&rest, k)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("seed {seed}: base not colorable"))?;
        let full = extend_coloring(&g, &cert.set.vertices, &base, &kept)
            .map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(equitable_by_hand(&g, &full.colors, k), || format!("seed {seed}: invalid"))?;
        let grew = (0..k).all(|c| full.class_sizes[c] == base.class_sizes[c] + 1);
        ensure(grew, || format!("seed {seed}: class sizes {:?} -> {:?}", base.class_sizes, full.class_sizes))?;
    }
    Ok("1000 trials, every class grew by exactly 1".into())
}

fn main() {
    let all = common::fixtures();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("initial charge totals per component", Box::new(|| charge_identities(&all))),
        ("discharging conserves charge", Box::new(|| conservation(&all))),
        ("gadget spot values", Box::new(|| spot_values(&all))),
        ("no chordal 4-cycle implies 4-degenerate", Box::new(|| four_degenerate(&all))),
        ("reducible sets on member fixtures", Box::new(|| reducible_sets(&all))),
        ("constructive coloring agrees with exact", Box::new(|| constructive_vs_exact(&all))),
        ("random list assignments", Box::new(|| list_colorings(&all))),
        ("K3,3 equitable numbers", Box::new(complete_bipartite)),
        ("(Δ+1)-colorings and small list colorings", Box::new(|| delta_plus_one(&all))),
        ("configuration matcher vs brute force", Box::new(|| matcher_equivalence(&all))),
        ("extension step", Box::new(extension_trials)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{:?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
