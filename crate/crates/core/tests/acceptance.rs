//! End-to-end acceptance checks, run without the libtest harness so the PASS/FAIL line
//! for each criterion is always printed. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use sunchaser_core::color::{
    augment_generalized_sun, color_hamiltonian, color_outerplanar, verify_adjacency,
    verify_coupon,
};
use sunchaser_core::generate::{
    enumerate_triangulations, fan, parasol, random_hamiltonian, random_triangulation,
    sun_of, triangulation_count,
};
use sunchaser_core::graph::{glue, OuterplanarTriangulation};
use sunchaser_core::oracle::{brute_force_coupon, check_characterization};
use sunchaser_core::recognize::{
    central_chord_count, classify_generalized_sun, find_reduction_face, find_short_chord,
};
use sunchaser_core::ColoringOutcome;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn all(n: usize) -> Vec<OuterplanarTriangulation> {
    enumerate_triangulations(n).unwrap().collect()
}

fn suns_up_to(max: usize) -> Vec<OuterplanarTriangulation> {
    (6..=max)
        .step_by(4)
        .flat_map(all)
        .filter(|g| classify_generalized_sun(g).is_generalized_sun)
        .collect()
}

fn characterization() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 4..=14 {
        let r = check_characterization(n).map_err(|e| e.to_string())?;
        if !r.is_clean() {
            return Err(format!(
                "n={n}: {} discrepancies, first {:?}",
                r.discrepancies.len(),
                r.discrepancies[0]
            ));
        }
        total += r.graphs;
    }
    Ok(format!("{total} graphs, 0 discrepancies, {:.1?}", start.elapsed()))
}

fn counts() -> Outcome {
    let mut suns = Vec::new();
    for n in 4..=14 {
        let graphs = all(n);
        let expected = triangulation_count(n).unwrap();
        if graphs.len() as u64 != expected {
            return Err(format!("n={n}: enumerated {} != {expected}", graphs.len()));
        }
        let s = graphs
            .iter()
            .filter(|g| classify_generalized_sun(g).is_generalized_sun)
            .count();
        suns.push((n, s));
    }
    for &(n, s) in &suns {
        let ok = match n {
            6 => s == 2,
            10 | 14 => s > 0,
            _ => s == 0,
        };
        if !ok {
            return Err(format!("n={n}: {s} generalized suns"));
        }
    }
    Ok(format!("generalized suns per order {suns:?}"))
}

fn unsatisfiable_families() -> Outcome {
    let mut cases: Vec<(String, OuterplanarTriangulation)> = vec![
        ("M(K3)".into(), sun_of(&OuterplanarTriangulation::new(3, []).unwrap())),
        ("M(G5)".into(), sun_of(&fan(5).unwrap())),
    ];
    for h in [3, 5, 7] {
        for (i, g) in all(h).into_iter().enumerate() {
            cases.push((format!("sun_of(H{h}#{i})"), sun_of(&g)));
        }
    }
    for k in 1..=3 {
        cases.push((format!("parasol({k})"), parasol(k).unwrap()));
    }
    for (name, g) in &cases {
        if brute_force_coupon(g, 2).map_err(|e| e.to_string())?.is_some() {
            return Err(format!("{name} has a 2-class coupon-coloring"));
        }
    }
    Ok(format!("{} instances unsatisfiable", cases.len()))
}

fn structure() -> Outcome {
    let mut checked = 0;
    for n in 4..=14 {
        for g in all(n) {
            if n >= 6 {
                find_short_chord(&g).map_err(|e| format!("short chord n={n}: {e}"))?;
            }
            if n >= 5 {
                find_reduction_face(&g).map_err(|e| format!("reduction face n={n}: {e}"))?;
            }
            let t = g.weak_dual();
            if t.len() != n - 2 || t.max_degree() > 3 || t.leaf_count() > n / 2 || !t.is_tree() {
                return Err(format!("weak dual bounds fail on {:?}", g.chords()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} instances"))
}

fn central_chords() -> Outcome {
    let suns = suns_up_to(14);
    for g in &suns {
        let k = (g.order() - 2) / 4;
        let count = central_chord_count(g).map_err(|e| e.to_string())?;
        if count + 1 > k {
            return Err(format!("{count} central chords with k={k} on {:?}", g.chords()));
        }
        let v = classify_generalized_sun(g);
        if v.degree_two.len() <= v.central.len() {
            return Err(format!("degree-two count not above central count on {:?}", g.chords()));
        }
    }
    for k in 1..=10 {
        let count = central_chord_count(&parasol(k).unwrap()).map_err(|e| e.to_string())?;
        if count != k - 1 {
            return Err(format!("parasol({k}) has {count} central chords"));
        }
    }
    Ok(format!("{} generalized suns, parasol(1..=10) sharp", suns.len()))
}

fn hamiltonian() -> Outcome {
    let mut pairs = 0usize;
    for n in 4..=10 {
        let graphs = all(n);
        let failures: Vec<String> = graphs
            .par_iter()
            .flat_map_iter(|a| graphs.iter().map(move |b| (a, b)))
            .filter_map(|(a, b)| {
                let ht = glue(a, b).ok()?;
                let ok = color_hamiltonian(&ht)
                    .and_then(|c| verify_coupon(&ht, &c))
                    .map(|v| v.valid)
                    .unwrap_or(false)
                    && matches!(brute_force_coupon(&ht, 2), Ok(Some(_)));
                Some((!ok).then(|| format!("{:?} / {:?}", a.chords(), b.chords())))
            })
            .flatten()
            .collect();
        if let Some(f) = failures.first() {
            return Err(format!("n={n}: {} failures, first {f}", failures.len()));
        }
        pairs += graphs
            .iter()
            .flat_map(|a| graphs.iter().map(move |b| (a, b)))
            .filter(|(a, b)| glue(a, b).is_ok())
            .count();
    }
    let random_failures: Vec<u64> = (0..10_000u64)
        .into_par_iter()
        .filter(|&seed| {
            let n = 4 + (seed.wrapping_mul(2654435761) % 497) as usize;
            let ht = random_hamiltonian(n, seed).unwrap();
            !color_hamiltonian(&ht)
                .and_then(|c| verify_coupon(&ht, &c))
                .map(|v| v.valid)
                .unwrap_or(false)
        })
        .collect();
    if let Some(seed) = random_failures.first() {
        return Err(format!("{} random failures, first seed {seed}", random_failures.len()));
    }
    Ok(format!("{pairs} disjoint pairs with n <= 10, 10000 random with n <= 500"))
}

fn augmentation() -> Outcome {
    let suns = suns_up_to(14);
    for g in &suns {
        let a = augment_generalized_sun(g).map_err(|e| e.to_string())?;
        let revalidated = OuterplanarTriangulation::new(
            a.exchanged.order(),
            a.exchanged.chords().iter().map(|c| (c.0, c.1)),
        )
        .map_err(|e| e.to_string())?;
        if classify_generalized_sun(&revalidated).is_generalized_sun {
            return Err(format!("exchanged graph still a generalized sun: {:?}", g.chords()));
        }
        let on_exchanged = verify_coupon(&revalidated, &a.coloring).map_err(|e| e.to_string())?;
        let on_augmented =
            verify_adjacency(&a.augmented(g), &a.coloring).map_err(|e| e.to_string())?;
        if !on_exchanged.valid || !on_augmented.valid {
            return Err(format!("coloring fails after augmenting {:?}", g.chords()));
        }
    }
    Ok(format!("{} generalized suns repaired", suns.len()))
}

fn scale() -> Outcome {
    let g = random_triangulation(100_000, 7).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let outcome = color_outerplanar(&g).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let ColoringOutcome::Colored(c) = outcome else {
        return Err("random instance reported as a generalized sun".into());
    };
    if !verify_coupon(&g, &c).map_err(|e| e.to_string())?.valid {
        return Err("coloring does not verify".into());
    }
    if elapsed > Duration::from_secs(5) {
        return Err(format!("took {elapsed:.2?}"));
    }
    Ok(format!("n=100000 colored and verified in {elapsed:.2?}"))
}

fn uniform_sampler() -> Outcome {
    const DRAWS: u64 = 140_000;
    let graphs = all(6);
    let counts: Vec<u64> = (0..DRAWS)
        .into_par_iter()
        .fold(
            || vec![0u64; graphs.len()],
            |mut acc, seed| {
                let g = random_triangulation(6, seed).unwrap();
                acc[graphs.iter().position(|h| *h == g).unwrap()] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; graphs.len()],
            |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        );
    let p = 1.0 / graphs.len() as f64;
    let mean = DRAWS as f64 * p;
    let sigma = (DRAWS as f64 * p * (1.0 - p)).sqrt();
    for (i, &c) in counts.iter().enumerate() {
        if (c as f64 - mean).abs() > 3.0 * sigma {
            return Err(format!("triangulation {i} drawn {c} times, mean {mean:.0}"));
        }
    }
    Ok(format!("counts {counts:?}, 3 sigma = {:.1}", 3.0 * sigma))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("exhaustive characterization 4 <= n <= 14", characterization),
        ("generalized-sun counts and Catalan totals", counts),
        ("unsatisfiable named families", unsatisfiable_families),
        ("short chord, reduction face, weak dual bounds", structure),
        ("central chord bound and degree-two excess", central_chords),
        ("Hamiltonian triangulations", hamiltonian),
        ("generalized-sun augmentation", augmentation),
        ("scale n = 100000", scale),
        ("uniform sampler n = 6", uniform_sampler),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}: {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}: {name} ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
