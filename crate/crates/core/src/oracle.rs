//! Exhaustive ground truth: backtracking coupon-coloring search, exact total domatic
//! number, and the sweep that cross-checks recognizer, colorer and search on every
//! triangulation of a given order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::color::{color_outerplanar, verify_coupon, Coloring, ColoringOutcome};
use crate::error::{Error, Result};
use crate::generate::{enumerate_triangulations, EnumerationCursor};
use crate::graph::{Adjacency, AsAdjacency, Chord};
use crate::recognize::classify_generalized_sun;

pub const MAX_N_TWO_CLASSES: usize = 26;
pub const MAX_N_MANY_CLASSES: usize = 15;

/// Searches for a `k`-class coupon-coloring; `None` once the space is exhausted.
///
/// Vertices are colored in label order with classes introduced in order of first use.
/// A branch dies as soon as some vertex is missing more classes than it has uncolored
/// neighbors.
pub fn brute_force_coupon<G: AsAdjacency + ?Sized>(graph: &G, k: usize) -> Result<Option<Coloring>> {
    let adj = graph.adjacency();
    let n = adj.order();
    let max = if k <= 2 {
        MAX_N_TWO_CLASSES
    } else {
        MAX_N_MANY_CLASSES
    };
    if n > max {
        return Err(Error::TooLarge { n, k, max });
    }
    if k == 0 || k > 32 {
        return Err(Error::BadFormat(format!("class count {k} out of range")));
    }
    let mut search = Search {
        adj: &adj,
        k,
        colors: vec![0; n],
        seen: vec![0; n],
        open: (0..n).map(|v| adj.degree(v)).collect(),
        saved: Vec::with_capacity(4 * n),
    };
    if (0..n).any(|v| k > search.open[v]) {
        return Ok(None);
    }
    Ok(search.run(0, 0).then_some(Coloring {
        k,
        colors: search.colors,
    }))
}

struct Search<'a> {
    adj: &'a Adjacency,
    k: usize,
    colors: Vec<u8>,
    seen: Vec<u32>,
    open: Vec<usize>,
    saved: Vec<u32>,
}

impl Search<'_> {
    fn run(&mut self, v: usize, used: usize) -> bool {
        if v == self.colors.len() {
            return true;
        }
        let full = (1u32 << self.k) - 1;
        let adj = self.adj;
        let top = (used + 1).min(self.k);
        for c in 0..top {
            self.colors[v] = c as u8;
            let mark = self.saved.len();
            let mut ok = true;
            for &u in adj.neighbors(v) {
                self.saved.push(self.seen[u]);
                self.seen[u] |= 1 << c;
                self.open[u] -= 1;
                let missing = (full & !self.seen[u]).count_ones() as usize;
                ok &= missing <= self.open[u];
            }
            if ok && self.run(v + 1, used.max(c + 1)) {
                return true;
            }
            for (&u, &old) in adj.neighbors(v).iter().zip(&self.saved[mark..]) {
                self.seen[u] = old;
                self.open[u] += 1;
            }
            self.saved.truncate(mark);
        }
        false
    }
}

/// Largest `k` admitting a `k`-class coupon-coloring; 0 if some vertex is isolated.
pub fn total_domatic_number<G: AsAdjacency + ?Sized>(graph: &G) -> Result<usize> {
    let adj = graph.adjacency();
    let n = adj.order();
    if n > MAX_N_MANY_CLASSES {
        return Err(Error::TooLarge {
            n,
            k: 0,
            max: MAX_N_MANY_CLASSES,
        });
    }
    let top = adj.min_degree();
    for k in (2..=top).rev() {
        if brute_force_coupon(&adj, k)?.is_some() {
            return Ok(k);
        }
    }
    Ok(top.min(1))
}

/// One triangulation on which the three routes disagree (or the colorer failed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub rank: u64,
    pub chords: Vec<Chord>,
    pub oracle_sat: bool,
    pub generalized_sun: bool,
    pub colored: bool,
    pub error: Option<String>,
}

/// Per-order summary of a characterization sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationReport {
    pub n: usize,
    pub graphs: u64,
    pub generalized_suns: u64,
    pub unsat: u64,
    pub colored: u64,
    pub discrepancies: Vec<Discrepancy>,
}

impl CharacterizationReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    /// Sums counts and unions discrepancies; the result does not depend on merge order.
    pub fn merge(mut self, other: CharacterizationReport) -> Self {
        self.n = self.n.max(other.n);
        self.graphs += other.graphs;
        self.generalized_suns += other.generalized_suns;
        self.unsat += other.unsat;
        self.colored += other.colored;
        self.discrepancies.extend(other.discrepancies);
        self.discrepancies.sort_by_key(|d| d.rank);
        self
    }
}

/// Checks oracle satisfiability, non-membership in the generalized suns, and success of
/// the constructive colorer against each other on every triangulation in `cursor`.
pub fn check_shard(cursor: EnumerationCursor) -> CharacterizationReport {
    let n = cursor.order();
    let mut report = CharacterizationReport {
        n,
        ..Default::default()
    };
    for (rank, g) in (cursor.position()..).zip(cursor) {
        report.graphs += 1;
        let oracle_sat = match brute_force_coupon(&g, 2) {
            Ok(found) => found.is_some(),
            Err(_) => false,
        };
        let generalized_sun = classify_generalized_sun(&g).is_generalized_sun;
        let (colored, error) = match color_outerplanar(&g) {
            Ok(ColoringOutcome::Colored(c)) => match verify_coupon(&g, &c) {
                Ok(v) if v.valid => (true, None),
                Ok(_) => (false, Some("returned coloring does not verify".to_string())),
                Err(e) => (false, Some(e.to_string())),
            },
            Ok(ColoringOutcome::GeneralizedSun(_)) => (false, None),
            Err(e) => (false, Some(e.to_string())),
        };
        report.generalized_suns += generalized_sun as u64;
        report.unsat += !oracle_sat as u64;
        report.colored += colored as u64;
        if error.is_some() || oracle_sat == generalized_sun || colored != oracle_sat {
            report.discrepancies.push(Discrepancy {
                rank,
                chords: g.chords().to_vec(),
                oracle_sat,
                generalized_sun,
                colored,
                error,
            });
        }
    }
    report
}

/// Runs [`check_shard`] over all triangulations of order `n`, split across the current
/// rayon pool.
pub fn check_characterization(n: usize) -> Result<CharacterizationReport> {
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    let cursor = enumerate_triangulations(n)?;
    let shards = (rayon::current_num_threads() * 8).max(1);
    Ok(cursor
        .split(shards)
        .into_par_iter()
        .map(check_shard)
        .reduce(
            || CharacterizationReport {
                n,
                ..Default::default()
            },
            CharacterizationReport::merge,
        ))
}
