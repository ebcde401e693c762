//! Executable forms of the disjoint-cycle theorems and of the two open
//! questions, evaluated over graph streams.
//!
//! Every predicate is a hypothesis plus a conclusion. The conclusion is
//! "has `k` disjoint cycles" except for `kky`, whose hypothesis includes the
//! absence of `k` disjoint cycles and whose conclusion is the three-way
//! disjunction on independence number and exceptional graphs.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::io::write_graph6;
use crate::scan::{scan, OnError, Totals, Verdict};
use crate::solvers::{find_disjoint_cycles, independence_number, is_kky_exception, is_sk5, is_wheel, triangle_packing_number};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremPredicate {
    Ch,
    De,
    Main,
    CorT1,
    Cor3k,
    Planar,
    OneTri,
    Kky,
    CorKky,
    L31,
    L32,
    L33,
    TfLemma,
}

use TheoremPredicate::*;

impl TheoremPredicate {
    pub const ALL: [TheoremPredicate; 13] = [Ch, De, Main, CorT1, Cor3k, Planar, OneTri, Kky, CorKky, L31, L32, L33, TfLemma];

    pub fn name(self) -> &'static str {
        match self {
            Ch => "ch",
            De => "de",
            Main => "main",
            CorT1 => "cor-t1",
            Cor3k => "cor-3k",
            Planar => "planar",
            OneTri => "one-tri",
            Kky => "kky",
            CorKky => "cor-kky",
            L31 => "l31",
            L32 => "l32",
            L33 => "l33",
            TfLemma => "tf-lemma",
        }
    }

    /// Smallest `k` the statement covers, and the only `k` for the lemmas
    /// stated at `k = 2`.
    pub fn k_range(self) -> (usize, Option<usize>) {
        match self {
            Ch | TfLemma => (1, None),
            De | OneTri => (3, None),
            Main | CorT1 | Cor3k | Planar | Kky | CorKky => (2, None),
            L31 | L32 | L33 => (2, Some(2)),
        }
    }

    pub fn check_k(self, k: usize) -> Result<()> {
        let (lo, hi) = self.k_range();
        if k < lo || hi.is_some_and(|hi| k > hi) {
            let range = match hi {
                Some(hi) if hi == lo => format!("k = {lo}"),
                _ => format!("k >= {lo}"),
            };
            return Err(precondition(format!("{} is stated for {range}, got k={k}", self.name())));
        }
        Ok(())
    }

    pub fn hypothesis(self, g: &Graph, k: usize) -> Result<bool> {
        let n = g.order();
        let dc = g.degree_classes(k);
        let surplus = dc.surplus();
        let k = k as i64;
        let min_degree = g.min_degree().unwrap_or(0) as i64;
        Ok(match self {
            Ch => n as i64 >= 3 * k && min_degree >= 2 * k,
            De => surplus >= k * k + 2 * k - 4,
            Main => n as i64 >= 3 * k && surplus >= 2 * k && surplus >= 2 * k + triangle_packing_number(g)? as i64,
            CorT1 => surplus > 2 * k && surplus >= 2 * k + 1 + triangle_packing_number(g)? as i64,
            Cor3k => surplus >= 3 * k,
            Planar => surplus >= 2 * k && g.is_planar(),
            OneTri => surplus >= 2 * k && triangle_packing_number(g)? <= 1,
            Kky => n as i64 >= 3 * k && min_degree >= 2 * k - 1 && !has_cycles(g, k as usize)?,
            CorKky => n as i64 >= 3 * k && dc.h() as i64 >= 2 * k && min_degree >= 2 * k - 1,
            L31 => surplus >= 4 && g.is_triangle_free(),
            L32 => surplus >= 4 && {
                let (core, _) = g.two_core();
                core.order() >= 6 && !is_sk5(&core)
            },
            L33 => qualifying_triangle(g).is_some(),
            TfLemma => {
                let (above, below) = g.threshold_classes(2 * k as usize + 1, 2 * k as usize - 1);
                n > 0 && above.len() as i64 - below.len() as i64 >= 2 * k - 2 && g.is_triangle_free()
            }
        })
    }

    pub fn conclusion(self, g: &Graph, k: usize) -> Result<bool> {
        match self {
            Kky => Ok(kky_clauses(g, k)?.any()),
            _ => has_cycles(g, k),
        }
    }

    /// Hypothesis, then conclusion only when the hypothesis holds. Does not
    /// check `k` against [`TheoremPredicate::k_range`].
    pub fn evaluate(self, g: &Graph, k: usize) -> Result<Verdict> {
        if !self.hypothesis(g, k)? {
            return Ok(Verdict::Skip);
        }
        Ok(if self.conclusion(g, k)? { Verdict::Holds } else { Verdict::Violated })
    }
}

impl fmt::Display for TheoremPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| precondition(format!("unknown theorem {s:?}; expected one of {}", names(&Self::ALL))))
    }
}

fn names(ps: &[TheoremPredicate]) -> String {
    ps.iter().map(|p| p.name()).collect::<Vec<_>>().join(", ")
}

fn has_cycles(g: &Graph, k: usize) -> Result<bool> {
    Ok(find_disjoint_cycles(g, k)?.is_some())
}

/// Which alternatives of the `kky` conclusion hold.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KkyClauses {
    /// `α(G) >= |G| - 2k + 1`.
    pub alpha: bool,
    /// `k` odd and `G ≅ 2K_k ∨ K̄_k`.
    pub exception: bool,
    /// `k = 2` and `G` is a wheel.
    pub wheel: bool,
}

impl KkyClauses {
    pub fn any(&self) -> bool {
        self.alpha || self.exception || self.wheel
    }
}

pub fn kky_clauses(g: &Graph, k: usize) -> Result<KkyClauses> {
    let n = g.order();
    Ok(KkyClauses {
        alpha: independence_number(g)?.size + 2 * k >= n + 1,
        exception: k % 2 == 1 && is_kky_exception(g, k),
        wheel: k == 2 && is_wheel(g),
    })
}

/// A triangle `X` with `|H \ X| - |L \ X| >= 2` (at `k = 2`) and
/// `‖v, X‖ <= 2` for every `v` outside `X`; the lowest such triangle.
pub fn qualifying_triangle(g: &Graph) -> Option<[Vertex; 3]> {
    let dc = g.degree_classes(2);
    g.triangles().into_iter().find(|x| {
        let outside = |v: &&Vertex| !x.contains(v);
        let h = dc.high.iter().filter(outside).count() as i64;
        let l = dc.low.iter().filter(outside).count() as i64;
        h - l >= 2 && (0..g.order()).all(|v| x.contains(&v) || g.count_adjacent(v, x) <= 2)
    })
}

/// The open questions from the concluding remarks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpenQuestion {
    /// `|G| >= 4k + 1` and `h - ℓ >= 2k`.
    Remark1,
    /// `G` nonempty and `|V_{>=2k+1}| - |V_{<=2k-1}| >= 2k - 2`, triangles allowed.
    Remark2,
}

impl OpenQuestion {
    pub fn name(self) -> &'static str {
        match self {
            OpenQuestion::Remark1 => "remark1",
            OpenQuestion::Remark2 => "remark2",
        }
    }

    pub fn min_k(self) -> usize {
        match self {
            OpenQuestion::Remark1 => 2,
            OpenQuestion::Remark2 => 1,
        }
    }

    pub fn hypothesis(self, g: &Graph, k: usize) -> bool {
        let n = g.order();
        match self {
            OpenQuestion::Remark1 => n >= 4 * k + 1 && g.degree_classes(k).surplus() >= 2 * k as i64,
            OpenQuestion::Remark2 => {
                let (above, below) = g.threshold_classes(2 * k + 1, 2 * k - 1);
                n > 0 && above.len() as i64 - below.len() as i64 >= 2 * k as i64 - 2
            }
        }
    }

    pub fn evaluate(self, g: &Graph, k: usize) -> Result<Verdict> {
        if !self.hypothesis(g, k) {
            return Ok(Verdict::Skip);
        }
        Ok(if has_cycles(g, k)? { Verdict::Holds } else { Verdict::Violated })
    }
}

impl FromStr for OpenQuestion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "remark1" => Ok(OpenQuestion::Remark1),
            "remark2" => Ok(OpenQuestion::Remark2),
            _ => Err(precondition(format!("unknown open question {s:?}; expected remark1 or remark2"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub jobs: usize,
    pub on_error: OnError,
    /// Evaluate even when `k` lies outside the statement's range.
    pub force_k: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { jobs: 1, on_error: OnError::Fatal, force_k: false }
    }
}

/// Result of scanning a stream. For open questions `violations` lists the
/// flagged graphs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub predicate: String,
    pub k: usize,
    pub open_question: bool,
    pub scanned: u64,
    pub hits: u64,
    pub violations: Vec<String>,
    pub skipped: Vec<String>,
    pub wall_time_s: f64,
}

impl Report {
    fn from_totals(predicate: &str, k: usize, open_question: bool, t: Totals, started: Instant) -> Self {
        Report {
            schema: 1,
            predicate: predicate.to_string(),
            k,
            open_question,
            scanned: t.scanned,
            hits: t.hits,
            violations: t.violations.iter().map(|(_, g)| write_graph6(g)).collect(),
            skipped: t.errors.into_iter().map(|(i, e)| format!("input {}: {e}", i + 1)).collect(),
            wall_time_s: started.elapsed().as_secs_f64(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// One line: `name k=.. scanned=.. hits=.. violations=..`.
    pub fn summary(&self) -> String {
        let label = if self.open_question { "flags" } else { "violations" };
        format!("{} k={} scanned={} hits={} {label}={}", self.predicate, self.k, self.scanned, self.hits, self.violations.len())
    }
}

pub fn check_theorem<I>(p: TheoremPredicate, k: usize, graphs: I, opts: &ScanOptions) -> Result<Report>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    if !opts.force_k {
        p.check_k(k)?;
    }
    let started = Instant::now();
    let totals = scan(graphs, opts.jobs, opts.on_error, |g| p.evaluate(g, k))?;
    Ok(Report::from_totals(p.name(), k, false, totals, started))
}

pub fn search_open<I>(which: OpenQuestion, k: usize, graphs: I, opts: &ScanOptions) -> Result<Report>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    if k < which.min_k() && !opts.force_k {
        return Err(precondition(format!("{} needs k >= {}, got k={k}", which.name(), which.min_k())));
    }
    let started = Instant::now();
    let totals = scan(graphs, opts.jobs, opts.on_error, |g| which.evaluate(g, k))?;
    Ok(Report::from_totals(which.name(), k, true, totals, started))
}
