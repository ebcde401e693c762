//! Parallel evaluation of a predicate over a graph stream.
//!
//! The calling thread reads the stream into a bounded channel in chunks;
//! `jobs` workers evaluate chunks and send back only the interesting
//! results, which are merged in input order.

use std::sync::atomic::{AtomicBool, Ordering};
use std::thread;

use crossbeam_channel::bounded;

use crate::error::{Error, Result};
use crate::graph::Graph;

const CHUNK: usize = 512;

/// Outcome of evaluating one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Hypothesis false.
    Skip,
    Holds,
    Violated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OnError {
    /// Count and skip unreadable or unevaluable inputs.
    Skip,
    /// Stop at the first error.
    Fatal,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Totals {
    pub scanned: u64,
    pub hits: u64,
    /// Offending graphs with their input index, in input order.
    pub violations: Vec<(u64, Graph)>,
    /// Skipped inputs with their input index and the error.
    pub errors: Vec<(u64, String)>,
}

impl Totals {
    fn absorb(&mut self, other: Totals) {
        self.scanned += other.scanned;
        self.hits += other.hits;
        self.violations.extend(other.violations);
        self.errors.extend(other.errors);
    }
}

type Chunk = Vec<(u64, Result<Graph>)>;

fn eval_chunk<F>(chunk: Chunk, eval: &F, policy: OnError) -> std::result::Result<Totals, (u64, Error)>
where
    F: Fn(&Graph) -> Result<Verdict>,
{
    let mut t = Totals::default();
    for (i, item) in chunk {
        let verdict = item.and_then(|g| eval(&g).map(|v| (v, g)));
        match verdict {
            Ok((v, g)) => {
                t.scanned += 1;
                match v {
                    Verdict::Skip => {}
                    Verdict::Holds => t.hits += 1,
                    Verdict::Violated => {
                        t.hits += 1;
                        t.violations.push((i, g));
                    }
                }
            }
            Err(e) if policy == OnError::Skip => t.errors.push((i, e.to_string())),
            Err(e) => return Err((i, e)),
        }
    }
    Ok(t)
}

/// Evaluates `eval` on every graph of `graphs` using `jobs` worker threads.
pub fn scan<I, F>(graphs: I, jobs: usize, policy: OnError, eval: F) -> Result<Totals>
where
    I: IntoIterator<Item = Result<Graph>>,
    F: Fn(&Graph) -> Result<Verdict> + Sync,
{
    let jobs = jobs.max(1);
    let mut items = graphs.into_iter().enumerate().map(|(i, g)| (i as u64, g));
    let mut next_chunk = || -> Chunk { items.by_ref().take(CHUNK).collect() };

    let outcome = if jobs == 1 {
        let mut totals = Totals::default();
        let mut failure = None;
        loop {
            let chunk = next_chunk();
            if chunk.is_empty() {
                break;
            }
            match eval_chunk(chunk, &eval, policy) {
                Ok(t) => totals.absorb(t),
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            }
        }
        failure.map_or(Ok(totals), Err)
    } else {
        let (work_tx, work_rx) = bounded::<Chunk>(jobs * 2);
        let (done_tx, done_rx) = bounded(jobs * 2);
        let stop = AtomicBool::new(false);
        thread::scope(|s| {
            for _ in 0..jobs {
                let work_rx = work_rx.clone();
                let done_tx = done_tx.clone();
                let (eval, stop) = (&eval, &stop);
                s.spawn(move || {
                    for chunk in work_rx {
                        let r = eval_chunk(chunk, eval, policy);
                        if r.is_err() {
                            stop.store(true, Ordering::Relaxed);
                        }
                        if done_tx.send(r).is_err() {
                            break;
                        }
                    }
                });
            }
            drop(done_tx);
            drop(work_rx);

            let merger = s.spawn(move || {
                let mut totals = Totals::default();
                let mut failure: Option<(u64, Error)> = None;
                for r in done_rx {
                    match r {
                        Ok(t) => totals.absorb(t),
                        Err(e) => {
                            if failure.as_ref().is_none_or(|f| e.0 < f.0) {
                                failure = Some(e);
                            }
                        }
                    }
                }
                failure.map_or(Ok(totals), Err)
            });

            loop {
                let chunk = next_chunk();
                if chunk.is_empty() || stop.load(Ordering::Relaxed) || work_tx.send(chunk).is_err() {
                    break;
                }
            }
            drop(work_tx);
            merger.join().expect("merger thread panicked")
        })
    };

    let mut totals = outcome.map_err(|(_, e)| e)?;
    totals.violations.sort_by_key(|&(i, _)| i);
    totals.errors.sort_by_key(|&(i, _)| i);
    Ok(totals)
}
