//! Seeded scramble-and-solve runs written as CSV, with a least squares fit
//! of `len ~ c * n^2 / log2(n)`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use cube_core::{scramble, Dims};

use crate::error::CliError;
use crate::solve::{solve_state, Solver};

pub const CSV_HEADER: &str = "dims,seed,k,solver,len,millis";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub dims: Dims,
    pub seed: u64,
    pub k: usize,
    pub solver: Solver,
    pub len: usize,
    pub millis: u128,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!("{},{},{},{},{},{}", self.dims, self.seed, self.k, self.solver.name(), self.len, self.millis)
    }

    /// Largest side, the `n` of the fit.
    pub fn size(&self) -> usize {
        self.dims.l.max(self.dims.m).max(self.dims.n)
    }
}

#[derive(Debug, Clone)]
pub struct BenchPlan {
    pub dims: Vec<Dims>,
    pub seeds: u64,
    /// Scramble length; ten times the largest side when absent.
    pub k: Option<usize>,
    pub solvers: Vec<Solver>,
    pub jobs: usize,
    pub budget_ms: u64,
}

/// Every (solver, dims, seed) run, in that order. Each solution is replayed
/// before its record is kept.
pub fn run_bench(plan: &BenchPlan) -> Result<Vec<BenchRecord>, CliError> {
    let mut tasks = Vec::new();
    for &solver in &plan.solvers {
        for &d in &plan.dims {
            for seed in 0..plan.seeds {
                tasks.push((solver, d, seed));
            }
        }
    }
    let deadline = Instant::now() + Duration::from_millis(plan.budget_ms);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<BenchRecord, CliError>>>> =
        Mutex::new((0..tasks.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..plan.jobs.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(solver, d, seed)) = tasks.get(i) else { break };
                let left = deadline.saturating_duration_since(Instant::now()).as_millis() as u64;
                let r = if left == 0 {
                    Err(CliError::Cap(format!("bench budget of {} ms used up", plan.budget_ms)))
                } else {
                    let k = plan.k.unwrap_or(10 * d.l.max(d.m).max(d.n));
                    let (state, _) = scramble(d, seed, k);
                    let start = Instant::now();
                    solve_state(&state, solver, left).map(|seq| BenchRecord {
                        dims: d,
                        seed,
                        k,
                        solver,
                        len: seq.len(),
                        millis: start.elapsed().as_millis(),
                    })
                };
                results.lock().expect("no panics while held")[i] = Some(r);
            });
        }
    });
    results.into_inner().expect("workers joined").into_iter().map(|r| r.expect("every task ran")).collect()
}

fn scale(n: usize) -> f64 {
    let n = n as f64;
    n * n / n.log2()
}

/// Least squares `c` in `len = c * n^2 / log2(n)` over the records.
pub fn fit_constant<'a>(records: impl IntoIterator<Item = &'a BenchRecord>) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    for r in records {
        let f = scale(r.size());
        num += r.len as f64 * f;
        den += f * f;
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// `#fit,solver,n,c` per solver and size plus one `n = all` row per solver,
/// and `#ratio,n,naive/grouped` rows when both n x n x 1 solvers ran.
pub fn summary(records: &[BenchRecord]) -> Vec<String> {
    let mut by: BTreeMap<(Solver, usize), Vec<&BenchRecord>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.size() > 1) {
        by.entry((r.solver, r.size())).or_default().push(r);
    }
    let mut out = Vec::new();
    let solvers: Vec<Solver> = by.keys().map(|k| k.0).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    for &s in &solvers {
        for ((_, n), rs) in by.range((s, 0)..=(s, usize::MAX)) {
            out.push(format!("#fit,{},{},{:.4}", s.name(), n, fit_constant(rs.iter().copied())));
        }
        let all: Vec<&BenchRecord> = records.iter().filter(|r| r.solver == s && r.size() > 1).collect();
        out.push(format!("#fit,{},all,{:.4}", s.name(), fit_constant(all)));
    }
    let mean = |rs: &Vec<&BenchRecord>| rs.iter().map(|r| r.len as f64).sum::<f64>() / rs.len() as f64;
    for ((s, n), naive) in &by {
        if *s == Solver::N1Naive {
            if let Some(grouped) = by.get(&(Solver::N1Grouped, *n)) {
                out.push(format!("#ratio,{},{:.4}", n, mean(naive) / mean(grouped)));
            }
        }
    }
    out
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    for line in summary(records) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(n: usize, len: usize, solver: Solver) -> BenchRecord {
        BenchRecord { dims: Dims::new(n, n, 1).unwrap(), seed: 0, k: 0, solver, len, millis: 0 }
    }

    #[test]
    fn exact_fit() {
        let rs: Vec<_> = [8usize, 16, 32].iter().map(|&n| rec(n, (3.0 * scale(n)).round() as usize, Solver::N1Grouped)).collect();
        assert!((fit_constant(&rs) - 3.0).abs() < 1e-2);
    }

    #[test]
    fn summary_rows() {
        let rs = vec![rec(8, 100, Solver::N1Naive), rec(8, 50, Solver::N1Grouped)];
        let s = summary(&rs);
        assert!(s.contains(&"#ratio,8,2.0000".to_string()));
        assert_eq!(s.iter().filter(|l| l.starts_with("#fit")).count(), 4);
    }

    #[test]
    fn runs_in_order_and_parallel() {
        let plan = BenchPlan {
            dims: vec![Dims::new(6, 6, 1).unwrap(), Dims::new(7, 7, 1).unwrap()],
            seeds: 3,
            k: None,
            solvers: vec![Solver::N1Grouped],
            jobs: 3,
            budget_ms: 60_000,
        };
        let a = run_bench(&plan).unwrap();
        let b = run_bench(&BenchPlan { jobs: 1, ..plan }).unwrap();
        assert_eq!(a.len(), 6);
        let key = |r: &BenchRecord| (r.dims, r.seed, r.k, r.len);
        assert_eq!(a.iter().map(key).collect::<Vec<_>>(), b.iter().map(key).collect::<Vec<_>>());
        assert_eq!(a[0].k, 60);
    }
}
