//! Not-all-equal 3-SAT formulas: every clause needs a true and a false
//! literal.

use std::fmt::Write;

use crate::error::HardnessError;

pub const MAX_BRUTE_VARS: usize = 24;

/// Literals are signed 1-based variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NaeFormula {
    pub vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl NaeFormula {
    pub fn new(vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self, HardnessError> {
        for (i, c) in clauses.iter().enumerate() {
            if c.iter().any(|&l| l == 0 || l.unsigned_abs() as usize > vars) {
                return Err(HardnessError::Parse { line: i + 1, msg: format!("literal out of range in {c:?}") });
            }
        }
        Ok(NaeFormula { vars, clauses })
    }

    /// Reads `c` comment lines, a `p nae V C` header and `C` clause lines
    /// of three signed integers (an optional trailing 0 is ignored).
    pub fn parse(text: &str) -> Result<Self, HardnessError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |msg: &str| HardnessError::Parse { line: i + 1, msg: msg.to_string() };
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if header.is_some() || parts.len() != 3 || parts[0] != "nae" {
                    return Err(err("expected a single `p nae V C` header"));
                }
                let v = parts[1].parse().map_err(|_| err("bad variable count"))?;
                let c = parts[2].parse().map_err(|_| err("bad clause count"))?;
                header = Some((v, c));
                continue;
            }
            let (vars, _) = header.ok_or_else(|| err("clause before header"))?;
            let mut lits: Vec<i32> =
                line.split_whitespace().map(|t| t.parse().map_err(|_| err("bad literal"))).collect::<Result<_, _>>()?;
            if lits.len() == 4 && lits[3] == 0 {
                lits.pop();
            }
            if lits.len() != 3 || lits.iter().any(|&l| l == 0 || l.unsigned_abs() as usize > vars) {
                return Err(err("expected three literals in range"));
            }
            clauses.push([lits[0], lits[1], lits[2]]);
        }
        let (vars, count) = header.ok_or(HardnessError::Parse { line: 0, msg: "missing header".into() })?;
        if clauses.len() != count {
            return Err(HardnessError::Parse {
                line: text.lines().count(),
                msg: format!("header promises {count} clauses, found {}", clauses.len()),
            });
        }
        Ok(NaeFormula { vars, clauses })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p nae {} {}\n", self.vars, self.clauses.len());
        for c in &self.clauses {
            let _ = writeln!(out, "{} {} {}", c[0], c[1], c[2]);
        }
        out
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        let value = |l: i32| assignment[l.unsigned_abs() as usize - 1] == (l > 0);
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|&&l| value(l)).count();
            t > 0 && t < 3
        })
    }
}

/// Some satisfying assignment, by trying them all.
pub fn nae_solve_brute(f: &NaeFormula) -> Result<Option<Vec<bool>>, HardnessError> {
    if f.vars > MAX_BRUTE_VARS {
        return Err(HardnessError::CapExceeded(format!("{} variables", f.vars)));
    }
    Ok((0u32..1 << f.vars)
        .map(|bits| (0..f.vars).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
        .find(|a| f.satisfied_by(a)))
}

pub fn nae_brute(f: &NaeFormula) -> Result<bool, HardnessError> {
    Ok(nae_solve_brute(f)?.is_some())
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, k - 1);
            out.push(q);
        }
    }
    out
}

impl NaeFormula {
    /// Least form under renaming variables and flipping their polarity.
    pub fn canonical(&self) -> NaeFormula {
        let mut best: Option<Vec<[i32; 3]>> = None;
        for perm in permutations(self.vars) {
            for flips in 0u32..1 << self.vars {
                let map = |l: i32| {
                    let i = l.unsigned_abs() as usize - 1;
                    let sign = if flips >> i & 1 == 1 { -l.signum() } else { l.signum() };
                    sign * (perm[i] as i32 + 1)
                };
                let cs: Vec<[i32; 3]> = self.clauses.iter().map(|c| c.map(map)).collect();
                if best.as_ref().is_none_or(|b| cs < *b) {
                    best = Some(cs);
                }
            }
        }
        NaeFormula { vars: self.vars, clauses: best.unwrap_or_default() }
    }
}

/// Every formula with at most `max_vars` variables and `max_clauses`
/// clauses, one per renaming class.
pub fn small_formulas(max_vars: usize, max_clauses: usize) -> Vec<NaeFormula> {
    let mut seen = std::collections::BTreeSet::new();
    for vars in 0..=max_vars {
        let lits: Vec<i32> = (1..=vars as i32).flat_map(|i| [i, -i]).collect();
        let mut clauses = Vec::new();
        for &a in &lits {
            for &b in &lits {
                for &c in &lits {
                    clauses.push([a, b, c]);
                }
            }
        }
        let mut level: Vec<Vec<[i32; 3]>> = vec![Vec::new()];
        for _ in 0..=max_clauses {
            let mut next = Vec::new();
            for cs in &level {
                seen.insert(NaeFormula { vars, clauses: cs.clone() }.canonical());
                for &c in &clauses {
                    let mut more = cs.clone();
                    more.push(c);
                    next.push(more);
                }
            }
            level = next;
        }
    }
    seen.into_iter().collect()
}
