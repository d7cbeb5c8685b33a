//! From a not-all-equal 3-SAT formula to an instance whose ideal solutions
//! encode satisfying assignments.
//!
//! Column `r` is the pivot. Variable `i` owns columns `s+i` and `s-i` with
//! `r` forced between their first moves, so exactly one of them moves
//! before `r`: the true literal. Clause `j` gets column `tj`, placed between
//! its first two literals while `r` lies between `tj` and the third.

use crate::decide::{decide_ideal_with, Certificate, Event};
use crate::error::HardnessError;
use crate::formula::NaeFormula;
use crate::gadget::PartialInstance;
use crate::instance::{Line, PuzzleInstance};

fn literal_label(l: i32) -> String {
    format!("s{}{}", if l > 0 { '+' } else { '-' }, l.unsigned_abs())
}

/// Puts two different literals first; `None` when all three coincide.
fn normalize(c: [i32; 3]) -> Option<[i32; 3]> {
    match c {
        [a, b, d] if a != b => Some([a, b, d]),
        [a, _, d] if a != d => Some([a, d, a]),
        _ => None,
    }
}

/// Builds the instance. A clause repeating one literal three times is
/// encoded by two contradictory betweenness gadgets.
pub fn reduce_nae(f: &NaeFormula) -> Result<PuzzleInstance, HardnessError> {
    let f = NaeFormula::new(f.vars, f.clauses.clone())?;
    let mut p = PartialInstance::new();
    let r = p.add_column("r")?;
    for i in 1..=f.vars as i32 {
        p.add_column(&literal_label(i))?;
        p.add_column(&literal_label(-i))?;
    }
    let ts: Vec<usize> =
        (1..=f.clauses.len()).map(|j| p.add_column(&format!("t{j}"))).collect::<Result<_, _>>()?;
    let s = |p: &PartialInstance, l: i32| p.column(&literal_label(l)).expect("literal columns exist");
    for i in 1..=f.vars as i32 {
        let (a, b) = (s(&p, i), s(&p, -i));
        p.gadget_between(a, r, b)?;
    }
    for (&c, &t) in f.clauses.iter().zip(&ts) {
        match normalize(c) {
            Some([y1, y2, y3]) => {
                let (a, b, d) = (s(&p, y1), s(&p, y2), s(&p, y3));
                p.gadget_between(a, t, b)?;
                p.gadget_between(t, r, d)?;
            }
            None => {
                let a = s(&p, c[0]);
                p.gadget_between(t, r, a)?;
                p.gadget_between(r, t, a)?;
            }
        }
    }
    Ok(p.build())
}

fn label(inst: &PuzzleInstance, name: &str) -> Result<Line, HardnessError> {
    inst.line(name).ok_or_else(|| HardnessError::InvalidInstance(format!("no line labelled {name}")))
}

/// Reads the assignment off an ideal order: variable `i` is true when the
/// first move of `s+i` comes before that of `r`.
pub fn assignment_from(inst: &PuzzleInstance, cert: &Certificate, vars: usize) -> Result<Vec<bool>, HardnessError> {
    let pos = |name: &str| -> Result<usize, HardnessError> {
        cert.position(Event::first(label(inst, name)?))
            .ok_or_else(|| HardnessError::InvalidInstance(format!("{name} never moves")))
    };
    if vars == 0 {
        return Ok(Vec::new());
    }
    let r = pos("r")?;
    (1..=vars as i32).map(|i| Ok(pos(&literal_label(i))? < r)).collect()
}

/// An ideal order built from an assignment. The first moves of the formula
/// columns are placed directly: true literals, then `r`, then false
/// literals, each `tj` between its first two literals on the side of `r`
/// its third literal does not take. The second moves follow as `r`, every
/// `tj`, every literal. The gadget lines are then filled in by the decider.
/// `None` if no ideal solution extends that placement.
pub fn certificate_for_assignment(
    f: &NaeFormula,
    inst: &PuzzleInstance,
    assignment: &[bool],
    cap: u64,
) -> Result<Option<Certificate>, HardnessError> {
    if assignment.len() != f.vars {
        return Err(HardnessError::InvalidInstance(format!("{} values for {} variables", assignment.len(), f.vars)));
    }
    let v = f.vars as f64;
    let value = |l: i32| assignment[l.unsigned_abs() as usize - 1] == (l > 0);
    let place = |l: i32| {
        let i = l.unsigned_abs() as f64;
        if value(l) {
            i
        } else {
            v + 1.0 + i
        }
    };
    let r_at = v + 1.0;
    let mut slots: Vec<(f64, Line)> = vec![(r_at, label(inst, "r")?)];
    for i in 1..=f.vars as i32 {
        for l in [i, -i] {
            slots.push((place(l), label(inst, &literal_label(l))?));
        }
    }
    let mut ts = Vec::new();
    for (j, &c) in f.clauses.iter().enumerate() {
        let t = label(inst, &format!("t{}", j + 1))?;
        ts.push(t);
        let Some([y1, y2, y3]) = normalize(c) else {
            continue;
        };
        let eps = (j + 1) as f64 / (f.clauses.len() + 2) as f64 / 2.0;
        let at = if value(y1) != value(y2) {
            if value(y3) {
                r_at + eps
            } else {
                r_at - eps
            }
        } else {
            (place(y1) + place(y2)) / 2.0 + eps / 10.0
        };
        slots.push((at, t));
    }
    slots.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut chain: Vec<Event> = slots.iter().map(|&(_, l)| Event::first(l)).collect();
    chain.push(Event::second(label(inst, "r")?));
    chain.extend(ts.iter().map(|&t| Event::second(t)));
    for i in 1..=f.vars as i32 {
        for l in [i, -i] {
            chain.push(Event::second(label(inst, &literal_label(l))?));
        }
    }
    let active = inst.active_lines();
    chain.retain(|e| active.contains(&e.line));
    let extra: Vec<(Event, Event)> = chain.windows(2).map(|w| (w[0], w[1])).collect();
    decide_ideal_with(inst, &extra, cap)
}
