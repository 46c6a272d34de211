//! Closed-form nearly-Gorenstein classification of height-two monomial
//! ideals, matched pattern by pattern up to relabeling of variables.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::decomposition::height;
use crate::error::{Error, Result};
use crate::hilbert_burch::xy_sequences;
use crate::ideal::MonomialIdeal;
use crate::trace::is_nearly_gorenstein_h2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NgCase {
    /// `μ(I) = 1`, only reachable by the two-variable classifier.
    #[serde(rename = "Principal")]
    Principal,
    /// `(u, v)` with disjoint supports.
    #[serde(rename = "A_two_gens")]
    ATwoGens,
    /// `(x^a, x^b y^c, y^d)` under the two-variable conditions.
    #[serde(rename = "B_two_vars")]
    BTwoVars,
    /// `(x1^a x2^b, x1 x3, x2 x3)`.
    C,
    /// `(x1 x2^b, x2^{b+1}, x1 x3)`.
    D,
    /// `(x1 x3, x1 x4, x2 x4)`.
    E,
    NotNearlyGorenstein,
}

impl NgCase {
    pub fn is_nearly_gorenstein(self) -> bool {
        self != NgCase::NotNearlyGorenstein
    }
}

impl fmt::Display for NgCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NgCase::Principal => "Principal",
            NgCase::ATwoGens => "A_two_gens",
            NgCase::BTwoVars => "B_two_vars",
            NgCase::C => "C",
            NgCase::D => "D",
            NgCase::E => "E",
            NgCase::NotNearlyGorenstein => "NotNearlyGorenstein",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CaseParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
}

/// Outcome of the classifier. `permutation[k]` is the ambient index playing
/// the pattern variable `x_{k+1}`; it is empty when no pattern matched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NGClassification {
    pub label: NgCase,
    /// Label of the ideal inside the polynomial ring on its support.
    pub support_label: NgCase,
    pub permutation: Vec<usize>,
    pub params: CaseParams,
    /// Ambient variables outside the support of `I`.
    pub ambient_excess_vars: Vec<usize>,
}

fn no_match(excess: Vec<usize>) -> NGClassification {
    NGClassification {
        label: NgCase::NotNearlyGorenstein,
        support_label: NgCase::NotNearlyGorenstein,
        permutation: Vec::new(),
        params: CaseParams::default(),
        ambient_excess_vars: excess,
    }
}

/// The two-variable classification: principal and two-generated ideals are
/// nearly Gorenstein, three generators `(x^a, x^b y^c, y^d)` are iff
/// `a-b = 1 or b = 1`, `d-c = 1 or c = 1` and `b+c ≥ 1`, more are not.
pub fn classify_ng_two_vars(ideal: &MonomialIdeal) -> Result<NGClassification> {
    let (a, b) = xy_sequences(ideal)?;
    let m = a.len();
    if m == 0 || ideal.is_unit() {
        return Err(Error::domain(format!("{ideal} is not a proper nonzero ideal")));
    }
    let mut out = no_match(Vec::new());
    if m == 1 {
        out.label = NgCase::Principal;
        out.support_label = NgCase::Principal;
        out.permutation = vec![0, 1];
        return Ok(out);
    }
    if a[m - 1] != 0 || b[0] != 0 {
        return Err(Error::domain(format!("{ideal} is not Cohen-Macaulay of height two")));
    }
    out.permutation = vec![0, 1];
    match m {
        2 => {
            out.label = NgCase::ATwoGens;
            out.params = CaseParams { a: Some(a[0]), d: Some(b[1]), ..Default::default() };
        }
        3 => {
            let (pa, pb, pc, pd) = (a[0], a[1], b[1], b[2]);
            out.params = CaseParams { a: Some(pa), b: Some(pb), c: Some(pc), d: Some(pd) };
            let holds = (pa - pb == 1 || pb == 1) && (pd - pc == 1 || pc == 1) && pb + pc >= 1;
            if holds {
                out.label = NgCase::BTwoVars;
            } else {
                out.permutation.clear();
            }
        }
        _ => {
            out.permutation.clear();
            out.params = CaseParams::default();
        }
    }
    out.support_label = out.label;
    Ok(out)
}

/// Exponent vectors of `G(J)` read through `perm`, sorted.
fn pattern_gens(j: &MonomialIdeal, perm: &[usize]) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = j.gens().iter().map(|g| perm.iter().map(|&p| g.exponent(p)).collect()).collect();
    v.sort();
    v
}

fn match_c(g: &[Vec<u32>]) -> Option<CaseParams> {
    let rest: Vec<&Vec<u32>> = g.iter().filter(|e| **e != [1, 0, 1] && **e != [0, 1, 1]).collect();
    if g.len() != 3 || rest.len() != 1 {
        return None;
    }
    let w = rest[0];
    (w[2] == 0 && w[0] >= 1 && w[0] + w[1] >= 2).then(|| CaseParams {
        a: Some(w[0]),
        b: Some(w[1]),
        ..Default::default()
    })
}

fn match_d(g: &[Vec<u32>]) -> Option<CaseParams> {
    if g.len() != 3 || !g.iter().any(|e| *e == [1, 0, 1]) {
        return None;
    }
    let b = g.iter().find(|e| e[0] == 1 && e[2] == 0)?[1];
    (b >= 1 && g.iter().any(|e| *e == [1, b, 0]) && g.iter().any(|e| *e == [0, b + 1, 0]))
        .then(|| CaseParams { b: Some(b), ..Default::default() })
}

fn match_e(g: &[Vec<u32>]) -> Option<CaseParams> {
    let mut target = vec![vec![1, 0, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 0, 1]];
    target.sort();
    (g == target).then(CaseParams::default)
}

/// Matches `I` against the height-two nearly-Gorenstein patterns inside the
/// polynomial ring on its support. Patterns that fix the number of variables
/// do not survive extra ambient variables; those ideals get the ambient
/// label `NotNearlyGorenstein` while `support_label` keeps the match.
pub fn classify_ng_height2(ideal: &MonomialIdeal) -> Result<NGClassification> {
    let h = height(ideal)?;
    if h != 2 {
        return Err(Error::domain(format!("{ideal} has height {h}, not two")));
    }
    let support = ideal.support();
    let excess: Vec<usize> = (0..ideal.nvars()).filter(|v| !support.contains(v)).collect();
    let j = ideal.localize(&support)?;
    let k = support.len();
    let mut out = no_match(excess);
    match (j.num_gens(), k) {
        (2, _) => {
            out.support_label = NgCase::ATwoGens;
            out.permutation = support.clone();
        }
        (3, 2) => {
            let two = classify_ng_two_vars(&j)?;
            if two.label == NgCase::BTwoVars {
                out.support_label = NgCase::BTwoVars;
                out.params = two.params;
                out.permutation = support.clone();
            }
        }
        (3, 3) | (3, 4) => {
            type Matcher = fn(&[Vec<u32>]) -> Option<CaseParams>;
            let matchers: &[(NgCase, Matcher)] =
                if k == 3 { &[(NgCase::C, match_c), (NgCase::D, match_d)] } else { &[(NgCase::E, match_e)] };
            'cases: for &(case, matcher) in matchers {
                for perm in (0..k).permutations(k) {
                    if let Some(params) = matcher(&pattern_gens(&j, &perm)) {
                        out.support_label = case;
                        out.params = params;
                        out.permutation = perm.iter().map(|&p| support[p]).collect();
                        break 'cases;
                    }
                }
            }
        }
        _ => {}
    }
    out.label = match out.support_label {
        NgCase::ATwoGens => NgCase::ATwoGens,
        other if out.ambient_excess_vars.is_empty() => other,
        _ => NgCase::NotNearlyGorenstein,
    };
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub ideal: MonomialIdeal,
    pub trace_nearly_gorenstein: bool,
    pub classification: NGClassification,
    pub two_variable_label: Option<NgCase>,
    pub consistent: bool,
    pub detail: Option<String>,
}

/// Compares the trace-based nearly-Gorenstein decision with the pattern
/// classifier. A mismatch is returned in the report, not as an error.
pub fn verify_classification_consistency(ideal: &MonomialIdeal) -> Result<ConsistencyReport> {
    let ng = is_nearly_gorenstein_h2(ideal)?;
    let classification = classify_ng_height2(ideal)?;
    let two_variable_label = if ideal.nvars() == 2 { Some(classify_ng_two_vars(ideal)?.label) } else { None };
    let mut problems = Vec::new();
    if ng != classification.label.is_nearly_gorenstein() {
        problems.push(format!("trace says {ng}, classifier says {}", classification.label));
    }
    if let Some(l) = two_variable_label {
        if l != classification.label {
            problems
                .push(format!("two-variable classifier says {l}, height-two classifier says {}", classification.label));
        }
    }
    Ok(ConsistencyReport {
        ideal: ideal.clone(),
        trace_nearly_gorenstein: ng,
        classification,
        two_variable_label,
        consistent: problems.is_empty(),
        detail: (!problems.is_empty()).then(|| problems.join("; ")),
    })
}
