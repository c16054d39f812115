//! Necessary conditions for degree similarity and pair verdicts.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::algebra::json::{bipoly_to_json, unipoly_to_json};
use crate::algebra::{BiPoly, UniPoly};
use crate::graph::{find_isomorphism, induced, isomorphic, Graph};
use crate::pencil::{adjacency_charpoly, psi, snf_from_psi, PencilSnf};

use super::{verify_certificate, Certificate, CertifyError};

/// Outcome of every implemented necessary condition. Each `false` proves
/// the pair is not degree similar; `isomorphic` is informational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryReport {
    pub psi_equal: bool,
    pub degree_multiset_equal: bool,
    /// Per degree present in both graphs: are the induced subgraphs on the
    /// two degree classes adjacency-cospectral?
    pub class_cospectral: BTreeMap<usize, bool>,
    pub snf_equal: bool,
    pub isomorphic: bool,
    /// `ψ(g) - ψ(h)`.
    pub psi_diff: BiPoly,
    pub degree_multisets: (Vec<usize>, Vec<usize>),
    /// Charpoly differences of the degree-class subgraphs, nonzero entries only.
    pub class_diffs: BTreeMap<usize, UniPoly>,
    pub snfs: (PencilSnf, PencilSnf),
}

/// A necessary condition, named as in the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    Psi,
    DegreeMultiset,
    ClassCospectral(usize),
    Snf,
    /// For trees, degree similarity is equivalent to isomorphism.
    TreesIsomorphic,
}

impl Condition {
    pub fn name(&self) -> String {
        match self {
            Self::Psi => "psiEqual".into(),
            Self::DegreeMultiset => "degreeMultisetEqual".into(),
            Self::ClassCospectral(d) => format!("classCospectral[{d}]"),
            Self::Snf => "snfEqual".into(),
            Self::TreesIsomorphic => "treesIsomorphic".into(),
        }
    }
}

impl NecessaryReport {
    /// The conditions in evaluation order with their outcomes.
    pub fn conditions(&self) -> Vec<(Condition, bool)> {
        let mut out = vec![
            (Condition::Psi, self.psi_equal),
            (Condition::DegreeMultiset, self.degree_multiset_equal),
        ];
        out.extend(
            self.class_cospectral
                .iter()
                .map(|(&d, &ok)| (Condition::ClassCospectral(d), ok)),
        );
        out.push((Condition::Snf, self.snf_equal));
        out
    }

    /// All conditions hold; the pair may or may not be degree similar.
    pub fn all_pass(&self) -> bool {
        self.conditions().iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<Condition> {
        self.conditions()
            .into_iter()
            .find(|(_, ok)| !ok)
            .map(|(c, _)| c)
    }

    /// Evidence for a failed condition.
    pub fn witness(&self, c: &Condition) -> Value {
        match c {
            Condition::Psi => json!({"psiDifference": bipoly_to_json(&self.psi_diff)}),
            Condition::DegreeMultiset => {
                json!({"first": self.degree_multisets.0, "second": self.degree_multisets.1})
            }
            Condition::ClassCospectral(d) => json!({
                "degree": d,
                "charpolyDifference": self.class_diffs.get(d).map(unipoly_to_json),
            }),
            Condition::Snf => {
                json!({"first": self.snfs.0.to_json(), "second": self.snfs.1.to_json()})
            }
            Condition::TreesIsomorphic => json!({"isomorphic": false}),
        }
    }

    pub fn to_json(&self) -> Value {
        let classes: BTreeMap<String, bool> = self
            .class_cospectral
            .iter()
            .map(|(d, ok)| (d.to_string(), *ok))
            .collect();
        let mut v = json!({
            "psiEqual": self.psi_equal,
            "degreeMultisetEqual": self.degree_multiset_equal,
            "classCospectral": classes,
            "snfEqual": self.snf_equal,
            "isomorphic": self.isomorphic,
        });
        let witnesses: serde_json::Map<String, Value> = self
            .conditions()
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(c, _)| (c.name(), self.witness(&c)))
            .collect();
        if !witnesses.is_empty() {
            v["witnesses"] = Value::Object(witnesses);
        }
        v
    }
}

/// Evaluates every implemented necessary condition of degree similarity.
pub fn necessary_battery(g: &Graph, h: &Graph) -> NecessaryReport {
    let (pg, ph) = (psi(g), psi(h));
    let psi_diff = &pg - &ph;
    let (mg, mh) = (g.degree_multiset(), h.degree_multiset());
    let (cg, ch) = (g.degree_classes(), h.degree_classes());
    let mut class_cospectral = BTreeMap::new();
    let mut class_diffs = BTreeMap::new();
    for (d, vg) in &cg {
        let Some(vh) = ch.get(d) else { continue };
        let a = adjacency_charpoly(&induced(g, vg).expect("class members are vertices"));
        let b = adjacency_charpoly(&induced(h, vh).expect("class members are vertices"));
        let diff = &a - &b;
        class_cospectral.insert(*d, diff.is_zero());
        if !diff.is_zero() {
            class_diffs.insert(*d, diff);
        }
    }
    let snfs = (snf_from_psi(&pg), snf_from_psi(&ph));
    NecessaryReport {
        psi_equal: psi_diff.is_zero(),
        degree_multiset_equal: mg == mh,
        class_cospectral,
        snf_equal: g.n() == h.n() && snfs.0 == snfs.1,
        isomorphic: isomorphic(g, h),
        psi_diff,
        degree_multisets: (mg, mh),
        class_diffs,
        snfs,
    }
}

/// Verdict on a pair of graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A verifying certificate is attached.
    Certified { certificate: Certificate },
    /// The supplied certificate does not verify.
    Invalid { reason: String },
    /// A necessary condition fails.
    Refuted {
        condition: Condition,
        witness: Value,
    },
    /// Every necessary condition passes and no certificate is known.
    Unknown { passed: Vec<Condition> },
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Self::Certified { .. } => "certified",
            Self::Invalid { .. } => "invalid",
            Self::Refuted { .. } => "refuted",
            Self::Unknown { .. } => "unknown",
        }
    }

    pub fn to_json(&self) -> Value {
        let evidence = match self {
            Self::Certified { certificate } => json!({"certificate": certificate.to_json()}),
            Self::Invalid { reason } => json!({"reason": reason}),
            Self::Refuted { condition, witness } => {
                json!({"condition": condition.name(), "witness": witness})
            }
            Self::Unknown { passed } => {
                json!({"passed": passed.iter().map(Condition::name).collect::<Vec<_>>()})
            }
        };
        json!({"status": self.status(), "evidence": evidence})
    }
}

/// Decides what can be proven about `(g, h)`.
///
/// With a certificate the verdict is `Certified` or `Invalid`. Without one
/// the battery runs and the first failing condition refutes; otherwise the
/// verdict is `Unknown`, except that with `trees` set and both graphs trees,
/// isomorphism decides (a permutation certificate, or a refutation).
pub fn check_pair(
    g: &Graph,
    h: &Graph,
    cert: Option<&Certificate>,
    trees: bool,
) -> Result<(Verdict, Option<NecessaryReport>), CertifyError> {
    if g.n() != h.n() {
        return Err(CertifyError::DimensionMismatch(format!(
            "graphs on {} and {} vertices",
            g.n(),
            h.n()
        )));
    }
    if let Some(c) = cert {
        let verdict = match verify_certificate(g, h, c) {
            Ok(true) => Verdict::Certified {
                certificate: c.clone(),
            },
            Ok(false) => Verdict::Invalid {
                reason: "conjugation identities fail".into(),
            },
            Err(CertifyError::Singular) => Verdict::Invalid {
                reason: "certificate is singular".into(),
            },
            Err(e) => return Err(e),
        };
        return Ok((verdict, None));
    }
    let report = necessary_battery(g, h);
    if let Some(condition) = report.first_failure() {
        let witness = report.witness(&condition);
        return Ok((Verdict::Refuted { condition, witness }, Some(report)));
    }
    if trees && g.is_tree() && h.is_tree() {
        let verdict = match find_isomorphism(g, h) {
            Some(perm) => Verdict::Certified {
                certificate: Certificate::permutation(&perm),
            },
            None => Verdict::Refuted {
                condition: Condition::TreesIsomorphic,
                witness: report.witness(&Condition::TreesIsomorphic),
            },
        };
        return Ok((verdict, Some(report)));
    }
    let passed = report.conditions().into_iter().map(|(c, _)| c).collect();
    Ok((Verdict::Unknown { passed }, Some(report)))
}
