//! Versioned JSON documents shared by the library and the command line.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::acceptance::CriterionReport;
use crate::analysis::{cycle_indices, DetReport, DetReportJson, LeadingPrediction};
use crate::construct::HypergeomSolution;
use crate::error::{Error, Result};
use crate::kz::{InstanceJson, KzInstance, VerificationReport};
use crate::oracle::Reduction;
use crate::poly::{LeadingTerm, PolyJson, VecPoly, VecPolyJson};

pub const SCHEMA: &str = "fpkz/1";

/// A document: the schema tag, a kind, and the body's fields inline.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub schema: String,
    pub kind: String,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Document<T> {
    pub fn new(kind: &str, body: T) -> Self {
        Document {
            schema: SCHEMA.to_string(),
            kind: kind.to_string(),
            body,
        }
    }
}

impl<T: Serialize> Document<T> {
    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

fn format_error(e: serde_json::Error) -> Error {
    Error::Format(format!("line {}, column {}: {e}", e.line(), e.column()))
}

/// Parses JSON text, reporting the location of any syntax or shape error.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(format_error)
}

/// Reads a polynomial vector from either a bare vector document
/// (`{"p", "arity", "coords"}`) or any document carrying it under `"poly"`.
pub fn parse_vecpoly(text: &str) -> Result<VecPoly> {
    let value: Value = parse(text)?;
    if let Some(schema) = value.get("schema") {
        if schema != SCHEMA {
            return Err(Error::Format(format!("unsupported schema {schema}")));
        }
    }
    let inner = match value.get("poly") {
        Some(v) if value.get("coords").is_none() => v.clone(),
        _ => value,
    };
    let doc: VecPolyJson = serde_json::from_value(inner).map_err(|e| Error::Format(e.to_string()))?;
    VecPoly::from_json(&doc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoBody {
    pub instance: InstanceJson,
    pub big_m: Vec<u32>,
    pub sum_big_m: u32,
    pub r: usize,
    pub ample: bool,
    /// One-based `i(l)` for `l = 1..=r`.
    pub i_of_l: Vec<usize>,
    pub degrees: Vec<u32>,
}

pub fn info(inst: &KzInstance) -> InfoBody {
    InfoBody {
        instance: inst.to_json(),
        big_m: inst.big_m().to_vec(),
        sum_big_m: inst.sum_big_m(),
        r: inst.rank(),
        ample: inst.is_ample(),
        i_of_l: cycle_indices(inst),
        degrees: (1..=inst.rank()).map(|l| inst.delta(l).expect("l <= r")).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionBody {
    pub instance: InstanceJson,
    pub l: usize,
    pub degree: u32,
    pub poly: VecPolyJson,
}

pub fn solution(inst: &KzInstance, s: &HypergeomSolution) -> SolutionBody {
    SolutionBody {
        instance: inst.to_json(),
        l: s.l,
        degree: s.degree,
        poly: s.poly.to_json(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationStatus {
    pub j: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyBody {
    pub instance: InstanceJson,
    pub passed: bool,
    pub algebraic_holds: bool,
    pub equations: Vec<EquationStatus>,
    pub first_failure: Option<String>,
}

pub fn verification(inst: &KzInstance, rep: &VerificationReport) -> VerifyBody {
    VerifyBody {
        instance: inst.to_json(),
        passed: rep.passed(),
        algebraic_holds: rep.algebraic_residual.is_zero(),
        equations: rep
            .equations
            .iter()
            .map(|e| EquationStatus {
                j: e.j,
                holds: e.residual.is_zero(),
            })
            .collect(),
        first_failure: rep.first_failure(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingBody {
    pub instance: InstanceJson,
    pub l: usize,
    /// One-based ordering, most significant variable first.
    pub sigma: Vec<usize>,
    pub coeff: Vec<u32>,
    pub exp: Vec<u32>,
    /// One-based position in `sigma` of the distinguished variable.
    pub i_of_l: usize,
    pub predicted_scalar: u32,
    pub prediction_matches: bool,
}

pub fn leading(inst: &KzInstance, lt: &LeadingTerm, pred: &LeadingPrediction) -> LeadingBody {
    LeadingBody {
        instance: inst.to_json(),
        l: pred.l,
        sigma: lt.sigma.one_based(),
        coeff: lt.coeff_values(),
        exp: lt.exponents(),
        i_of_l: pred.i_of_l,
        predicted_scalar: pred.scalar.value(),
        prediction_matches: pred.coeff_vector.a_coords == lt.coeff_values() && pred.exponents == lt.exponents(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetBody {
    pub instance: InstanceJson,
    #[serde(flatten)]
    pub report: DetReportJson,
}

pub fn determinant(inst: &KzInstance, rep: &DetReport) -> DetBody {
    DetBody {
        instance: inst.to_json(),
        report: rep.to_json(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBody {
    pub instance: InstanceJson,
    pub degree: u32,
    pub dimension: usize,
    pub basis: Vec<VecPolyJson>,
}

pub fn search(inst: &KzInstance, degree: u32, basis: &[VecPoly]) -> SearchBody {
    SearchBody {
        instance: inst.to_json(),
        degree,
        dimension: basis.len(),
        basis: basis.iter().map(VecPoly::to_json).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub l: usize,
    pub coeff_poly: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockingJson {
    pub coeff: Vec<u32>,
    pub exp: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReduceBody {
    Reduced {
        instance: InstanceJson,
        certificate: Vec<CertificateJson>,
    },
    Irreducible {
        instance: InstanceJson,
        blocking: BlockingJson,
        remainder: VecPolyJson,
    },
}

pub fn reduction(inst: &KzInstance, r: &Reduction) -> ReduceBody {
    match r {
        Reduction::Reduced(cert) => ReduceBody::Reduced {
            instance: inst.to_json(),
            certificate: cert
                .iter()
                .map(|e| CertificateJson {
                    l: e.l,
                    coeff_poly: e.coeff.to_json(),
                })
                .collect(),
        },
        Reduction::Irreducible { blocking, remainder } => ReduceBody::Irreducible {
            instance: inst.to_json(),
            blocking: BlockingJson {
                coeff: blocking.coeff_values(),
                exp: blocking.exponents(),
            },
            remainder: remainder.to_json(),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaBody {
    pub p: u32,
    pub x: i64,
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionJson {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    pub seconds: f64,
    pub notes: Vec<String>,
    pub first_failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelftestBody {
    pub passed: bool,
    pub criteria: Vec<CriterionJson>,
}

pub fn selftest(reports: &[CriterionReport]) -> SelftestBody {
    SelftestBody {
        passed: reports.iter().all(CriterionReport::passed),
        criteria: reports
            .iter()
            .map(|r| CriterionJson {
                id: r.id,
                title: r.title.to_string(),
                passed: r.passed(),
                checks: r.checks,
                failures: r.failure_count,
                seconds: r.elapsed.as_secs_f64(),
                notes: r.notes.clone(),
                first_failures: r.failures.clone(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::hypergeometric_solution;

    #[test]
    fn solution_document_round_trip() {
        let inst = KzInstance::new(5, 3, &[1, 1]).unwrap();
        let s = hypergeometric_solution(&inst, 1).unwrap();
        let doc = Document::new("solution", solution(&inst, &s));
        let text = doc.to_string_pretty();
        assert!(text.contains("\"schema\": \"fpkz/1\""));
        let back: Document<SolutionBody> = parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_string_pretty(), text);
        assert_eq!(parse_vecpoly(&text).unwrap(), s.poly);
        assert_eq!(parse_vecpoly(&serde_json::to_string(&s.poly.to_json()).unwrap()).unwrap(), s.poly);
    }

    #[test]
    fn parse_errors_carry_location() {
        let err = parse::<Document<InfoBody>>("{\n  \"schema\": \"fpkz/1\",\n  oops").unwrap_err();
        match err {
            Error::Format(msg) => assert!(msg.starts_with("line 3, column"), "{msg}"),
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_vecpoly("[1, 2"), Err(Error::Format(_))));
        assert!(matches!(parse_vecpoly("{\"schema\": \"other/9\"}"), Err(Error::Format(_))));
        assert!(parse_vecpoly("{\"p\": 4, \"arity\": 1, \"coords\": []}").is_err());
    }

    #[test]
    fn reduction_is_tagged() {
        let inst = KzInstance::new(3, 2, &[1, 1]).unwrap();
        let f = inst.field();
        let sol = VecPoly::from_scalar_vector(&crate::poly::Poly::binomial_power(f, 2, 0, 1, 2), &[1, 2]);
        let r = crate::oracle::reduce_to_hypergeometric(&inst, &sol).unwrap();
        let text = serde_json::to_string(&Document::new("reduction", reduction(&inst, &r))).unwrap();
        assert!(text.contains("\"status\":\"irreducible\""));
        let back: Document<ReduceBody> = parse(&text).unwrap();
        assert!(matches!(back.body, ReduceBody::Irreducible { .. }));
    }
}
