//! Machine-readable reports. Every polynomial is written in the input
//! grammar, so each string parses back to the same polynomial.

use serde::Serialize;

use crate::base_locus::{BaseLocusReport, ConjugatePointFamily};
use crate::map::RationalMap;
use crate::reparam::{ReparamOutcome, ReparamResult, TransversalityReport, Verdict};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyReport {
    pub min_poly: String,
    pub point: String,
    pub family_size: usize,
    pub multiplicity: Option<u32>,
}

impl From<&ConjugatePointFamily> for FamilyReport {
    fn from(f: &ConjugatePointFamily) -> Self {
        FamilyReport {
            min_poly: f.field.min_poly_text(),
            point: f.point.to_string(),
            family_size: f.family_size(),
            multiplicity: f.multiplicity,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BaseLocusJson {
    pub families: Vec<FamilyReport>,
    pub total_multiplicity: u64,
}

impl From<&BaseLocusReport> for BaseLocusJson {
    fn from(r: &BaseLocusReport) -> Self {
        BaseLocusJson {
            families: r.families.iter().map(FamilyReport::from).collect(),
            total_multiplicity: r.total_multiplicity,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReasonJson {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointJson {
    #[serde(flatten)]
    pub family: FamilyReport,
    pub local_multiplicity: u32,
    pub is_perfect_square: bool,
    pub tangent_gcd_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransversalityJson {
    pub transversal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<ReasonJson>,
    pub points: Vec<PointJson>,
    pub total_multiplicity: u64,
}

impl From<&TransversalityReport> for TransversalityJson {
    fn from(r: &TransversalityReport) -> Self {
        let reason = match &r.verdict {
            Verdict::Transversal => None,
            Verdict::NotTransversal(why) => Some(ReasonJson { code: why.code().into(), message: why.to_string() }),
        };
        let points = r
            .per_point
            .iter()
            .map(|p| PointJson {
                family: FamilyReport::from(&p.family),
                local_multiplicity: p.local_multiplicity,
                is_perfect_square: p.is_perfect_square,
                tangent_gcd_trivial: p.tangent_gcd_trivial,
            })
            .collect();
        TransversalityJson {
            transversal: r.is_transversal(),
            reason,
            points,
            total_multiplicity: r.base_locus.total_multiplicity,
        }
    }
}

pub fn map_strings(map: &RationalMap) -> Vec<String> {
    map.components().iter().map(|c| c.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReparamJson {
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<ReasonJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parametrization: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub affine: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projectivity: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_bar: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_bar: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversality: Option<TransversalityJson>,
}

impl From<&ReparamResult> for ReparamJson {
    fn from(r: &ReparamResult) -> Self {
        let mut out = ReparamJson {
            outcome: r.outcome.name().into(),
            reason: None,
            parametrization: None,
            affine: None,
            projectivity: None,
            s_bar: None,
            r_bar: None,
            surface_degree: None,
            transversality: r.transversality.as_ref().map(TransversalityJson::from),
        };
        let affine = |m: &RationalMap| crate::reparam::affine_form(m).iter().map(|p| p.to_string()).collect();
        match &r.outcome {
            ReparamOutcome::AlreadyAlmostPolynomial { parametrization, projectivity } => {
                out.parametrization = Some(map_strings(parametrization));
                out.affine = Some(affine(parametrization));
                out.projectivity = Some(map_strings(projectivity));
            }
            ReparamOutcome::Polynomial(p) => {
                out.parametrization = Some(map_strings(&p.q));
                out.affine = Some(affine(&p.q));
                out.projectivity = Some(map_strings(&p.projectivity));
                out.s_bar = Some(map_strings(&p.s_bar));
                out.r_bar = Some(map_strings(&p.r_bar));
                out.surface_degree = Some(p.surface_degree);
            }
            ReparamOutcome::NoPolynomialParametrization(why) => {
                out.reason = Some(ReasonJson { code: why.code().into(), message: why.to_string() });
            }
            ReparamOutcome::NotApplicable(why) => {
                out.reason = Some(ReasonJson { code: why.code().into(), message: why.to_string() });
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeJson {
    pub map_degree: u32,
    pub base_multiplicity: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface_degree: Option<u32>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_locus::{base_locus, BaseLocusOptions};

    #[test]
    fn base_locus_json_shape() {
        let map = RationalMap::parse(&["t2*t3", "t1*t3", "t1*t2"]).unwrap();
        let r = base_locus(&map, &BaseLocusOptions::default()).unwrap();
        let v = serde_json::to_value(BaseLocusJson::from(&r)).unwrap();
        assert_eq!(v["total_multiplicity"], 3);
        assert_eq!(v["families"].as_array().unwrap().len(), 3);
        let fam = &v["families"][0];
        for key in ["min_poly", "point", "family_size", "multiplicity"] {
            assert!(fam.get(key).is_some(), "{key}");
        }
    }
}
