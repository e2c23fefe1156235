//! JSON shapes for every value the CLI prints. Each shape converts from the
//! core type and back, so `parse(print(x)) == x`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sobranch_core::branching::{Arrow, Diagram, FiniteDimComponent};
use sobranch_core::cohomology::{PairingConvention, PairingDescriptor, PairingSide};
use sobranch_core::oracle::{Counterexample, Suite, SuiteOutcome};
use sobranch_core::periods::{AqDescriptor, KType, PeriodValue};
use sobranch_core::{
    EnhancedParam, Error, GroupTag, InfChar, RepDescriptor, RepVariant, Sign, Signature, Weight,
};

fn sign_str(s: Sign) -> String {
    s.symbol().to_string()
}

fn parse_sign(s: &str) -> Result<Sign, Error> {
    s.parse().map_err(|()| Error::OutOfRange("sign"))
}

fn parse_signature(s: &str) -> Result<Signature, Error> {
    s.parse().map_err(|()| Error::OutOfRange("signature"))
}

fn parse_group(s: &str) -> Result<GroupTag, Error> {
    s.parse()
}

fn parse_big(s: &str) -> Result<BigUint, Error> {
    s.parse().map_err(|_| Error::OutOfRange("integer"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnhancedJson {
    pub group: String,
    pub weight: Vec<u32>,
    pub height: u32,
    pub signature: String,
}

impl From<&EnhancedParam> for EnhancedJson {
    fn from(e: &EnhancedParam) -> Self {
        EnhancedJson {
            group: e.group().to_string(),
            weight: e.weight().entries().to_vec(),
            height: e.height(),
            signature: e.signature().symbol().to_string(),
        }
    }
}

impl TryFrom<&EnhancedJson> for EnhancedParam {
    type Error = Error;
    fn try_from(j: &EnhancedJson) -> Result<Self, Error> {
        EnhancedParam::new(
            parse_group(&j.group)?,
            Weight::new(j.weight.clone())?,
            j.height,
            parse_signature(&j.signature)?,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum VariantJson {
    FiniteDim {
        weight: Vec<u32>,
        sig: String,
    },
    Nontempered {
        sigma: Vec<u32>,
        delta: String,
        lambda: i64,
    },
    TemperedPs {
        sigma: Vec<u32>,
        delta: String,
    },
    DiscreteSeries {
        sigma: Vec<u32>,
        lambda: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub group: String,
    #[serde(flatten)]
    pub variant: VariantJson,
}

impl From<&RepDescriptor> for RepJson {
    fn from(d: &RepDescriptor) -> Self {
        let variant = match d.variant() {
            RepVariant::FiniteDim { s, sig } => VariantJson::FiniteDim {
                weight: s.entries().to_vec(),
                sig: sign_str(*sig),
            },
            RepVariant::Nontempered {
                sigma,
                delta,
                lambda,
            } => VariantJson::Nontempered {
                sigma: sigma.entries().to_vec(),
                delta: sign_str(*delta),
                lambda: *lambda,
            },
            RepVariant::TemperedPS { sigma, delta } => VariantJson::TemperedPs {
                sigma: sigma.entries().to_vec(),
                delta: sign_str(*delta),
            },
            RepVariant::DiscreteSeries { sigma, lambda } => VariantJson::DiscreteSeries {
                sigma: sigma.entries().to_vec(),
                lambda: *lambda,
            },
        };
        RepJson {
            group: d.group().to_string(),
            variant,
        }
    }
}

impl TryFrom<&RepJson> for RepDescriptor {
    type Error = Error;
    fn try_from(j: &RepJson) -> Result<Self, Error> {
        let group = parse_group(&j.group)?;
        let w = |v: &Vec<u32>| Weight::new(v.clone());
        let variant = match &j.variant {
            VariantJson::FiniteDim { weight, sig } => RepVariant::FiniteDim {
                s: w(weight)?,
                sig: parse_sign(sig)?,
            },
            VariantJson::Nontempered {
                sigma,
                delta,
                lambda,
            } => RepVariant::Nontempered {
                sigma: w(sigma)?,
                delta: parse_sign(delta)?,
                lambda: *lambda,
            },
            VariantJson::TemperedPs { sigma, delta } => RepVariant::TemperedPS {
                sigma: w(sigma)?,
                delta: parse_sign(delta)?,
            },
            VariantJson::DiscreteSeries { sigma, lambda } => RepVariant::DiscreteSeries {
                sigma: w(sigma)?,
                lambda: *lambda,
            },
        };
        RepDescriptor::new(group, variant)
    }
}

/// A block member in both parametrizations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberJson {
    pub langlands: RepJson,
    pub enhanced: EnhancedJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfCharJson {
    pub doubled: Vec<u32>,
    pub half_odd: bool,
    pub pretty: String,
}

impl From<&InfChar> for InfCharJson {
    fn from(c: &InfChar) -> Self {
        InfCharJson {
            doubled: c.doubled().to_vec(),
            half_odd: c.half_odd(),
            pretty: c.to_string(),
        }
    }
}

impl TryFrom<&InfCharJson> for InfChar {
    type Error = Error;
    fn try_from(j: &InfCharJson) -> Result<Self, Error> {
        InfChar::from_doubled(j.doubled.iter().map(|&d| i64::from(d)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteDimJson {
    pub weight: Vec<u32>,
    pub sign: String,
    pub in_a: bool,
}

impl From<&FiniteDimComponent> for FiniteDimJson {
    fn from(c: &FiniteDimComponent) -> Self {
        FiniteDimJson {
            weight: c.weight.entries().to_vec(),
            sign: sign_str(c.sign),
            in_a: c.in_a,
        }
    }
}

impl TryFrom<&FiniteDimJson> for FiniteDimComponent {
    type Error = Error;
    fn try_from(j: &FiniteDimJson) -> Result<Self, Error> {
        Ok(FiniteDimComponent {
            weight: Weight::new(j.weight.clone())?,
            sign: parse_sign(&j.sign)?,
            in_a: j.in_a,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub arrows: Vec<[u32; 2]>,
    pub upper: Vec<EnhancedJson>,
    pub lower: Vec<EnhancedJson>,
}

impl From<&Diagram> for DiagramJson {
    fn from(d: &Diagram) -> Self {
        DiagramJson {
            arrows: d
                .arrows
                .iter()
                .map(|a| [a.from_height, a.to_height])
                .collect(),
            upper: d.upper.iter().map(EnhancedJson::from).collect(),
            lower: d.lower.iter().map(EnhancedJson::from).collect(),
        }
    }
}

impl TryFrom<&DiagramJson> for Diagram {
    type Error = Error;
    fn try_from(j: &DiagramJson) -> Result<Self, Error> {
        let parse = |v: &[EnhancedJson]| {
            v.iter()
                .map(EnhancedParam::try_from)
                .collect::<Result<Vec<_>, _>>()
        };
        let upper = parse(&j.upper)?;
        let lower = parse(&j.lower)?;
        let find = |list: &[EnhancedParam], h: u32| {
            list.iter()
                .find(|e| e.height() == h)
                .cloned()
                .ok_or(Error::OutOfRange("arrow height"))
        };
        let arrows = j
            .arrows
            .iter()
            .map(|&[i, k]| {
                Ok(Arrow {
                    from_height: i,
                    to_height: k,
                    from: find(&upper, i)?,
                    to: find(&lower, k)?,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(Diagram {
            upper,
            lower,
            arrows,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodJson {
    pub sign: i8,
    pub num: String,
    pub den: String,
    pub pi_quarters: u64,
    pub pretty: String,
}

impl From<&PeriodValue> for PeriodJson {
    fn from(v: &PeriodValue) -> Self {
        PeriodJson {
            sign: v.sign.as_i8(),
            num: v.num.to_string(),
            den: v.den.to_string(),
            pi_quarters: v.pi_quarters,
            pretty: v.to_string(),
        }
    }
}

impl TryFrom<&PeriodJson> for PeriodValue {
    type Error = Error;
    fn try_from(j: &PeriodJson) -> Result<Self, Error> {
        let sign = match j.sign {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => return Err(Error::OutOfRange("sign")),
        };
        PeriodValue::new(sign, parse_big(&j.num)?, parse_big(&j.den)?, j.pi_quarters)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTypeJson {
    pub degree: u32,
    pub ambient: u32,
    pub dimension: String,
    pub label: String,
}

impl From<&KType> for KTypeJson {
    fn from(k: &KType) -> Self {
        KTypeJson {
            degree: k.degree,
            ambient: k.ambient,
            dimension: k.dimension.to_string(),
            label: k.to_string(),
        }
    }
}

impl TryFrom<&KTypeJson> for KType {
    type Error = Error;
    fn try_from(j: &KTypeJson) -> Result<Self, Error> {
        Ok(KType {
            degree: j.degree,
            ambient: j.ambient,
            dimension: parse_big(&j.dimension)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AqJson {
    pub group: String,
    pub i: u32,
    pub lambda_part: Vec<u32>,
    pub inducing_degree: u64,
    pub levi: String,
}

impl From<&AqDescriptor> for AqJson {
    fn from(a: &AqDescriptor) -> Self {
        AqJson {
            group: a.group.to_string(),
            i: a.i,
            lambda_part: a.lambda_part.entries().to_vec(),
            inducing_degree: a.inducing_degree,
            levi: format!("SO(2)^{} x SO({},1)", a.i, a.levi_big_n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishedJson {
    pub aq: AqJson,
    pub subgroup: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub target: String,
    pub psi: String,
    /// `None` when no chain exists.
    pub chain: Option<Vec<EnhancedJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingSideJson {
    pub group: String,
    pub label: (u32, String),
    pub param: EnhancedJson,
    pub coefficient: Vec<u32>,
    pub degree: u32,
}

impl From<&PairingSide> for PairingSideJson {
    fn from(s: &PairingSide) -> Self {
        PairingSideJson {
            group: s.group.to_string(),
            label: (s.label.0, sign_str(s.label.1)),
            param: (&s.param).into(),
            coefficient: s.coefficient.entries().to_vec(),
            degree: s.degree,
        }
    }
}

impl TryFrom<&PairingSideJson> for PairingSide {
    type Error = Error;
    fn try_from(j: &PairingSideJson) -> Result<Self, Error> {
        Ok(PairingSide {
            group: parse_group(&j.group)?,
            label: (j.label.0, parse_sign(&j.label.1)?),
            param: (&j.param).try_into()?,
            coefficient: Weight::new(j.coefficient.clone())?,
            degree: j.degree,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingJson {
    pub degree_j: u32,
    pub convention: String,
    pub left: PairingSideJson,
    pub right: PairingSideJson,
    pub nonzero: bool,
}

pub fn convention_name(c: PairingConvention) -> &'static str {
    match c {
        PairingConvention::Complementary => "complementary",
        PairingConvention::SameIndex => "same-index",
    }
}

impl From<&PairingDescriptor> for PairingJson {
    fn from(p: &PairingDescriptor) -> Self {
        PairingJson {
            degree_j: p.degree_j,
            convention: convention_name(p.convention).to_string(),
            left: (&p.left).into(),
            right: (&p.right).into(),
            nonzero: p.nonzero,
        }
    }
}

impl TryFrom<&PairingJson> for PairingDescriptor {
    type Error = Error;
    fn try_from(j: &PairingJson) -> Result<Self, Error> {
        let convention = match j.convention.as_str() {
            "complementary" => PairingConvention::Complementary,
            "same-index" => PairingConvention::SameIndex,
            _ => return Err(Error::OutOfRange("convention")),
        };
        Ok(PairingDescriptor {
            degree_j: j.degree_j,
            convention,
            left: (&j.left).try_into()?,
            right: (&j.right).try_into()?,
            nonzero: j.nonzero,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleJson {
    pub case: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReportJson {
    pub suite: String,
    pub cases_run: u64,
    pub passed: bool,
    pub failures: Vec<CounterexampleJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SuiteReportJson {
    pub fn new(o: &SuiteOutcome, elapsed_ms: Option<u64>) -> Self {
        SuiteReportJson {
            suite: o.suite.name().to_string(),
            cases_run: o.cases_run,
            passed: o.passed(),
            failures: o
                .failures
                .iter()
                .map(|c| CounterexampleJson {
                    case: c.case,
                    detail: c.detail.clone(),
                })
                .collect(),
            elapsed_ms,
        }
    }
}

impl TryFrom<&SuiteReportJson> for SuiteOutcome {
    type Error = Error;
    fn try_from(j: &SuiteReportJson) -> Result<Self, Error> {
        Ok(SuiteOutcome {
            suite: j.suite.parse::<Suite>()?,
            cases_run: j.cases_run,
            failures: j
                .failures
                .iter()
                .map(|c| Counterexample {
                    case: c.case,
                    detail: c.detail.clone(),
                })
                .collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestJson {
    pub passed: bool,
    pub suites: Vec<SuiteReportJson>,
}
