//! Command-line spellings of groups, weights and parameters.
//!
//! - group: `SO(5,1)`
//! - weight: `1,1,0` (parentheses optional, empty for rank 0)
//! - enhanced: `1,1,0;h=1;sig=-`
//! - Langlands: `sigma=2,0;delta=+;lambda=0` (nontempered),
//!   `tempered;sigma=2;delta=+`, `discrete;sigma=1;lambda=2`,
//!   `finite;weight=1,1,0;sig=-`

use sobranch_core::{
    EnhancedParam, Error, GroupTag, RepDescriptor, RepVariant, Sign, Signature, Weight,
};

/// Input errors: malformed text, or well-formed text the core rejects.
#[derive(Debug)]
pub enum InputError {
    Syntax(String),
    Core(Error),
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError::Core(e)
    }
}

fn syntax(msg: impl Into<String>) -> InputError {
    InputError::Syntax(msg.into())
}

pub fn group(s: &str) -> Result<GroupTag, String> {
    s.parse().map_err(|e: Error| format!("`{s}`: {e}"))
}

pub fn sign(s: &str) -> Result<Sign, String> {
    s.parse()
        .map_err(|()| format!("`{s}` is not a sign (use + or -)"))
}

pub fn signature(s: &str) -> Result<Signature, String> {
    s.parse()
        .map_err(|()| format!("`{s}` is not a signature (use +, - or pm)"))
}

/// Comma-separated integers; the core decides monotonicity.
pub fn int_list(s: &str) -> Result<Vec<i64>, String> {
    let inner = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| format!("`{x}` is not an integer"))
        })
        .collect()
}

pub fn weight(s: &str) -> Result<Weight, InputError> {
    Ok(Weight::from_signed(&int_list(s).map_err(syntax)?)?)
}

fn fields(s: &str) -> Vec<(&str, Option<&str>)> {
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| match p.split_once('=') {
            Some((k, v)) => (k.trim(), Some(v.trim())),
            None => (p, None),
        })
        .collect()
}

pub fn enhanced(group: GroupTag, s: &str) -> Result<EnhancedParam, InputError> {
    let mut parts = s.splitn(2, ';');
    let w = weight(parts.next().unwrap_or(""))?;
    let (mut height, mut sig) = (None, None);
    for (k, v) in fields(parts.next().unwrap_or("")) {
        let v = v.ok_or_else(|| syntax(format!("`{k}` needs a value")))?;
        match k {
            "h" | "height" => {
                height = Some(
                    v.parse::<u32>()
                        .map_err(|_| syntax(format!("bad height `{v}`")))?,
                )
            }
            "sig" | "signature" => sig = Some(signature(v).map_err(syntax)?),
            _ => return Err(syntax(format!("unknown key `{k}` in enhanced parameter"))),
        }
    }
    let height = height.ok_or_else(|| syntax("enhanced parameter needs h="))?;
    let sig = sig.ok_or_else(|| syntax("enhanced parameter needs sig="))?;
    Ok(EnhancedParam::new(group, w, height, sig)?)
}

pub fn langlands(group: GroupTag, s: &str) -> Result<RepDescriptor, InputError> {
    let mut kind = None;
    let (mut sigma, mut delta, mut lambda, mut w, mut sig) = (None, None, None, None, None);
    for (k, v) in fields(s) {
        match (k, v) {
            ("tempered" | "discrete" | "finite" | "nontempered", None) => kind = Some(k),
            ("sigma", Some(v)) => sigma = Some(weight(v)?),
            ("delta", Some(v)) => delta = Some(sign(v).map_err(syntax)?),
            ("lambda", Some(v)) => {
                lambda = Some(
                    v.parse::<i64>()
                        .map_err(|_| syntax(format!("bad lambda `{v}`")))?,
                )
            }
            ("weight" | "s", Some(v)) => w = Some(weight(v)?),
            ("sig", Some(v)) => sig = Some(sign(v).map_err(syntax)?),
            _ => return Err(syntax(format!("unexpected `{k}` in Langlands parameter"))),
        }
    }
    let need = |what: &str| syntax(format!("Langlands parameter needs {what}="));
    let variant = match kind.unwrap_or("nontempered") {
        "finite" => RepVariant::FiniteDim {
            s: w.ok_or_else(|| need("weight"))?,
            sig: sig.or(delta).ok_or_else(|| need("sig"))?,
        },
        "tempered" => RepVariant::TemperedPS {
            sigma: sigma.ok_or_else(|| need("sigma"))?,
            delta: delta.ok_or_else(|| need("delta"))?,
        },
        "discrete" => RepVariant::DiscreteSeries {
            sigma: sigma.unwrap_or_else(|| Weight::zero(0)),
            lambda: lambda.ok_or_else(|| need("lambda"))?,
        },
        _ => RepVariant::Nontempered {
            sigma: sigma.ok_or_else(|| need("sigma"))?,
            delta: delta.ok_or_else(|| need("delta"))?,
            lambda: lambda.ok_or_else(|| need("lambda"))?,
        },
    };
    Ok(RepDescriptor::new(group, variant)?)
}
