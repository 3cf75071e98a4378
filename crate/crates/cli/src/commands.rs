use std::fmt;

use serde_json::{json, Value};

use twisted_dirac::line_bundle::admissible_indices;
use twisted_dirac::normal::{normal_highest_weight, normal_multiplicity};
use twisted_dirac::{
    bounds_report, decompose_normal_spinor, enumerate_line_bundle, enumerate_normal,
    family_highest_weight, family_minima, family_multiplicity, lowest_eigenvalue,
    sharpness_report, weyl_dim, EmbeddingParams, Error, Verdict,
};

use crate::render::{self, big, rational, OutputFormat};
use crate::{EXIT_INTERNAL, EXIT_USAGE};

#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    pub(crate) fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "error: {msg}"),
            Failure::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        if err.is_validation() {
            Failure::Usage(err.to_string())
        } else {
            Failure::Internal(err.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

pub(crate) fn line_bundle(d: i64, m: i64, max_eig: u64, format: OutputFormat) -> Outcome {
    let spectrum = enumerate_line_bundle(d, m, max_eig)?;
    Ok(render::spectrum(&spectrum, format))
}

pub(crate) fn normal(d: i64, n: i64, max_eig: u64, format: OutputFormat) -> Outcome {
    let spectrum = enumerate_normal(EmbeddingParams::new(d, n)?, max_eig)?;
    Ok(render::spectrum(&spectrum, format))
}

pub(crate) fn lowest(d: i64, n: i64, format: OutputFormat) -> Outcome {
    let params = EmbeddingParams::new(d, n)?;
    let lowest = lowest_eigenvalue(params);
    let minima = family_minima(params)?;
    if minima.values().min() != Some(&lowest) {
        return Err(Failure::Internal(format!(
            "family minima {minima:?} disagree with lowest eigenvalue {lowest}"
        )));
    }
    let mut fields = vec![("d", json!(d)), ("n", json!(n)), ("lowest", json!(lowest))];
    for (family, value) in &minima {
        let key = match family.number() {
            1 => "min_family_1",
            2 => "min_family_2",
            _ => "min_family_3",
        };
        fields.push((key, json!(value)));
    }
    Ok(render::record(&format!("lowest eigenvalue on {params}"), &fields, format))
}

pub(crate) fn decompose(d: i64, n: i64, format: OutputFormat) -> Outcome {
    let params = EmbeddingParams::new(d, n)?;
    let terms = decompose_normal_spinor(params);
    let rows: Vec<Vec<String>> = terms
        .iter()
        .enumerate()
        .map(|(s, t)| vec![s.to_string(), t.power.0.to_string(), t.multiplicity.to_string()])
        .collect();
    let headers = ["s", "power", "multiplicity"];
    Ok(match format {
        OutputFormat::Table => format!(
            "normal spinor bundle of {params} as sums of gamma^power\n{}",
            render::table(&headers, &rows)
        ),
        OutputFormat::Csv => render::csv(&headers, &rows),
        OutputFormat::Json => {
            let items: Vec<Value> = terms
                .iter()
                .enumerate()
                .map(|(s, t)| json!({"s": s, "power": t.power.0, "multiplicity": big(&t.multiplicity)}))
                .collect();
            render::json(&json!({"d": d, "n": n, "terms": items}))
        }
    })
}

pub(crate) fn bounds(d: i64, n: i64, format: OutputFormat) -> Outcome {
    let params = EmbeddingParams::new(d, n)?;
    let r = bounds_report(params)?;
    let fields = [
        ("d", json!(d)),
        ("n", json!(n)),
        ("alpha_sq", rational(&r.alpha_sq)),
        ("upper_bound", rational(&r.upper_bound)),
        ("mu", big(&r.mu)),
        ("scal0", json!(r.scal0)),
        ("kappa1", json!(r.kappa1)),
        ("kirchberg_bound", rational(&r.kirchberg_bound)),
        ("lowest", json!(r.lowest)),
    ];
    Ok(render::record(&format!("eigenvalue bounds on {params}"), &fields, format))
}

pub(crate) fn sharpness(d: i64, n: i64, format: OutputFormat) -> Outcome {
    let params = EmbeddingParams::new(d, n)?;
    let r = sharpness_report(params)?;
    let verdict = match r.verdict {
        Verdict::Sharp => "sharp",
        Verdict::NotSharp => "not sharp",
    };
    let fields = [
        ("d", json!(d)),
        ("n", json!(n)),
        ("upper_bound", json!(r.upper_bound)),
        ("mu", big(&r.mu)),
        ("mult_zero", big(&r.mult_zero)),
        ("mult_bound", big(&r.mult_bound)),
        ("count_below", big(&r.count_below)),
        ("cumulative_below", big(&r.cumulative_below)),
        ("verdict", json!(verdict)),
    ];
    Ok(render::record(&format!("sharpness of the upper bound on {params}"), &fields, format))
}

/// Checks closed-form multiplicities against the Weyl dimension formula on
/// every twist `γ_d^{(n−d)/2−s}`, for both the line-bundle and the normal
/// formulas, with `l` up to `max_l` above each lower bound.
pub(crate) fn verify(d: i64, n: i64, max_l: u32, format: OutputFormat) -> Outcome {
    let params = EmbeddingParams::new(d, n)?;
    let mut line_cases = 0u64;
    let mut normal_cases = 0u64;
    for (s, term) in decompose_normal_spinor(params).into_iter().enumerate() {
        let m = term.power;
        for idx in admissible_indices(d, m, max_l as i64)? {
            let weight = family_highest_weight(d, m, &idx)?;
            let oracle = weyl_dim(d as usize, &weight).map_err(|e| {
                Failure::Internal(format!("{idx} at m = {}: Weyl formula failed: {e}", m.0))
            })?;
            let closed = family_multiplicity(d, m, &idx).map_err(|e| {
                Failure::Internal(format!("{idx} at m = {}: {e}", m.0))
            })?;
            if closed != oracle {
                return Err(Failure::Internal(format!(
                    "mismatch at {idx}, m = {}: closed form {closed}, Weyl dimension {oracle}",
                    m.0
                )));
            }
            line_cases += 1;

            let nidx = idx.with_s(s as i64);
            let normal = normal_multiplicity(params, &nidx)
                .map_err(|e| Failure::Internal(format!("{nidx}: {e}")))?;
            let normal_weight = normal_highest_weight(params, &nidx)?;
            if normal != &oracle * &term.multiplicity || normal_weight != weight {
                return Err(Failure::Internal(format!(
                    "mismatch at {nidx}: normal multiplicity {normal}, expected {} x {oracle}",
                    term.multiplicity
                )));
            }
            normal_cases += 1;
        }
    }
    let fields = [
        ("d", json!(d)),
        ("n", json!(n)),
        ("max_l", json!(max_l)),
        ("line_bundle_cases", json!(line_cases)),
        ("normal_cases", json!(normal_cases)),
        ("status", json!("ok")),
    ];
    Ok(render::record(
        &format!("closed-form multiplicities agree with the Weyl dimension formula on {params}"),
        &fields,
        format,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classification() {
        let f: Failure = Error::Consistency("multiplicity is not integral".into()).into();
        assert_eq!(f.code(), EXIT_INTERNAL);
        let f: Failure = Error::InvalidParameter("d must be odd, got 2".into()).into();
        assert_eq!(f.code(), EXIT_USAGE);
        assert!(f.to_string().contains("d must be odd"));
        let f: Failure = Error::InadmissibleWeight { weight: "(-2)".into(), value: "-1".into() }.into();
        assert_eq!(f.code(), EXIT_INTERNAL);
    }
}
