//! The five subcommands. Each validates its inputs, runs the library, and
//! returns the full stdout byte stream; errors carry the exit-code class.

use optact::littlegroup::{invariance_residual, little_group_element, LittleGroupKind};
use optact::medium::{classify, transfer_closed, transfer_product, MediumParams, CLASSIFY_REL_TOL};
use optact::optics::{trajectory, JonesState};
use optact::{Mat2, Mat4};

use crate::output::{Json, Table};

pub enum CliError {
    /// Bad arguments or parameters: exit code 2.
    Validation(String),
    /// The computation produced non-finite values: exit code 1.
    Numerical(String),
}

type CmdResult = Result<String, CliError>;

fn require_finite(name: &str, value: f64) -> Result<(), CliError> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(CliError::Validation(format!(
            "parameter {name} must be finite, got {value}"
        )))
    }
}

fn finite_or_numerical(out: String) -> CmdResult {
    // Overflowing configurations (e.g. enormous gain) surface as an internal
    // numerical failure rather than as "inf" tokens in the stream.
    if out.contains("inf") || out.contains("NaN") {
        Err(CliError::Numerical(
            "computation produced non-finite values".to_string(),
        ))
    } else {
        Ok(out)
    }
}

fn mat2_json(m: &Mat2) -> Json {
    Json::Array(vec![
        Json::Array(vec![Json::Float(m.a11), Json::Float(m.a12)]),
        Json::Array(vec![Json::Float(m.a21), Json::Float(m.a22)]),
    ])
}

fn mat4_json(m: &Mat4) -> Json {
    Json::Array(
        (0..4)
            .map(|i| Json::Array((0..4).map(|j| Json::Float(m.get(i, j))).collect()))
            .collect(),
    )
}

fn regime_fields(gamma: f64, mu: f64) -> Vec<(&'static str, Json)> {
    let regime = classify(gamma, mu, CLASSIFY_REL_TOL);
    vec![
        ("regime", Json::Str(regime.name())),
        ("k", regime.k().map_or(Json::Null, Json::Float)),
        ("eta", regime.eta().map_or(Json::Null, Json::Float)),
    ]
}

pub fn cmd_classify(gamma: f64, mu1: f64, mu2: f64) -> CmdResult {
    require_finite("--gamma", gamma)?;
    require_finite("--mu1", mu1)?;
    require_finite("--mu2", mu2)?;

    let params = MediumParams::new(gamma, mu1, mu2);
    let mut fields = vec![
        ("lambda", Json::Float(params.lambda())),
        ("mu", Json::Float(params.mu())),
    ];
    fields.extend(regime_fields(gamma, params.mu()));
    finite_or_numerical(Json::Object(fields).render() + "\n")
}

pub fn cmd_transfer(gamma: f64, mu1: f64, mu2: f64, z: f64, n_steps: Option<u64>) -> CmdResult {
    require_finite("--gamma", gamma)?;
    require_finite("--mu1", mu1)?;
    require_finite("--mu2", mu2)?;
    require_finite("--z", z)?;
    if z < 0.0 {
        return Err(CliError::Validation(format!(
            "--z must be non-negative, got {z}"
        )));
    }
    if n_steps == Some(0) {
        return Err(CliError::Validation(
            "--n-steps must be at least 1".to_string(),
        ));
    }

    let params = MediumParams::new(gamma, mu1, mu2);
    let result = transfer_closed(&params, z);
    let mut fields = vec![
        ("z", Json::Float(z)),
        ("lambda", Json::Float(params.lambda())),
        ("mu", Json::Float(params.mu())),
    ];
    fields.extend(regime_fields(gamma, params.mu()));
    fields.push(("lambda_factor", Json::Float(result.lambda_factor)));
    fields.push(("matrix", mat2_json(&result.matrix)));
    if let Some(n) = n_steps {
        let product = transfer_product(&params, z, n);
        fields.push(("n_steps", Json::Int(n)));
        fields.push(("product_matrix", mat2_json(&product)));
        fields.push((
            "frobenius_distance",
            Json::Float(product.distance(&result.matrix)),
        ));
    }
    finite_or_numerical(Json::Object(fields).render() + "\n")
}

const PROPAGATE_HEADER: &[&str] = &[
    "z",
    "ex_re",
    "ex_im",
    "ey_re",
    "ey_im",
    "intensity_x",
    "intensity_y",
    "intensity_total",
    "azimuth",
    "ellipticity",
];

#[allow(clippy::too_many_arguments)]
pub fn cmd_propagate(
    gamma: f64,
    mu1: f64,
    mu2: f64,
    z_max: f64,
    samples: usize,
    amp_x: f64,
    amp_y: f64,
    phase_x: f64,
    phase_y: f64,
    csv: bool,
) -> CmdResult {
    require_finite("--gamma", gamma)?;
    require_finite("--mu1", mu1)?;
    require_finite("--mu2", mu2)?;
    require_finite("--z-max", z_max)?;
    require_finite("--amp-x", amp_x)?;
    require_finite("--amp-y", amp_y)?;
    require_finite("--phase-x", phase_x)?;
    require_finite("--phase-y", phase_y)?;
    if z_max <= 0.0 {
        return Err(CliError::Validation(format!(
            "--z-max must be positive, got {z_max}"
        )));
    }
    if samples < 2 {
        return Err(CliError::Validation(
            "--samples must be at least 2".to_string(),
        ));
    }
    if amp_x < 0.0 || amp_y < 0.0 {
        return Err(CliError::Validation(
            "amplitudes must be non-negative".to_string(),
        ));
    }

    let params = MediumParams::new(gamma, mu1, mu2);
    let initial = JonesState::from_amp_phase(amp_x, amp_y, phase_x, phase_y);
    let rows = trajectory(&params, &initial, z_max, samples)
        .into_iter()
        .map(|p| {
            (
                None,
                vec![
                    p.z,
                    p.state.ex.re,
                    p.state.ex.im,
                    p.state.ey.re,
                    p.state.ey.im,
                    p.summary.intensity_x,
                    p.summary.intensity_y,
                    p.summary.intensity_total,
                    p.summary.azimuth,
                    p.summary.ellipticity_angle,
                ],
            )
        })
        .collect();
    let table = Table {
        header: PROPAGATE_HEADER,
        tag_column: None,
        rows,
    };
    finite_or_numerical(if csv { table.to_csv() } else { table.to_json() })
}

const SWEEP_HEADER: &[&str] = &["mu", "regime", "m11", "m12", "m21", "m22", "det"];

pub fn cmd_sweep(
    gamma: f64,
    mu_from: f64,
    mu_to: f64,
    steps: usize,
    z: f64,
    lambda: f64,
    csv: bool,
) -> CmdResult {
    require_finite("--gamma", gamma)?;
    require_finite("--mu-from", mu_from)?;
    require_finite("--mu-to", mu_to)?;
    require_finite("--z", z)?;
    require_finite("--lambda", lambda)?;
    if steps < 2 {
        return Err(CliError::Validation(
            "--steps must be at least 2".to_string(),
        ));
    }
    if z < 0.0 {
        return Err(CliError::Validation(format!(
            "--z must be non-negative, got {z}"
        )));
    }

    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let mu = mu_from + (mu_to - mu_from) * i as f64 / (steps - 1) as f64;
        let params = MediumParams::from_isotropic_and_squeeze(gamma, lambda, mu);
        let result = transfer_closed(&params, z);
        let m = result.matrix;
        rows.push((
            Some(result.regime.name()),
            vec![mu, m.a11, m.a12, m.a21, m.a22, m.det()],
        ));
    }
    let table = Table {
        header: SWEEP_HEADER,
        tag_column: Some(1),
        rows,
    };
    finite_or_numerical(if csv { table.to_csv() } else { table.to_json() })
}

pub struct LittleGroupArgs {
    pub kind: Result<LittleGroupKind, optact::Error>,
    pub param: f64,
    pub param_name: &'static str,
    pub csv: bool,
}

pub fn cmd_littlegroup(args: LittleGroupArgs) -> CmdResult {
    let kind = args.kind.map_err(|e| CliError::Validation(e.to_string()))?;
    require_finite(args.param_name, args.param)?;

    let element = little_group_element(&kind, args.param);
    let reference = kind.reference_vector();
    let residual = invariance_residual(&element, &reference);

    let out = if args.csv {
        let mut header = vec!["kind".to_string(), "param".to_string()];
        header.extend(["ref_x", "ref_y", "ref_z", "ref_t"].map(String::from));
        for i in 0..4 {
            for j in 0..4 {
                header.push(format!("m{i}{j}"));
            }
        }
        header.push("residual".to_string());

        let mut fields = vec![kind.name().to_string(), crate::output::float(args.param)];
        for v in [reference.x, reference.y, reference.z, reference.t] {
            fields.push(crate::output::float(v));
        }
        for i in 0..4 {
            for j in 0..4 {
                fields.push(crate::output::float(element.get(i, j)));
            }
        }
        fields.push(crate::output::float(residual));
        format!("{}\n{}\n", header.join(","), fields.join(","))
    } else {
        Json::Object(vec![
            ("kind", Json::Str(kind.name())),
            ("param", Json::Float(args.param)),
            (
                "reference",
                Json::Array(
                    [reference.x, reference.y, reference.z, reference.t]
                        .into_iter()
                        .map(Json::Float)
                        .collect(),
                ),
            ),
            ("matrix", mat4_json(&element)),
            ("residual", Json::Float(residual)),
        ])
        .render()
            + "\n"
    };
    finite_or_numerical(out)
}
