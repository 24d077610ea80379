//! One function per subcommand. Each validates its keys, runs the mapped
//! library call, and returns the rendered output for main to stream.

use serde_json::json;

use weylbox::algebra::{
    build_unitary, gamma0_gamma1, gamma_pair, is_clifford_pair, pauli, Axis, Chirality,
    EnergySign, Mat2, Representation, UnitaryParams, C64,
};
use weylbox::boundary::{
    bc_1d_weyl, bc_axis3_incoming, bc_dirac_rep, bc_via_transform, bc_weyl_axis, boundary_term,
    classify_confinement, mit_bag_spec, reality_admissible, subspace_distance, BoundarySpec,
    Confinement, SUBSPACE_TOL,
};
use weylbox::dynamics::{gaussian_spinor, gaussian_wave, EvolutionRun, WeylEvolution};
use weylbox::kinematics::{
    boost_1d, boost_4d, classical_velocity_3d, covariance_residual, covariance_residual_1d,
    helicity_eigenvalue, rotation_4d, spin_along_motion, PlaneWave3D,
};
use weylbox::representations::rep_change_matrix;
use weylbox::spectral::{
    eigenfunctions, find_spectrum, shooting_sigma_min, spectrum_1d_weyl, SpectralProblem,
    DEGENERACY_TOL, DUPLICATE_K_TOL, ROOT_ACCEPT_TOL,
};
use weylbox::{Error, Result};

use crate::args::{Format, Params};
use crate::render::{
    csv, fmt_complex, json_doc, mat2_json, mat2_text, mat4_json, mat4_text, num, real_mat_json,
    real_mat_text,
};

/// Fixed reference momentum for the helicity table; any nonzero direction
/// gives the same kind/sign pattern.
const P_REF: [f64; 3] = [0.3, -0.7, 1.1];

/// Family member from either --axis j or --rep name, plus (mu, m0..m3).
fn family_member(p: &Params) -> Result<(BoundarySpec, UnitaryParams)> {
    let axis = p.axis_opt()?;
    let rep = p.rep_opt()?;
    let params = p.unitary()?;
    let u = build_unitary(&params);
    let spec = match (axis, rep) {
        (Some(_), Some(_)) => {
            return Err(Error::Argument(
                "give either --axis or --rep, not both".into(),
            ))
        }
        (Some(axis), None) => bc_weyl_axis(axis, &u)?,
        (None, Some(rep)) => bc_dirac_rep(rep, &u)?,
        (None, None) => {
            return Err(Error::Argument(
                "missing required key --axis (or --rep) to pick the family".into(),
            ))
        }
    };
    Ok((spec, params))
}

pub fn matrices(p: &Params) -> Result<String> {
    p.check_keys(&["rep", "format", "output-path"])?;
    let format = p.format(Format::Text, &[Format::Text, Format::Json])?;
    let reps: Vec<Representation> = match p.rep_opt()? {
        Some(rep) => vec![rep],
        None => Representation::ALL.to_vec(),
    };

    let mut rows = Vec::new();
    let mut text = String::new();
    for rep in &reps {
        let (g0, g1) = gamma_pair(*rep);
        let v = gamma0_gamma1(*rep);
        let clifford = is_clifford_pair(&g0, &g1, 1e-12);
        let axis = weylbox::boundary::rep_family_axis(*rep);
        match format {
            Format::Text => {
                text.push_str(&format!("representation: {}\n", rep.name()));
                text.push_str(&format!("  family axis (of gamma0*gamma1): {}\n", axis.index()));
                text.push_str(&format!("  clifford pair: {clifford}\n"));
                text.push_str("  gamma0:\n");
                text.push_str(&mat2_text(&g0, "    "));
                text.push_str("  gamma1:\n");
                text.push_str(&mat2_text(&g1, "    "));
                text.push_str("  gamma0*gamma1:\n");
                text.push_str(&mat2_text(&v, "    "));
            }
            _ => rows.push(json!({
                "representation": rep.name(),
                "family_axis": axis.index(),
                "clifford_pair": clifford,
                "gamma0": mat2_json(&g0),
                "gamma1": mat2_json(&g1),
                "gamma0_gamma1": mat2_json(&v),
            })),
        }
    }
    match format {
        Format::Text => Ok(text),
        _ => Ok(json_doc(json!({"command": "matrices"}), json!(rows))),
    }
}

/// Text form doubles as a config file: the non-comment lines reconstruct
/// the same member when fed back through --config.
pub fn bc(p: &Params) -> Result<String> {
    p.check_keys(&["axis", "rep", "mu", "m0", "m1", "m2", "m3", "format", "output-path"])?;
    let format = p.format(Format::Text, &[Format::Text, Format::Json])?;
    let (spec, params) = family_member(p)?;
    let class = classify_confinement(&spec, SUBSPACE_TOL);
    let real = reality_admissible(&spec);
    let label = spec.context().label();

    let context_line = match p.rep_opt()? {
        Some(rep) => format!("rep={}", rep.name()),
        None => format!("axis={}", spec.axis().index()),
    };

    if format == Format::Json {
        let mut row = serde_json::Map::new();
        match p.rep_opt()? {
            Some(rep) => {
                row.insert("rep".into(), json!(rep.name()));
            }
            None => {
                row.insert("axis".into(), json!(spec.axis().index()));
            }
        }
        row.insert("mu".into(), json!(params.mu));
        for (i, v) in params.m.iter().enumerate() {
            row.insert(format!("m{i}"), json!(v));
        }
        return Ok(json_doc(
            json!({
                "command": "bc",
                "label": label,
                "reality_admissible": real,
                "confinement": class.label.name(),
                "wall_current_norm_at_0": class.wall_current_norm_at_0,
                "wall_current_norm_at_len": class.wall_current_norm_at_len,
                "subspace_tolerance": SUBSPACE_TOL,
            }),
            json!([serde_json::Value::Object(row)]),
        ));
    }

    let u = spec.unitary();
    let mut out = String::new();
    out.push_str(&format!("# {label} family member\n"));
    out.push_str(&format!("{context_line}\n"));
    out.push_str(&format!("mu={}\n", num(params.mu)));
    for (i, v) in params.m.iter().enumerate() {
        out.push_str(&format!("m{i}={}\n", num(*v)));
    }
    out.push_str("# unitary:\n");
    for row in &u.e {
        out.push_str(&format!(
            "#   [{}  {}]\n",
            fmt_complex(row[0]),
            fmt_complex(row[1])
        ));
    }
    out.push_str(&format!("# reality admissible: {real}\n"));
    out.push_str(&format!("# confinement: {}\n", class.label.name()));
    out.push_str(&format!(
        "# wall current norm at x=0: {}\n",
        num(class.wall_current_norm_at_0)
    ));
    out.push_str(&format!(
        "# wall current norm at x=l: {}\n",
        num(class.wall_current_norm_at_len)
    ));
    Ok(out)
}

pub fn classify(p: &Params) -> Result<String> {
    p.check_keys(&["axis", "rep", "mu", "m0", "m1", "m2", "m3", "format", "output-path"])?;
    let format = p.format(Format::Text, &[Format::Text, Format::Json])?;
    let (spec, _) = family_member(p)?;
    let class = classify_confinement(&spec, SUBSPACE_TOL);
    let real = reality_admissible(&spec);
    let label = spec.context().label();

    match format {
        Format::Json => Ok(json_doc(
            json!({"command": "classify", "label": label, "subspace_tolerance": SUBSPACE_TOL}),
            json!([{
                "confinement": class.label.name(),
                "wall_current_norm_at_0": class.wall_current_norm_at_0,
                "wall_current_norm_at_len": class.wall_current_norm_at_len,
                "reality_admissible": real,
            }]),
        )),
        _ => Ok(format!(
            "member: {label}\nconfinement: {}\nwall current norm at x=0: {}\nwall current norm at x=l: {}\nreality admissible: {real}\n",
            class.label.name(),
            num(class.wall_current_norm_at_0),
            num(class.wall_current_norm_at_len),
        )),
    }
}

pub fn spectrum(p: &Params) -> Result<String> {
    p.check_keys(&[
        "axis", "rep", "mu", "m0", "m1", "m2", "m3", "length", "kmin", "kmax", "a", "format",
        "output-path",
    ])?;
    let format = p.format(Format::Csv, &[Format::Csv, Format::Json])?;
    let (spec, _) = family_member(p)?;
    let length = p.f64_or("length", 1.0)?;
    let kind = p.kind_or_first()?;
    let k_min = p.f64_required("kmin")?;
    let k_max = p.f64_required("kmax")?;
    let prob = SpectralProblem::new(spec, length, kind)?;
    let pairs = find_spectrum(&prob, k_min, k_max)?;

    match format {
        Format::Json => {
            let rows: Vec<_> = pairs
                .iter()
                .enumerate()
                .map(|(i, pair)| {
                    json!({"index": i, "k": pair.k, "energy": pair.energy, "degeneracy": pair.degeneracy})
                })
                .collect();
            Ok(json_doc(spectral_meta("spectrum", &prob, k_min, k_max), json!(rows)))
        }
        _ => {
            let rows: Vec<Vec<String>> = pairs
                .iter()
                .enumerate()
                .map(|(i, pair)| {
                    vec![
                        i.to_string(),
                        num(pair.k),
                        num(pair.energy),
                        pair.degeneracy.to_string(),
                    ]
                })
                .collect();
            Ok(csv("index,k,energy,degeneracy", &rows))
        }
    }
}

fn spectral_meta(command: &str, prob: &SpectralProblem, k_min: f64, k_max: f64) -> serde_json::Value {
    json!({
        "command": command,
        "family": prob.bc().context().label(),
        "length": prob.length(),
        "a": prob.chirality().index(),
        "k_window": [k_min, k_max],
        "units": "1/length",
        "tolerances": {
            "root_accept": ROOT_ACCEPT_TOL,
            "degeneracy": DEGENERACY_TOL,
            "duplicate_k": DUPLICATE_K_TOL,
        },
    })
}

pub fn eigenfunction(p: &Params) -> Result<String> {
    p.check_keys(&[
        "axis", "rep", "mu", "m0", "m1", "m2", "m3", "length", "kmin", "kmax", "a", "grid",
        "format", "output-path",
    ])?;
    let format = p.format(Format::Csv, &[Format::Csv, Format::Json])?;
    let (spec, _) = family_member(p)?;
    let length = p.f64_or("length", 1.0)?;
    let kind = p.kind_or_first()?;
    let k_min = p.f64_required("kmin")?;
    let k_max = p.f64_required("kmax")?;
    let grid = p.usize_or("grid", 201)?;
    let prob = SpectralProblem::new(spec, length, kind)?;
    let pairs = find_spectrum(&prob, k_min, k_max)?;
    let pair = match pairs.len() {
        0 => {
            return Err(Error::Consistency(format!(
                "no eigenvalue in the window [{k_min}, {k_max}]; widen it"
            )))
        }
        1 => &pairs[0],
        n => {
            return Err(Error::Consistency(format!(
                "window [{k_min}, {k_max}] holds {n} eigenvalues; narrow it to isolate one"
            )))
        }
    };
    let branches = eigenfunctions(&prob, pair, grid)?;

    match format {
        Format::Json => {
            let mut rows = Vec::new();
            for (b, spinor) in branches.iter().enumerate() {
                for (i, x) in spinor.grid.iter().enumerate() {
                    let v = spinor.values[i];
                    rows.push(json!({
                        "branch": b,
                        "x": x,
                        "re_top": v[0].re,
                        "im_top": v[0].im,
                        "re_bottom": v[1].re,
                        "im_bottom": v[1].im,
                    }));
                }
            }
            let mut meta = spectral_meta("eigenfunction", &prob, k_min, k_max);
            let obj = meta.as_object_mut().expect("meta is an object");
            obj.insert("k".into(), json!(pair.k));
            obj.insert("energy".into(), json!(pair.energy));
            obj.insert("degeneracy".into(), json!(pair.degeneracy));
            obj.insert("grid".into(), json!(grid));
            Ok(json_doc(meta, json!(rows)))
        }
        _ => {
            let mut out = String::from("x,re_top,im_top,re_bottom,im_bottom\n");
            out.push_str(&format!(
                "# k={} energy={} degeneracy={}\n",
                num(pair.k),
                num(pair.energy),
                pair.degeneracy
            ));
            for (b, spinor) in branches.iter().enumerate() {
                if b > 0 {
                    out.push_str(&format!("# branch {} of {}\n", b + 1, branches.len()));
                }
                for (i, x) in spinor.grid.iter().enumerate() {
                    let v = spinor.values[i];
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        num(*x),
                        num(v[0].re),
                        num(v[0].im),
                        num(v[1].re),
                        num(v[1].im)
                    ));
                }
            }
            Ok(out)
        }
    }
}

pub fn weyl1d(p: &Params) -> Result<String> {
    p.check_keys(&["eta", "length", "a", "kmin", "kmax", "format", "output-path"])?;
    let format = p.format(Format::Csv, &[Format::Csv, Format::Json])?;
    let bc = bc_1d_weyl(p.f64_required("eta")?)?;
    let length = p.f64_or("length", 1.0)?;
    let kind = p.kind_or_first()?;
    let k_min = p.f64_required("kmin")?;
    let k_max = p.f64_required("kmax")?;
    let modes = spectrum_1d_weyl(&bc, length, kind, k_min, k_max)?;

    match format {
        Format::Json => {
            let rows: Vec<_> = modes
                .iter()
                .map(|m| json!({"index": m.n, "k": m.k, "energy": m.energy, "degeneracy": 1}))
                .collect();
            Ok(json_doc(
                json!({
                    "command": "weyl1d",
                    "eta": bc.eta(),
                    "length": length,
                    "a": kind.index(),
                    "k_window": [k_min, k_max],
                    "reality_admissible": bc.reality_admissible(),
                    "units": "1/length",
                }),
                json!(rows),
            ))
        }
        _ => {
            let rows: Vec<Vec<String>> = modes
                .iter()
                .map(|m| vec![m.n.to_string(), num(m.k), num(m.energy), "1".into()])
                .collect();
            Ok(csv("index,k,energy,degeneracy", &rows))
        }
    }
}

pub fn boost(p: &Params) -> Result<String> {
    p.check_keys(&["axis", "omega", "format", "output-path"])?;
    let format = p.format(Format::Text, &[Format::Text, Format::Json])?;
    let omega = p.f64_required("omega")?;

    if let Some(axis) = p.axis_opt()? {
        let (lambda, spinor) = boost_4d(axis, omega)?;
        let residual = covariance_residual(&lambda, &spinor)?;
        return Ok(match format {
            Format::Json => json_doc(
                json!({"command": "boost", "axis": axis.index(), "omega": omega}),
                json!([{
                    "lambda": mat4_json(&lambda),
                    "spinor": mat4_json(&spinor),
                    "covariance_residual": residual,
                }]),
            ),
            _ => format!(
                "boost: axis {}, rapidity {}\nLambda:\n{}S:\n{}covariance residual: {}\n",
                axis.index(),
                num(omega),
                mat4_text(&lambda, "  "),
                mat4_text(&spinor, "  "),
                num(residual)
            ),
        });
    }

    // Without an axis the boost is the 1+1-dimensional one along the box.
    let b = boost_1d(omega)?;
    let worst = Representation::ALL
        .iter()
        .map(|rep| covariance_residual_1d(*rep, omega))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0f64, f64::max);
    Ok(match format {
        Format::Json => json_doc(
            json!({"command": "boost", "omega": omega}),
            json!([{
                "lambda": real_mat_json(&b.lambda),
                "s1": b.s_top,
                "s2": b.s_bottom,
                "s1_times_s2": b.s_top * b.s_bottom,
                "worst_covariance_residual": worst,
            }]),
        ),
        _ => format!(
            "boost: 1+1 dimensional, rapidity {}\nLambda:\n{}s1 (top scale): {}\ns2 (bottom scale): {}\ns1*s2: {}\nworst covariance residual over representations: {}\n",
            num(omega),
            real_mat_text(&b.lambda, "  "),
            num(b.s_top),
            num(b.s_bottom),
            num(b.s_top * b.s_bottom),
            num(worst)
        ),
    })
}

pub fn rotate(p: &Params) -> Result<String> {
    p.check_keys(&["axis", "theta", "format", "output-path"])?;
    let format = p.format(Format::Text, &[Format::Text, Format::Json])?;
    let axis = p.axis_required()?;
    let theta = p.f64_required("theta")?;
    let (lambda, spinor) = rotation_4d(axis, theta)?;
    let residual = covariance_residual(&lambda, &spinor)?;
    Ok(match format {
        Format::Json => json_doc(
            json!({"command": "rotate", "axis": axis.index(), "theta": theta}),
            json!([{
                "lambda": mat4_json(&lambda),
                "spinor": mat4_json(&spinor),
                "covariance_residual": residual,
            }]),
        ),
        _ => format!(
            "rotation: axis {}, angle {}\nLambda:\n{}S:\n{}covariance residual: {}\n",
            axis.index(),
            num(theta),
            mat4_text(&lambda, "  "),
            mat4_text(&spinor, "  "),
            num(residual)
        ),
    })
}

pub fn helicity(p: &Params) -> Result<String> {
    p.check_keys(&["a", "format", "output-path"])?;
    let format = p.format(Format::Text, &[Format::Text, Format::Csv, Format::Json])?;
    let kinds: Vec<Chirality> = match p.raw("a") {
        Some(_) => vec![p.kind_or_first()?],
        None => vec![Chirality::Right, Chirality::Left],
    };

    struct RowData {
        a: u8,
        esign: f64,
        helicity: f64,
        spin: f64,
        speed: f64,
    }
    let mut data = Vec::new();
    for kind in &kinds {
        for esign in [EnergySign::Positive, EnergySign::Negative] {
            let wave = PlaneWave3D::new(*kind, P_REF, esign)?;
            let measured = helicity_eigenvalue(&wave)?;
            let nominal = wave.helicity();
            if (measured - nominal).abs() > 1e-10 {
                return Err(Error::Numeric(format!(
                    "helicity eigenvalue {measured} drifted from the closed form {nominal}"
                )));
            }
            let v = classical_velocity_3d(&wave);
            let speed = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            data.push(RowData {
                a: kind.index(),
                esign: esign.value(),
                helicity: nominal,
                spin: spin_along_motion(&wave),
                speed,
            });
        }
    }

    match format {
        Format::Json => {
            let rows: Vec<_> = data
                .iter()
                .map(|r| {
                    json!({
                        "a": r.a,
                        "energy_sign": r.esign,
                        "helicity": r.helicity,
                        "spin_along_motion": r.spin,
                        "speed": r.speed,
                    })
                })
                .collect();
            Ok(json_doc(
                json!({"command": "helicity", "momentum": P_REF, "spin_scale": "hbar/2 factored out"}),
                json!(rows),
            ))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = data
                .iter()
                .map(|r| {
                    vec![
                        r.a.to_string(),
                        num(r.esign),
                        num(r.helicity),
                        num(r.spin),
                        num(r.speed),
                    ]
                })
                .collect();
            Ok(csv("a,energy_sign,helicity,spin_along_motion,speed", &rows))
        }
        _ => {
            let mut out = String::from("a  energy  helicity  spin(motion)  speed\n");
            for r in &data {
                out.push_str(&format!(
                    "{}  {:+.0}      {:+.0}        {:+.3}        {:.3}\n",
                    r.a, r.esign, r.helicity, r.spin, r.speed
                ));
            }
            out.push_str("spin eigenvalues are in units of hbar/2; speed in units of c\n");
            Ok(out)
        }
    }
}

pub fn evolve(p: &Params) -> Result<String> {
    p.check_keys(&[
        "eta", "axis", "rep", "mu", "m0", "m1", "m2", "m3", "length", "a", "grid", "times",
        "kmin", "kmax", "format", "output-path",
    ])?;
    let format = p.format(Format::Csv, &[Format::Csv, Format::Json])?;
    let length = p.f64_or("length", 1.0)?;
    let kind = p.kind_or_first()?;
    let grid = p.usize_or("grid", 513)?;
    let times = p.times()?;
    let has_eta = p.raw("eta").is_some();
    let has_member = p.raw("axis").is_some() || p.raw("rep").is_some();
    if has_eta && has_member {
        return Err(Error::Argument(
            "give either --eta (one-component) or --axis/--rep (two-component), not both".into(),
        ));
    }
    if !has_eta && !has_member {
        return Err(Error::Argument(
            "missing required key --eta (or a family member via --axis/--rep) for command evolve"
                .into(),
        ));
    }

    // The packet shape is fixed: a normalized Gaussian in the middle of
    // the box, narrow enough that the default mode window captures it.
    let center = 0.5 * length;
    let width = 0.05 * length;

    let mut rows_json = Vec::new();
    let mut rows_csv = Vec::new();
    let meta;
    if has_eta {
        let bc = bc_1d_weyl(p.f64_required("eta")?)?;
        let psi0 = gaussian_wave(length, center, width, grid)?;
        let run = WeylEvolution::new(bc, length, kind, 64, &psi0, false)?;
        meta = json!({
            "command": "evolve",
            "mode": "one-component",
            "eta": run.bc().eta(),
            "length": length,
            "a": kind.index(),
            "grid": grid,
            "modes": 64,
            "packet": {"center": center, "width": width},
            "captured_norm": run.captured_fraction(),
        });
        for &t in &times {
            let d = run.diagnostics(t, true);
            push_diag_row(&mut rows_csv, &mut rows_json, &d);
        }
    } else {
        let (spec, _) = family_member(p)?;
        let prob = SpectralProblem::new(spec, length, kind)?;
        let k_min = p.f64_or("kmin", -210.0 / length)?;
        let k_max = p.f64_or("kmax", 210.0 / length)?;
        let psi0 = gaussian_spinor(length, center, width, grid)?;
        let run = EvolutionRun::new(prob, k_min, k_max, &psi0, false)?;
        meta = json!({
            "command": "evolve",
            "mode": "two-component",
            "family": run.problem().bc().context().label(),
            "length": length,
            "a": kind.index(),
            "grid": grid,
            "k_window": [k_min, k_max],
            "packet": {"center": center, "width": width},
            "captured_norm": run.captured_fraction(),
        });
        // The continuity column stays empty here: the one-sided transport
        // equation is a one-component statement, and the two-component
        // diagnostic is the wall-current pair.
        for &t in &times {
            let d = run.diagnostics(t, false);
            push_diag_row(&mut rows_csv, &mut rows_json, &d);
        }
    }

    match format {
        Format::Json => Ok(json_doc(meta, json!(rows_json))),
        _ => Ok(csv("t,norm,J0,Jl,continuity_residual", &rows_csv)),
    }
}

fn push_diag_row(
    rows_csv: &mut Vec<Vec<String>>,
    rows_json: &mut Vec<serde_json::Value>,
    d: &weylbox::dynamics::Diagnostics,
) {
    rows_csv.push(vec![
        num(d.time),
        num(d.norm),
        num(d.current_at_0),
        num(d.current_at_len),
        d.continuity_residual.map(num).unwrap_or_default(),
    ]);
    rows_json.push(json!({
        "t": d.time,
        "norm": d.norm,
        "J0": d.current_at_0,
        "Jl": d.current_at_len,
        "continuity_residual": d.continuity_residual,
    }));
}

pub fn check(p: &Params) -> Result<String> {
    p.check_keys(&["seed", "format", "output-path"])?;
    let format = p.format(Format::Text, &[Format::Text, Format::Json])?;
    let seed = p.u64_or("seed", 0)?;
    let results = run_checks(seed)?;
    match format {
        Format::Json => {
            let rows: Vec<_> = results
                .iter()
                .map(|(name, detail)| json!({"check": name, "detail": detail}))
                .collect();
            Ok(json_doc(json!({"command": "check", "seed": seed}), json!(rows)))
        }
        _ => {
            let mut out = String::new();
            for (name, detail) in &results {
                out.push_str(&format!("ok  {name}: {detail}\n"));
            }
            out.push_str(&format!("all {} checks passed (seed {seed})\n", results.len()));
            Ok(out)
        }
    }
}

/// Reduced-count version of the full acceptance sweep. Every failure is a
/// numeric error so the process exits 1, never a silent pass.
fn run_checks(seed: u64) -> Result<Vec<(&'static str, String)>> {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results: Vec<(&'static str, String)> = Vec::new();
    let fail = |name: &str, detail: String| -> Error {
        Error::Numeric(format!("check failed at {name}: {detail}"))
    };

    fn random_unitary(rng: &mut impl Rng) -> Mat2 {
        loop {
            let mut m = [0.0f64; 4];
            for pair in m.chunks_mut(2) {
                let u1: f64 = rng.random::<f64>().max(1e-12);
                let u2: f64 = rng.random();
                let r = (-2.0 * u1.ln()).sqrt();
                pair[0] = r * (std::f64::consts::TAU * u2).cos();
                pair[1] = r * (std::f64::consts::TAU * u2).sin();
            }
            let n: f64 = m.iter().map(|v| v * v).sum::<f64>().sqrt();
            if n > 1e-6 {
                for v in m.iter_mut() {
                    *v /= n;
                }
                let mu = rng.random::<f64>() * std::f64::consts::PI;
                return build_unitary(&UnitaryParams::new(mu, m).unwrap());
            }
        }
    }
    fn random_coeff(rng: &mut impl Rng) -> [C64; 2] {
        [
            C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
            C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5),
        ]
    }

    // 1. The wall term vanishes on every admissible subspace.
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let axis = Axis::ALL[rng.random_range(0..3)];
        let spec = bc_weyl_axis(axis, &random_unitary(&mut rng))?;
        let psi = spec.subspace_vector(random_coeff(&mut rng));
        let chi = spec.subspace_vector(random_coeff(&mut rng));
        worst = worst.max(boundary_term(&psi, &chi, axis).norm());
    }
    if worst >= 1e-10 {
        return Err(fail("wall term", format!("worst {worst:.2e}")));
    }
    results.push(("wall term", format!("worst {worst:.2e} over 100 members")));

    // 2. Transport and direct construction agree in every representation.
    let mut worst: f64 = 0.0;
    for rep in Representation::ALL {
        let change = rep_change_matrix(rep, Representation::Weyl);
        for _ in 0..20 {
            let u = random_unitary(&mut rng);
            let transported = bc_via_transform(&u, &change)?;
            let induced = weylbox::boundary::induced_family_unitary(rep, &u)?;
            let canonical = bc_dirac_rep(rep, &induced)?;
            worst = worst.max(subspace_distance(&transported, &canonical)?);
        }
    }
    if worst > 1e-10 {
        return Err(fail("transport equivalence", format!("worst {worst:.2e}")));
    }
    results.push(("transport equivalence", format!("worst {worst:.2e} over 4x20 members")));

    // 3. Closed-form spectra, cross-checked by the shooting matrix.
    let periodic = SpectralProblem::new(
        bc_weyl_axis(Axis::Z, &pauli(Axis::X))?,
        1.0,
        Chirality::Right,
    )?;
    let got = find_spectrum(&periodic, -7.0, 7.0)?;
    let want = [-2.0 * PI, 0.0, 2.0 * PI];
    if got.len() != want.len() {
        return Err(fail("spectra", format!("periodic count {}", got.len())));
    }
    for (pair, w) in got.iter().zip(want) {
        if (pair.k - w).abs() > 1e-8 || pair.degeneracy != 2 {
            return Err(fail("spectra", format!("periodic root {}", pair.k)));
        }
    }
    let bag = SpectralProblem::new(mit_bag_spec(), 1.0, Chirality::Right)?;
    let got = find_spectrum(&bag, -7.0, 7.0)?;
    let want = [-1.5 * PI, -0.5 * PI, 0.5 * PI, 1.5 * PI];
    if got.len() != want.len() {
        return Err(fail("spectra", format!("bag count {}", got.len())));
    }
    let mut worst: f64 = 0.0;
    for (pair, w) in got.iter().zip(want) {
        if (pair.k - w).abs() > 1e-8 || pair.degeneracy != 1 {
            return Err(fail("spectra", format!("bag root {}", pair.k)));
        }
        worst = worst.max(shooting_sigma_min(&bag, pair.k)?);
    }
    if worst > 1e-6 {
        return Err(fail("spectra", format!("shooting residual {worst:.2e}")));
    }
    results.push(("spectra", format!("7 closed-form roots, shooting residual {worst:.2e}")));

    // 4. Incoming-pairing encoding names the same family.
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let a3 = random_unitary(&mut rng);
        let standard = bc_weyl_axis(Axis::Z, &a3)?;
        let v = (a3 * pauli(Axis::X)).inverse()?;
        let incoming = bc_axis3_incoming(&v)?;
        worst = worst.max(subspace_distance(&standard, &incoming)?);
    }
    let u_inc = pauli(Axis::X).scale(C64::new(0.0, -1.0));
    let alpha = pauli(Axis::Z);
    let anti = (u_inc * alpha + alpha * u_inc).max_abs();
    if worst > 1e-10 || anti > 1e-14 {
        return Err(fail("incoming encoding", format!("distance {worst:.2e}, anticommutator {anti:.2e}")));
    }
    results.push(("incoming encoding", format!("worst distance {worst:.2e}, bag anticommutator {anti:.2e}")));

    // 5. The named members classify as confining / non-confining.
    let named: [(BoundarySpec, Confinement); 5] = [
        (mit_bag_spec(), Confinement::Confining),
        (bc_weyl_axis(Axis::X, &(-Mat2::identity()))?, Confinement::Confining),
        (bc_weyl_axis(Axis::X, &Mat2::identity())?, Confinement::Confining),
        (bc_weyl_axis(Axis::Z, &pauli(Axis::X))?, Confinement::NonConfining),
        (bc_weyl_axis(Axis::Z, &(-pauli(Axis::X)))?, Confinement::NonConfining),
    ];
    for (spec, want) in &named {
        let got = classify_confinement(spec, SUBSPACE_TOL).label;
        if got != *want {
            return Err(fail("confinement", format!("{} misclassified as {}", spec.context().label(), got.name())));
        }
    }
    results.push(("confinement", "5 named members classified".into()));

    // 6. Covariance of boosts and rotations, double cover, 1d scalars.
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let axis = Axis::ALL[rng.random_range(0..3)];
        let omega = 4.0 * rng.random::<f64>() - 2.0;
        let theta = std::f64::consts::TAU * rng.random::<f64>();
        let (lb, sb) = boost_4d(axis, omega)?;
        let (lr, sr) = rotation_4d(axis, theta)?;
        worst = worst.max(covariance_residual(&lb, &sb)?);
        worst = worst.max(covariance_residual(&lr, &sr)?);
        let b = boost_1d(omega)?;
        let s_defect = (b.s_top * b.s_bottom - 1.0).abs();
        if s_defect > 1e-14 {
            return Err(fail("covariance", format!("s1*s2 off by {s_defect:.2e}")));
        }
    }
    if worst > 1e-10 {
        return Err(fail("covariance", format!("worst residual {worst:.2e}")));
    }
    let mut turn_defect: f64 = 0.0;
    for axis in Axis::ALL {
        let (_, s) = rotation_4d(axis, std::f64::consts::TAU)?;
        let target = weylbox::algebra::Mat4::identity().scale(C64::new(-1.0, 0.0));
        turn_defect = turn_defect.max(s.max_abs_diff(&target));
    }
    if turn_defect > 1e-12 {
        return Err(fail("covariance", format!("full turn defect {turn_defect:.2e}")));
    }
    results.push(("covariance", format!("worst residual {worst:.2e}, full-turn defect {turn_defect:.2e}")));

    // 7. Helicity table and light-speed velocities.
    for kind in [Chirality::Right, Chirality::Left] {
        for esign in [EnergySign::Positive, EnergySign::Negative] {
            let wave = PlaneWave3D::new(kind, P_REF, esign)?;
            let lam = helicity_eigenvalue(&wave)?;
            let want = kind.sign() * esign.value();
            if (lam - want).abs() > 1e-12 {
                return Err(fail("helicity", format!("a={} sign={} gave {lam}", kind.index(), esign.value())));
            }
            let v = classical_velocity_3d(&wave);
            let speed = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if (speed - 1.0).abs() > 1e-12 {
                return Err(fail("helicity", format!("speed {speed}")));
            }
        }
    }
    results.push(("helicity", "4 kind/sign rows at light speed".into()));

    // 8. Reality admissibility per axis and per phase.
    for _ in 0..10 {
        let t = rng.random::<f64>() * std::f64::consts::TAU;
        let rot = Mat2::from_real(t.cos(), -t.sin(), t.sin(), t.cos());
        let ok = reality_admissible(&bc_weyl_axis(Axis::X, &rot)?)
            && reality_admissible(&bc_weyl_axis(Axis::Z, &rot)?)
            && !reality_admissible(&bc_weyl_axis(Axis::Y, &rot)?);
        if !ok {
            return Err(fail("reality", format!("rotation angle {t}")));
        }
    }
    if !bc_1d_weyl(0.0)?.reality_admissible()
        || !bc_1d_weyl(PI)?.reality_admissible()
        || bc_1d_weyl(1.3)?.reality_admissible()
    {
        return Err(fail("reality", "phase flags".into()));
    }
    results.push(("reality", "10 orthogonal members plus phase flags".into()));

    // 9. Dynamics: conservation and second-order continuity.
    let psi0 = gaussian_wave(1.0, 0.5, 0.05, 257)?;
    let run = WeylEvolution::new(bc_1d_weyl(0.0)?, 1.0, Chirality::Right, 64, &psi0, false)?;
    let norms: Vec<f64> = [0.0, 0.7, 1.9, 3.3, 10.0]
        .iter()
        .map(|t| run.diagnostics(*t, false).norm)
        .collect();
    let drift = norms.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - norms.iter().cloned().fold(f64::INFINITY, f64::min);
    if drift >= 1e-9 {
        return Err(fail("dynamics", format!("norm drift {drift:.2e}")));
    }
    let residual = |n: usize| -> Result<f64> {
        let p = gaussian_wave(1.0, 0.5, 0.05, n)?;
        Ok(WeylEvolution::new(bc_1d_weyl(0.0)?, 1.0, Chirality::Right, 64, &p, false)?
            .continuity_residual(0.13))
    };
    let ratio = residual(257)? / residual(513)?;
    if !(3.0..=5.0).contains(&ratio) {
        return Err(fail("dynamics", format!("continuity ratio {ratio:.2}")));
    }
    results.push(("dynamics", format!("norm drift {drift:.1e}, continuity ratio {ratio:.2}")));

    Ok(results)
}
