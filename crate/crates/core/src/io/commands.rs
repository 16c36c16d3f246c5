use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::config::{
    OutputFormat, RunConfig, Subcommand, FIGURE_GAMMAS, FIGURE_POINTS, FIGURE_R_MAX, FIGURE_R_MIN,
};
use super::format::{format_gamma, Document, Table};
use crate::error::{Error, Result};
use crate::factorization::{
    transformed_state, FactorizationParams, GammaMode, MissingState, PotentialSpec,
};
use crate::oracle::{
    discretize, integrate_to_infinity, verify_isospectral, RadialGrid, SpectrumReport, Tolerance,
};
use crate::special::{critical_gamma, QuantumNumbers};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// A verification ran but at least one level missed the tolerance.
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
/// Invalid configuration, including a singular `γ`.
pub const EXIT_INVALID_CONFIG: i32 = 2;
/// Numerical failure (non-convergence, vanishing denominator).
pub const EXIT_NUMERICAL: i32 = 3;

pub fn exit_code(error: &Error) -> i32 {
    if error.is_numerical() {
        EXIT_NUMERICAL
    } else {
        EXIT_INVALID_CONFIG
    }
}

/// Single-line, `key=value` error report for the diagnostic stream.
pub fn error_line(error: &Error) -> String {
    let kind = if error.is_numerical() {
        "numerical_failure"
    } else {
        "invalid_config"
    };
    let message = error.to_string().replace('\n', " ").replace('"', "'");
    format!(
        "error kind={kind} code={} message=\"{message}\"",
        exit_code(error)
    )
}

#[derive(Serialize)]
struct ParamsRecord<'a> {
    command: Subcommand,
    l: u32,
    gamma: &'a [f64],
    r_min: f64,
    r_max: f64,
    points: usize,
    k: usize,
    allow_singular: bool,
    tolerance: f64,
}

fn params_value(cfg: &RunConfig, grid: &RadialGrid) -> Value {
    serde_json::to_value(ParamsRecord {
        command: cfg.command,
        l: cfg.l,
        gamma: &cfg.gammas,
        r_min: grid.r_min(),
        r_max: grid.r_max(),
        points: grid.n_points(),
        k: cfg.k,
        allow_singular: cfg.allow_singular,
        tolerance: cfg.tolerance,
    })
    .expect("params serialize")
}

fn family(cfg: &RunConfig) -> Result<Vec<FactorizationParams>> {
    cfg.gammas
        .iter()
        .map(|&g| {
            if cfg.allow_singular {
                FactorizationParams::with_singular_override(cfg.l, g)
            } else {
                FactorizationParams::new(cfg.l, g)
            }
        })
        .collect()
}

fn reject_singular(params: &[FactorizationParams]) -> Result<()> {
    match params.iter().find(|p| p.mode() == GammaMode::Singular) {
        Some(p) => Err(Error::SingularGamma {
            l: p.l(),
            gamma: p.gamma(),
            critical: p.critical_gamma(),
        }),
        None => Ok(()),
    }
}

fn potential_table(l: u32, params: &[FactorizationParams], grid: &RadialGrid) -> Result<Table> {
    let mut columns = vec!["r".to_owned(), "V_coulomb".to_owned()];
    columns.extend(
        params
            .iter()
            .map(|p| format!("V_gamma={}", format_gamma(p.gamma()))),
    );
    let reference = PotentialSpec::coulomb(l - 1);
    let specs = params
        .iter()
        .map(|p| PotentialSpec::deformed(p.clone()))
        .collect::<Result<Vec<_>>>()?;
    let mut table = Table::new(columns);
    for r in grid.radii() {
        let mut row = vec![r, reference.evaluate(r)?];
        for spec in &specs {
            row.push(spec.evaluate(r)?);
        }
        table.push(row);
    }
    Ok(table)
}

/// Tabulates `Ṽ_{l−1}` for every `γ` next to the undeformed channel.
pub fn cmd_potential(cfg: &RunConfig) -> Result<Document> {
    cfg.validate()?;
    let grid = cfg.resolved_grid()?;
    let params = family(cfg)?;
    let table = potential_table(cfg.l, &params, &grid)?;
    let modes: BTreeMap<String, GammaMode> = params
        .iter()
        .map(|p| (format_gamma(p.gamma()), p.mode()))
        .collect();
    Ok(Document::new(
        params_value(cfg, &grid),
        table,
        json!({ "critical_gamma": critical_gamma(cfg.l)?, "modes": modes }),
    ))
}

/// `4π ∫_0^∞ f² r² dr` for a state that decays exponentially.
fn state_norm<F>(f: F, l: u32) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    integrate_to_infinity(
        |r| {
            if r == 0.0 {
                return 0.0;
            }
            let v = f(r).unwrap_or(f64::NAN);
            4.0 * PI * v * v * r * r
        },
        0.0,
        8.0 * f64::from(l),
        1e-14,
        Tolerance::new(1e-300, 1e-12),
    )
}

fn missing_column_name(p: &FactorizationParams) -> String {
    let base = format!("R_missing_gamma={}", format_gamma(p.gamma()));
    if p.mode() == GammaMode::Critical {
        base + "_unnormalized"
    } else {
        base
    }
}

struct StateColumns {
    names: Vec<String>,
    values: Vec<Vec<f64>>,
    diagnostics: Value,
}

fn state_columns(p: &FactorizationParams, grid: &RadialGrid, k: usize) -> Result<StateColumns> {
    let missing = MissingState::new(p)?;
    let radii = grid.radii();
    let l = p.l();
    let mut names = vec![missing_column_name(p)];
    let mut values = vec![radii
        .iter()
        .map(|&r| missing.value(r))
        .collect::<Result<Vec<_>>>()?];
    let missing_norm = if missing.is_normalizable() {
        json!(state_norm(|r| missing.value(r), l)?)
    } else {
        Value::Null
    };

    let mut transformed = BTreeMap::new();
    for n in (l + 1)..=(k as u32) {
        let qn = QuantumNumbers::new(n, l)?;
        names.push(format!("R_n={n}_gamma={}", format_gamma(p.gamma())));
        values.push(
            radii
                .iter()
                .map(|&r| transformed_state(p, qn, r))
                .collect::<Result<Vec<_>>>()?,
        );
        transformed.insert(
            n.to_string(),
            state_norm(|r| transformed_state(p, qn, r), l)?,
        );
    }
    Ok(StateColumns {
        names,
        values,
        diagnostics: json!({
            "gamma": p.gamma(),
            "mode": p.mode(),
            "normalizable": missing.is_normalizable(),
            "coefficient": missing.coefficient(),
            "missing_norm": missing_norm,
            "transformed_norms": transformed,
        }),
    })
}

fn assemble(grid: &RadialGrid, blocks: &[StateColumns]) -> Table {
    let mut columns = vec!["r".to_owned()];
    for b in blocks {
        columns.extend(b.names.iter().cloned());
    }
    let mut table = Table::new(columns);
    for (i, r) in grid.radii().into_iter().enumerate() {
        let mut row = vec![r];
        for b in blocks {
            row.extend(b.values.iter().map(|col| col[i]));
        }
        table.push(row);
    }
    table
}

/// Tabulates the missing state and the transformed states `n = l+1..=k`.
pub fn cmd_states(cfg: &RunConfig) -> Result<Document> {
    cfg.validate()?;
    let grid = cfg.resolved_grid()?;
    let params = family(cfg)?;
    reject_singular(&params)?;
    let blocks = params
        .par_iter()
        .map(|p| state_columns(p, &grid, cfg.k))
        .collect::<Result<Vec<_>>>()?;
    let diagnostics: Vec<Value> = blocks.iter().map(|b| b.diagnostics.clone()).collect();
    Ok(Document::new(
        params_value(cfg, &grid),
        assemble(&grid, &blocks),
        json!({ "states": diagnostics }),
    ))
}

/// Lowest `k` eigenvalues on a single grid, next to the undeformed channel.
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Document> {
    cfg.validate()?;
    let requested = cfg.resolved_grid()?;
    let grid = RadialGrid::with_step(requested.spacing(), requested.r_max())?;
    let params = family(cfg)?;
    reject_singular(&params)?;
    let mut specs = vec![PotentialSpec::coulomb(cfg.l - 1)];
    for p in &params {
        specs.push(PotentialSpec::deformed(p.clone())?);
    }
    let spectra = specs
        .par_iter()
        .map(|s| discretize(s, grid)?.lowest_eigenvalues(cfg.k))
        .collect::<Result<Vec<_>>>()?;
    let mut columns = vec!["level".to_owned(), "E_coulomb".to_owned()];
    columns.extend(
        params
            .iter()
            .map(|p| format!("E_gamma={}", format_gamma(p.gamma()))),
    );
    let mut table = Table::new(columns);
    for j in 0..cfg.k {
        let mut row = vec![(j + 1) as f64];
        row.extend(spectra.iter().map(|s| s[j]));
        table.push(row);
    }
    Ok(Document::new(
        params_value(cfg, &grid),
        table,
        json!({ "h": grid.spacing() }),
    ))
}

/// Result of `verify`: the document and whether every level passed.
#[derive(Debug, Clone)]
pub struct Verification {
    pub document: Document,
    pub reports: Vec<SpectrumReport>,
    pub passed: bool,
}

/// Richardson-extrapolated spectra of every `Ṽ_{l−1}` against `−1/n²`.
pub fn cmd_verify(cfg: &RunConfig) -> Result<Verification> {
    cfg.validate()?;
    let requested = cfg.resolved_grid()?;
    let grid = RadialGrid::with_step(requested.spacing(), requested.r_max())?;
    let params = family(cfg)?;
    reject_singular(&params)?;
    let reports = params
        .par_iter()
        .map(|p| verify_isospectral(p, &grid, cfg.k))
        .collect::<Result<Vec<_>>>()?;

    let mut table = Table::new(
        ["gamma", "n", "target", "computed", "residual", "order"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    for rep in &reports {
        for j in 0..rep.levels.len() {
            table.push(vec![
                rep.gamma,
                f64::from(rep.levels[j]),
                rep.targets[j],
                rep.eigenvalues[j],
                rep.residuals[j],
                rep.orders[j],
            ]);
        }
    }
    let passed = reports.iter().all(|r| r.passes(cfg.tolerance));
    let verdicts: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "gamma": r.gamma,
                "mode": r.mode,
                "pass": r.passes(cfg.tolerance),
                "max_residual": r.max_residual(),
                "report": r,
            })
        })
        .collect();
    let document = Document::new(
        params_value(cfg, &grid),
        table,
        json!({ "pass": passed, "tolerance": cfg.tolerance, "reports": verdicts }),
    );
    Ok(Verification {
        document,
        reports,
        passed,
    })
}

/// Files written by [`cmd_figures`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureManifest {
    pub params: Value,
    pub files: Vec<FigureFile>,
    pub norms: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureFile {
    pub name: String,
    pub bytes: usize,
    pub sha256: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Writes `fig1.csv` (potentials), `fig2.csv` (missing states) and
/// `manifest.json` into `dir` for the fixed `l = 1` parameter set.
pub fn cmd_figures(dir: &Path) -> Result<FigureManifest> {
    let grid = RadialGrid::new(FIGURE_R_MIN, FIGURE_R_MAX, FIGURE_POINTS)?;
    let regular = FIGURE_GAMMAS
        .iter()
        .map(|&g| FactorizationParams::new(1, g))
        .collect::<Result<Vec<_>>>()?;
    let mut with_critical = regular.clone();
    with_critical.push(FactorizationParams::critical(1)?);

    let fig1 = potential_table(1, &with_critical, &grid)?.to_csv();
    let blocks = regular
        .par_iter()
        .map(|p| state_columns(p, &grid, 1))
        .collect::<Result<Vec<_>>>()?;
    let fig2 = assemble(&grid, &blocks).to_csv();
    let norms = regular
        .iter()
        .zip(&blocks)
        .map(|(p, b)| {
            let norm = b.diagnostics["missing_norm"].as_f64().unwrap_or(f64::NAN);
            (missing_column_name(p), norm)
        })
        .collect();

    fs::create_dir_all(dir).map_err(|e| Error::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut files = Vec::new();
    for (name, contents) in [("fig1.csv", &fig1), ("fig2.csv", &fig2)] {
        write_file(&dir.join(name), contents.as_bytes())?;
        files.push(FigureFile {
            name: name.to_owned(),
            bytes: contents.len(),
            sha256: sha256_hex(contents.as_bytes()),
        });
    }
    let mut gammas: Vec<f64> = FIGURE_GAMMAS.to_vec();
    gammas.push(critical_gamma(1)?);
    let manifest = FigureManifest {
        params: json!({
            "l": 1,
            "gamma": gammas,
            "r_min": FIGURE_R_MIN,
            "r_max": FIGURE_R_MAX,
            "points": FIGURE_POINTS,
        }),
        files,
        norms,
    };
    let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    text.push('\n');
    write_file(&dir.join("manifest.json"), text.as_bytes())?;
    Ok(manifest)
}

fn render(cfg: &RunConfig, document: &Document) -> String {
    match cfg.format {
        OutputFormat::Csv => document.table().to_csv(),
        OutputFormat::Json => document.to_json(),
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Result<()> {
    match &cfg.out {
        Some(path) => write_file(path, text.as_bytes()),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Ok(()) => Ok(()),
            // downstream closed early, e.g. `| head`
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            Err(e) => Err(Error::Io {
                path: "<stdout>".into(),
                message: e.to_string(),
            }),
        },
    }
}

/// Runs one subcommand and returns the process exit status.
pub fn run(cfg: &RunConfig) -> Result<i32> {
    match cfg.command {
        Subcommand::Potential => emit(cfg, &render(cfg, &cmd_potential(cfg)?))?,
        Subcommand::States => emit(cfg, &render(cfg, &cmd_states(cfg)?))?,
        Subcommand::Spectrum => emit(cfg, &render(cfg, &cmd_spectrum(cfg)?))?,
        Subcommand::Verify => {
            let v = cmd_verify(cfg)?;
            emit(cfg, &render(cfg, &v.document))?;
            if !v.passed {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
        }
        Subcommand::Figures => {
            let dir = cfg.out.clone().unwrap_or_else(|| PathBuf::from("."));
            cmd_figures(&dir)?;
        }
    }
    Ok(EXIT_OK)
}
