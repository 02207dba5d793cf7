//! Command-line surface and dispatch of subcommands onto a workspace.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use extensor_core::extensor::{dim_of, AnyExtensor, SpaceDescriptor};
use extensor_core::laws::{self, Config};
use extensor_core::{invariants, operators, Adjoint, Frame, Tolerance, Variance, MAX_DIM};

use crate::error::{CliError, Result, EXIT_CHECK_FAILED, EXIT_OK};
use crate::format;
use crate::workspace::{FrameRef, Object, Workspace};

/// Seed used by `check` when none is given.
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "extensor",
    version,
    about = "Extensor calculus over euclidean R^n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Workspace document to read (standard input when omitted).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Seed of the SplitMix64 generator used by `check`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Dimension for `check` and `dims` when no workspace is read.
    #[arg(long, global = true)]
    pub dim: Option<usize>,
    /// Relative tolerance of `check` comparisons.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinant of a (1,1)-extensor.
    Det { name: String },
    /// Inverse of a (1,1)-extensor through the pseudoscalar formula.
    Invert { name: String },
    /// Standard adjoint of a (p,q)- or general extensor.
    Adjoint { name: String },
    /// Extension of a (1,1)-extensor, applied to a multivector or as a matrix.
    Extend { name: String, arg: Option<String> },
    /// Generalization of a (1,1)-extensor, applied or as a matrix.
    Generalize { name: String, arg: Option<String> },
    /// The bivector of a (1,1)-extensor.
    Biv { name: String },
    /// Components of an extensor relative to a frame.
    Components {
        name: String,
        /// Frame name, or `canonical`.
        #[arg(default_value = "canonical")]
        frame: String,
        #[arg(long)]
        contravariant: bool,
    },
    /// Rebuild an extensor from a component set.
    Reconstruct { name: String },
    /// Changing-basis extensor between two frames.
    ChangeBasis { from: String, to: String },
    /// Transport a frame and its reciprocal by an invertible extensor.
    Transport { name: String, frame: String },
    /// Dimension of an extensor space: `pq P Q`, `general`,
    /// `elementary K Q` or `exform K P`.
    Dims { space: String, params: Vec<usize> },
    /// Run the invariant suite on seeded random inputs.
    Check {
        /// Random trials per law.
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// Restrict the run to the named laws.
        #[arg(long = "law")]
        laws: Vec<String>,
    },
    /// Parse the workspace and print it in canonical form.
    Print,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_OK,
        }
    }
}

fn needs_workspace(cmd: &Command) -> bool {
    !matches!(cmd, Command::Check { .. } | Command::Dims { .. })
}

/// Parse and execute. `read` supplies the document text when a
/// workspace is required.
pub fn run(cli: &Cli, read: impl FnOnce() -> Result<String>) -> Result<Output> {
    let ws = if needs_workspace(&cli.command) || cli.input.is_some() {
        Some(Workspace::parse(&read()?)?)
    } else {
        None
    };
    execute(cli, ws.as_ref())
}

fn require(ws: Option<&Workspace>) -> Result<&Workspace> {
    ws.ok_or_else(|| CliError::Usage("this command needs a workspace document".into()))
}

fn operator<'a>(ws: &'a Workspace, name: &str) -> Result<&'a extensor_core::PqExtensor> {
    match ws.get(name)? {
        Object::Extensor(t) if t.is_linear_operator() => Ok(t),
        other => Err(CliError::WrongObject {
            name: name.into(),
            expected: "(1,1)-extensor",
            found: other.kind_name(),
        }),
    }
}

fn multivector<'a>(ws: &'a Workspace, name: &str) -> Result<&'a extensor_core::Multivector> {
    match ws.get(name)? {
        Object::Multivector(x) => Ok(x),
        other => Err(CliError::WrongObject {
            name: name.into(),
            expected: "multivector",
            found: other.kind_name(),
        }),
    }
}

fn frame(ws: &Workspace, name: &str) -> Result<(Frame, FrameRef)> {
    if name == "canonical" {
        return Ok((Frame::canonical(ws.dim().unwrap_or(1)), FrameRef::Canonical));
    }
    match ws.get(name)? {
        Object::Frame(f) => Ok((f.clone(), FrameRef::Named(name.into()))),
        other => Err(CliError::WrongObject {
            name: name.into(),
            expected: "frame",
            found: other.kind_name(),
        }),
    }
}

fn document(ws: &Workspace, decls: Vec<(String, Object)>) -> Result<Output> {
    let dim = ws
        .dim()
        .ok_or_else(|| CliError::Usage("workspace has no dim".into()))?;
    let mut out = Workspace::new(dim)?;
    for (name, object) in decls {
        out.push(&name, object)?;
    }
    Ok(Output::ok(out.print()))
}

fn dimension(cli: &Cli, ws: Option<&Workspace>) -> Result<usize> {
    let dim = match (cli.dim, ws.and_then(|w| w.dim())) {
        (Some(d), Some(w)) if d != w => {
            return Err(CliError::Usage(format!(
                "--dim {d} disagrees with the workspace dim {w}"
            )))
        }
        (Some(d), _) | (None, Some(d)) => d,
        (None, None) => return Err(CliError::Usage("--dim is required".into())),
    };
    if !(1..=MAX_DIM).contains(&dim) {
        return Err(CliError::Validation {
            name: "dim".into(),
            source: extensor_core::Error::DimensionOutOfRange(dim),
        });
    }
    Ok(dim)
}

pub fn execute(cli: &Cli, ws: Option<&Workspace>) -> Result<Output> {
    match &cli.command {
        Command::Print => Ok(Output::ok(require(ws)?.print())),
        Command::Det { name } => {
            let t = operator(require(ws)?, name)?;
            Ok(Output::ok(format!(
                "{}\n",
                format::number(invariants::det(t)?)
            )))
        }
        Command::Invert { name } => {
            let ws = require(ws)?;
            let inv = invariants::invert(operator(ws, name)?)?;
            document(ws, vec![(format!("{name}_inv"), Object::Extensor(inv))])
        }
        Command::Adjoint { name } => {
            let ws = require(ws)?;
            let adj = match ws.get(name)? {
                Object::Extensor(t) => Object::Extensor(t.adjoint()),
                Object::General(t) => Object::General(t.adjoint()),
                other => {
                    return Err(CliError::WrongObject {
                        name: name.clone(),
                        expected: "extensor or general extensor",
                        found: other.kind_name(),
                    })
                }
            };
            document(ws, vec![(format!("{name}_adj"), adj)])
        }
        Command::Extend { name, arg } | Command::Generalize { name, arg } => {
            let ws = require(ws)?;
            let t = operator(ws, name)?;
            let extend = matches!(cli.command, Command::Extend { .. });
            let suffix = if extend { "ext" } else { "gen" };
            match arg {
                Some(x_name) => {
                    let x = multivector(ws, x_name)?;
                    let y = if extend {
                        operators::extend_apply(t, x)?
                    } else {
                        operators::generalize_apply(t, x)?
                    };
                    document(
                        ws,
                        vec![(format!("{name}_{suffix}_{x_name}"), Object::Multivector(y))],
                    )
                }
                None => {
                    let m = if extend {
                        operators::extend_matrix(t)?
                    } else {
                        operators::generalize_matrix(t)?
                    };
                    document(ws, vec![(format!("{name}_{suffix}"), Object::General(m))])
                }
            }
        }
        Command::Biv { name } => {
            let ws = require(ws)?;
            let b = operators::biv(operator(ws, name)?)?;
            document(ws, vec![(format!("{name}_biv"), Object::Multivector(b))])
        }
        Command::Components {
            name,
            frame: frame_name,
            contravariant,
        } => {
            let ws = require(ws)?;
            let (f, frame_ref) = frame(ws, frame_name)?;
            let t = match ws.get(name)? {
                Object::Extensor(t) => AnyExtensor::Pq(t.clone()),
                Object::General(t) => AnyExtensor::General(t.clone()),
                Object::Elementary(t) => AnyExtensor::Elementary(t.clone()),
                other => {
                    return Err(CliError::WrongObject {
                        name: name.clone(),
                        expected: "extensor",
                        found: other.kind_name(),
                    })
                }
            };
            let (variance, suffix) = if *contravariant {
                (Variance::Contravariant, "con")
            } else {
                (Variance::Covariant, "cov")
            };
            let set = t.components(&f, variance)?;
            let mut decls = Vec::new();
            if let FrameRef::Named(n) = &frame_ref {
                decls.push((n.clone(), Object::Frame(f)));
            }
            decls.push((
                format!("{name}_{suffix}"),
                Object::Components {
                    set,
                    frame: frame_ref,
                },
            ));
            document(ws, decls)
        }
        Command::Reconstruct { name } => {
            let ws = require(ws)?;
            let set = match ws.get(name)? {
                Object::Components { set, .. } => set,
                other => {
                    return Err(CliError::WrongObject {
                        name: name.clone(),
                        expected: "component set",
                        found: other.kind_name(),
                    })
                }
            };
            let object = match set.reconstruct()? {
                AnyExtensor::Pq(t) => Object::Extensor(t),
                AnyExtensor::General(t) => Object::General(t),
                AnyExtensor::Elementary(t) => Object::Elementary(t),
            };
            document(ws, vec![(format!("{name}_rec"), object)])
        }
        Command::ChangeBasis { from, to } => {
            let ws = require(ws)?;
            let (e, _) = frame(ws, from)?;
            let (e2, _) = frame(ws, to)?;
            let eps = invariants::changing_basis(&e, &e2)?;
            document(ws, vec![(format!("{from}_to_{to}"), Object::Extensor(eps))])
        }
        Command::Transport {
            name,
            frame: frame_name,
        } => {
            let ws = require(ws)?;
            let f = operator(ws, name)?;
            let (b, _) = frame(ws, frame_name)?;
            let (e, r) = invariants::frame_transport(f, &b)?;
            document(
                ws,
                vec![
                    (format!("{name}_{frame_name}"), Object::Frame(e)),
                    (format!("{name}_{frame_name}_dual"), Object::Frame(r)),
                ],
            )
        }
        Command::Dims { space, params } => {
            let dim = dimension(cli, ws)?;
            let arity = |want: usize| {
                if params.len() == want {
                    Ok(())
                } else {
                    Err(CliError::Usage(format!(
                        "`dims {space}` takes {want} parameter(s), got {}",
                        params.len()
                    )))
                }
            };
            let desc = match space.as_str() {
                "pq" => {
                    arity(2)?;
                    SpaceDescriptor::Pq {
                        dim,
                        p: params[0],
                        q: params[1],
                    }
                }
                "general" => {
                    arity(0)?;
                    SpaceDescriptor::General { dim }
                }
                "elementary" => {
                    arity(2)?;
                    SpaceDescriptor::Elementary {
                        dim,
                        k: params[0],
                        q: params[1],
                    }
                }
                "exform" => {
                    arity(2)?;
                    SpaceDescriptor::Exform {
                        dim,
                        k: params[0],
                        p: params[1],
                    }
                }
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown space `{other}`; one of pq, general, elementary, exform"
                    )))
                }
            };
            Ok(Output::ok(format!("{}\n", dim_of(&desc)?)))
        }
        Command::Check { trials, laws: only } => {
            let dim = dimension(cli, ws)?;
            let seed = cli.seed.unwrap_or(DEFAULT_SEED);
            let tol = match cli.tolerance {
                Some(rel) if rel > 0.0 && rel.is_finite() => Tolerance::new(rel),
                Some(rel) => return Err(CliError::Usage(format!("bad tolerance {rel}"))),
                None => Tolerance::default(),
            };
            let cfg = Config::new(dim, *trials).with_tolerance(tol);
            let selected: Vec<&laws::Law> = if only.is_empty() {
                laws::LAWS.iter().collect()
            } else {
                only.iter()
                    .map(|n| laws::find(n).ok_or_else(|| CliError::UnknownName(n.clone())))
                    .collect::<Result<_>>()?
            };
            Ok(check_report(seed, &cfg, &selected))
        }
    }
}

fn check_report(seed: u64, cfg: &Config, selected: &[&laws::Law]) -> Output {
    let outcomes: Vec<laws::Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .iter()
            .map(|law| s.spawn(move || law.run(seed, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("law panicked"))
            .collect()
    });
    let mut text = format!(
        "check seed={seed} dim={} trials={} tolerance={}\n",
        cfg.dim,
        cfg.trials,
        format::number(cfg.tol.rel)
    );
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut failed = 0;
    for o in &outcomes {
        match &o.verdict {
            Ok(()) => text.push_str(&format!("PASS {:width$}  {}\n", o.name, o.summary)),
            Err(detail) => {
                failed += 1;
                text.push_str(&format!(
                    "FAIL {:width$}  {}: {detail}\n",
                    o.name, o.summary
                ));
            }
        }
    }
    text.push_str(&format!(
        "{} passed, {failed} failed\n",
        outcomes.len() - failed
    ));
    Output {
        text,
        code: if failed == 0 {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
    }
}
