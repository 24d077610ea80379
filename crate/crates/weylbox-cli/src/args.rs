//! Flag parsing: `command --key value ...` with an optional `--config`
//! file of `key=value` lines. Command-line flags override file values.

use std::collections::BTreeMap;

use weylbox::algebra::{Axis, Chirality, Representation, UnitaryParams};
use weylbox::{Error, Result};

pub struct Invocation {
    pub command: String,
    pub params: BTreeMap<String, String>,
}

pub fn parse(argv: &[String]) -> Result<Invocation> {
    let Some(command) = argv.first() else {
        return Err(Error::Argument("no command given".into()));
    };
    if command.starts_with('-') {
        return Err(Error::Argument(format!(
            "expected a command before flags, got {command:?}"
        )));
    }
    let mut cli: BTreeMap<String, String> = BTreeMap::new();
    let mut it = argv[1..].iter();
    while let Some(token) = it.next() {
        let Some(key) = token.strip_prefix("--") else {
            return Err(Error::Argument(format!(
                "unexpected argument {token:?} (flags are written --key value)"
            )));
        };
        if key.is_empty() {
            return Err(Error::Argument("empty flag name '--'".into()));
        }
        let Some(value) = it.next() else {
            return Err(Error::Argument(format!("missing value for --{key}")));
        };
        // Later occurrences win, mirroring the file-then-flags layering.
        cli.insert(key.to_string(), value.clone());
    }
    let mut params = match cli.remove("config") {
        Some(path) => load_config(&path)?,
        None => BTreeMap::new(),
    };
    params.extend(cli);
    Ok(Invocation {
        command: command.clone(),
        params,
    })
}

fn load_config(path: &str) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Argument(format!("config file {path}: {e}")))?;
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Argument(format!(
                "config file {path} line {}: expected key=value, got {line:?}",
                i + 1
            )));
        };
        let key = key.trim();
        if key == "config" {
            return Err(Error::Argument(format!(
                "config file {path} line {}: config files cannot chain to other config files",
                i + 1
            )));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

/// Typed access to the merged parameter map, with errors that name the
/// offending key.
pub struct Params<'a> {
    command: &'a str,
    map: &'a BTreeMap<String, String>,
}

impl<'a> Params<'a> {
    pub fn new(command: &'a str, map: &'a BTreeMap<String, String>) -> Self {
        Params { command, map }
    }

    /// Reject any key outside the command's vocabulary.
    pub fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for key in self.map.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::Argument(format!(
                    "unknown key --{key} for command {}",
                    self.command
                )));
            }
        }
        Ok(())
    }

    pub fn raw(&self, key: &str) -> Option<&'a str> {
        self.map.get(key).map(String::as_str)
    }

    pub fn f64_opt(&self, key: &str) -> Result<Option<f64>> {
        match self.map.get(key) {
            None => Ok(None),
            Some(s) => s.parse::<f64>().map(Some).map_err(|_| {
                Error::Argument(format!("invalid value {s:?} for --{key} (expected a number)"))
            }),
        }
    }

    pub fn f64_required(&self, key: &str) -> Result<f64> {
        self.f64_opt(key)?.ok_or_else(|| self.missing(key))
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64> {
        Ok(self.f64_opt(key)?.unwrap_or(default))
    }

    pub fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        match self.map.get(key) {
            None => Ok(default),
            Some(s) => s.parse::<usize>().map_err(|_| {
                Error::Argument(format!(
                    "invalid value {s:?} for --{key} (expected a non-negative integer)"
                ))
            }),
        }
    }

    pub fn u64_or(&self, key: &str, default: u64) -> Result<u64> {
        match self.map.get(key) {
            None => Ok(default),
            Some(s) => s.parse::<u64>().map_err(|_| {
                Error::Argument(format!(
                    "invalid value {s:?} for --{key} (expected a non-negative integer)"
                ))
            }),
        }
    }

    pub fn axis_opt(&self) -> Result<Option<Axis>> {
        match self.map.get("axis") {
            None => Ok(None),
            Some(s) => {
                let j: u8 = s.parse().map_err(|_| {
                    Error::Argument(format!("invalid value {s:?} for --axis (expected 1, 2, or 3)"))
                })?;
                Axis::from_index(j)
                    .map(Some)
                    .map_err(|_| Error::Argument(format!("invalid value {s:?} for --axis (expected 1, 2, or 3)")))
            }
        }
    }

    pub fn axis_required(&self) -> Result<Axis> {
        self.axis_opt()?.ok_or_else(|| self.missing("axis"))
    }

    pub fn rep_opt(&self) -> Result<Option<Representation>> {
        match self.map.get("rep") {
            None => Ok(None),
            Some(s) => Representation::from_name(s).map(Some).map_err(|_| {
                Error::Argument(format!(
                    "invalid value {s:?} for --rep (expected weyl, dirac, majorana, or jackiw-rebbi)"
                ))
            }),
        }
    }

    /// Particle kind `a`: 1 (right-moving branch) or 2 (left-moving).
    pub fn kind_or_first(&self) -> Result<Chirality> {
        match self.map.get("a") {
            None => Ok(Chirality::Right),
            Some(s) => {
                let a: u8 = s.parse().map_err(|_| {
                    Error::Argument(format!("invalid value {s:?} for --a (expected 1 or 2)"))
                })?;
                Chirality::from_index(a)
                    .map_err(|_| Error::Argument(format!("invalid value {s:?} for --a (expected 1 or 2)")))
            }
        }
    }

    /// Unitary family matrix from the (mu, m0..m3) parameters; all five
    /// keys are required and m must be a unit vector.
    pub fn unitary(&self) -> Result<UnitaryParams> {
        let mu = self.f64_required("mu")?;
        let m = [
            self.f64_required("m0")?,
            self.f64_required("m1")?,
            self.f64_required("m2")?,
            self.f64_required("m3")?,
        ];
        UnitaryParams::new(mu, m)
    }

    pub fn times(&self) -> Result<Vec<f64>> {
        let Some(raw) = self.map.get("times") else {
            return Err(self.missing("times"));
        };
        let mut out = Vec::new();
        for piece in raw.split(',') {
            let t: f64 = piece.trim().parse().map_err(|_| {
                Error::Argument(format!(
                    "invalid value {piece:?} in --times (expected comma-separated numbers)"
                ))
            })?;
            if !t.is_finite() {
                return Err(Error::Argument(format!("non-finite value {t} in --times")));
            }
            out.push(t);
        }
        if out.is_empty() {
            return Err(Error::Argument("--times lists no values".into()));
        }
        Ok(out)
    }

    pub fn format(&self, default: Format, accepted: &[Format]) -> Result<Format> {
        let chosen = match self.map.get("format") {
            None => default,
            Some(s) => match s.as_str() {
                "text" => Format::Text,
                "csv" => Format::Csv,
                "json" => Format::Json,
                other => {
                    return Err(Error::Argument(format!(
                        "invalid value {other:?} for --format (expected text, csv, or json)"
                    )))
                }
            },
        };
        if !accepted.contains(&chosen) {
            let names: Vec<&str> = accepted.iter().map(|f| f.name()).collect();
            return Err(Error::Argument(format!(
                "command {} cannot emit --format {} (choose from {})",
                self.command,
                chosen.name(),
                names.join(", ")
            )));
        }
        Ok(chosen)
    }

    fn missing(&self, key: &str) -> Error {
        Error::Argument(format!(
            "missing required key --{key} for command {}",
            self.command
        ))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}
