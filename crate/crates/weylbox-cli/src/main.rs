//! `weylbox`: batch front end for the boxed massless-fermion library.
//!
//! Exit codes: 0 success, 1 numeric or consistency failure, 2 usage error.

mod args;
mod commands;
mod render;

use std::process::ExitCode;

use weylbox::Error;

use crate::args::Params;

const USAGE: &str = "\
usage: weylbox <command> [--key value ...] [--config FILE]

commands:
  matrices       gamma matrices and family axis per representation [--rep NAME]
  bc             print one boundary family member as a reloadable config
  classify       confinement and reality classification of a member
  spectrum       wave numbers of a member in a window [--kmin --kmax]
  eigenfunction  sampled eigenfunction of one isolated eigenvalue [--grid N]
  weyl1d         one-component spectrum for a phase member [--eta]
  boost          boost matrices: 1+1 by default, 3+1 with --axis [--omega]
  rotate         rotation matrices in 3+1 dimensions [--axis --theta]
  helicity       helicity, spin, and speed table for plane waves [--a 1|2]
  evolve         Gaussian-packet diagnostics over --times t1,t2,...
  check          reduced invariant suite, seeded and deterministic [--seed N]

family members are entered as --axis 1|2|3 (or --rep weyl|dirac|majorana|
jackiw-rebbi) plus --mu and a unit vector --m0 --m1 --m2 --m3; the matrix
is exp(i mu) (m0 - i m.sigma). Angles are radians; lengths are in box
units with c = 1.

common keys: --format text|csv|json, --output-path FILE, --config FILE
(config files hold key=value lines and # comments; flags override them)
";

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    if argv.is_empty() {
        eprint!("{USAGE}");
        return ExitCode::from(2);
    }
    if argv[0] == "help" || argv[0] == "--help" || argv[0] == "-h" {
        print!("{USAGE}");
        return ExitCode::SUCCESS;
    }
    match run(&argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Argument(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(argv: &[String]) -> weylbox::Result<()> {
    let inv = args::parse(argv)?;
    let p = Params::new(&inv.command, &inv.params);
    let output = match inv.command.as_str() {
        "matrices" => commands::matrices(&p)?,
        "bc" => commands::bc(&p)?,
        "classify" => commands::classify(&p)?,
        "spectrum" => commands::spectrum(&p)?,
        "eigenfunction" => commands::eigenfunction(&p)?,
        "weyl1d" => commands::weyl1d(&p)?,
        "boost" => commands::boost(&p)?,
        "rotate" => commands::rotate(&p)?,
        "helicity" => commands::helicity(&p)?,
        "evolve" => commands::evolve(&p)?,
        "check" => commands::check(&p)?,
        other => {
            eprint!("{USAGE}");
            return Err(Error::Argument(format!("unknown command {other:?}")));
        }
    };
    match p.raw("output-path") {
        Some(path) => std::fs::write(path, output)
            .map_err(|e| Error::Argument(format!("output path {path}: {e}")))?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(output.as_bytes()).and_then(|_| stdout.flush()) {
                // A closed pipe (weylbox ... | head) is a normal way for
                // the reader to stop; anything else is a real failure.
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(Error::Numeric(format!("writing to stdout: {e}")));
                }
            }
        }
    }
    Ok(())
}
