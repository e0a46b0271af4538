use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use modnine::report::Flags;
use modnine::{render, run_all, run_sections};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Group,
    Units,
    Cover,
    Fcover,
    Xprime,
    Curves,
    Integral,
    Report,
}

#[derive(Parser, Debug)]
#[command(name = "modnine", version, about = "Exact checks for a genus-zero level-9 cover of the j-line")]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// q9 truncation order.
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u32).range(20..))]
    order: u32,
    /// Height bound for the Diophantine sweeps.
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(i64).range(1..))]
    height: i64,
    /// Primes below this bound enter the Frobenius sweep.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(7..))]
    pmax: u64,
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    json: Option<String>,
    /// Print only non-passing checks and the summary.
    #[arg(long)]
    quiet: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags =
        Flags { order: cli.order as usize, height: cli.height, pmax: cli.pmax, json: cli.json.clone(), quiet: cli.quiet };
    let (sections, report) = match cli.command {
        Command::Report => run_all(&flags),
        c => {
            let name = c.to_possible_value().expect("named").get_name().to_string();
            run_sections(&[name.as_str()], &flags).expect("known section")
        }
    };
    print!("{}", render(&sections, &report, flags.quiet));
    if let Some(path) = &flags.json {
        let written = report.to_json().map_err(|e| e.to_string()).and_then(|s| std::fs::write(path, s).map_err(|e| e.to_string()));
        if let Err(e) = written {
            eprintln!("modnine: cannot write {path}: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::error::ErrorKind;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("modnine").chain(args.iter().copied()))
    }

    #[test]
    fn defaults() {
        let c = parse(&["report"]).unwrap();
        assert_eq!((c.order, c.height, c.pmax, c.quiet), (60, 256, 10_000, false));
        assert!(c.json.is_none());
    }

    #[test]
    fn flags() {
        let c = parse(&["integral", "--height", "10000", "--order", "200", "--json", "r.json", "--quiet"]).unwrap();
        assert!(matches!(c.command, Command::Integral));
        assert_eq!((c.order, c.height, c.json.as_deref(), c.quiet), (200, 10_000, Some("r.json"), true));
    }

    #[test]
    fn usage_errors_exit_2() {
        for args in [&["frobnicate"][..], &["group", "--order", "x"], &["group", "--height", "0"], &["group", "--pmax", "3"], &[]] {
            let e = parse(args).unwrap_err();
            assert_eq!(e.exit_code(), 2, "{args:?}");
            assert_ne!(e.kind(), ErrorKind::DisplayHelp);
        }
    }
}
