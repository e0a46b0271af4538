//! Command-line checks over the exact core: section runners, the JSON report, and exit codes.

pub mod checks;
pub mod report;

use checks::{section, Section, SUBCOMMANDS};
use report::{Flags, Report};

/// Run the named sections in order. Unknown names yield `None`.
pub fn run_sections(names: &[&str], flags: &Flags) -> Option<(Vec<Section>, Report)> {
    let mut sections = Vec::new();
    for n in names {
        sections.push(section(n, flags)?);
    }
    let results = sections.iter().flat_map(|s| s.results.iter().cloned()).collect();
    Some((sections, Report::new(flags.clone(), results)))
}

/// Every section, in the order `report` runs them.
pub fn run_all(flags: &Flags) -> (Vec<Section>, Report) {
    run_sections(&SUBCOMMANDS, flags).expect("known sections")
}

/// Human-readable rendering of a run.
pub fn render(sections: &[Section], report: &Report, quiet: bool) -> String {
    use report::Status;
    let mut out = String::new();
    for s in sections {
        if !quiet {
            out.push_str(&format!("== {} ==\n", s.name));
            for l in &s.lines {
                out.push_str(l);
                out.push('\n');
            }
        }
        for r in &s.results {
            if !quiet || r.status != Status::Pass {
                out.push_str(&format!("{r}\n"));
            }
        }
    }
    out.push_str(&format!(
        "{} pass, {} flagged, {} fail\n",
        report.count(Status::Pass),
        report.count(Status::Flagged),
        report.count(Status::Fail)
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use report::Status;

    #[test]
    fn unknown_section() {
        assert!(run_sections(&["nope"], &Flags::default()).is_none());
    }

    #[test]
    fn group_section_passes() {
        let (sections, report) = run_sections(&["group"], &Flags::default()).unwrap();
        assert_eq!(report.exit_code(), 0);
        assert!(report.results.iter().all(|r| r.check_id.starts_with("group.")));
        assert!(report.count(Status::Flagged) >= 3);
        let text = render(&sections, &report, false);
        assert!(text.contains("27 lifts") && text.contains("|G| = 24") && text.contains("genus table"));
        let quiet = render(&sections, &report, true);
        assert!(!quiet.contains("[pass]") && quiet.contains("[flagged]"));
    }

    #[test]
    fn integral_section_prints_nine_rows() {
        let (sections, report) = run_sections(&["integral"], &Flags::default()).unwrap();
        assert_eq!(report.exit_code(), 0);
        let rows = sections[0].lines.iter().filter(|l| l.trim_start().starts_with("x =")).count();
        assert_eq!(rows, 9);
    }

    #[test]
    fn output_is_deterministic() {
        let flags = Flags { order: 40, ..Flags::default() };
        let a = run_sections(&["units", "curves"], &flags).unwrap().1;
        let b = run_sections(&["units", "curves"], &flags).unwrap().1;
        assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
    }
}
