//! Line-oriented verification reports.
//!
//! ```text
//! CHECK <name> <key> PASS|FAIL slack=<num>/21
//! INFO <name> <key> <free text>
//! SUMMARY checks=<n> pass=<n> fail=<n>
//! ```
//!
//! Slacks are exact: `<num>/21` for potentials, `<num>/84` for charges,
//! an integer for counts, or `-` for yes/no checks.

use std::fmt;

use orelab_core::{Rat21, Rat84};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slack {
    R21(Rat21),
    R84(Rat84),
    Int(i64),
    None,
}

impl Slack {
    /// Pass/fail for a non-strict inequality.
    pub fn nonnegative(self) -> bool {
        match self {
            Slack::R21(s) => !s.is_negative(),
            Slack::R84(s) => !s.is_negative(),
            Slack::Int(s) => s >= 0,
            Slack::None => true,
        }
    }
}

impl fmt::Display for Slack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slack::R21(s) => write!(f, "{s}"),
            Slack::R84(s) => write!(f, "{s}"),
            Slack::Int(s) => write!(f, "{s}"),
            Slack::None => f.write_str("-"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Line {
    Check { name: String, key: String, pass: bool, slack: Slack },
    Info { name: String, key: String, text: String },
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Check { name, key, pass, slack } => write!(f, "CHECK {name} {key} {} slack={slack}", if *pass { "PASS" } else { "FAIL" }),
            Line::Info { name, key, text } => write!(f, "INFO {name} {key} {text}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<Line>,
}

impl Report {
    pub fn check(&mut self, name: &str, key: &str, pass: bool, slack: Slack) {
        self.lines.push(Line::Check { name: name.into(), key: key.into(), pass, slack });
    }

    /// A check whose verdict is the sign of its slack.
    pub fn inequality(&mut self, name: &str, key: &str, slack: Slack) {
        self.check(name, key, slack.nonnegative(), slack);
    }

    pub fn info(&mut self, name: &str, key: &str, text: impl Into<String>) {
        self.lines.push(Line::Info { name: name.into(), key: key.into(), text: text.into() });
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn checks(&self) -> usize {
        self.lines.iter().filter(|l| matches!(l, Line::Check { .. })).count()
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| matches!(l, Line::Check { pass: false, .. })).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn summary(&self) -> String {
        let (c, f) = (self.checks(), self.failures());
        format!("SUMMARY checks={c} pass={} fail={f}", c - f)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        writeln!(f, "{}", self.summary())
    }
}

/// Parses a `CHECK` line back into its parts.
pub fn parse_check(line: &str) -> Option<(String, String, bool, String)> {
    let rest = line.strip_prefix("CHECK ")?;
    let mut parts = rest.split(' ');
    let name = parts.next()?.to_string();
    let key = parts.next()?.to_string();
    let pass = match parts.next()? {
        "PASS" => true,
        "FAIL" => false,
        _ => return None,
    };
    let slack = parts.next()?.strip_prefix("slack=")?.to_string();
    parts.next().is_none().then_some((name, key, pass, slack))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let mut r = Report::default();
        r.inequality("main", "00ff", Slack::R21(Rat21::from_numerator(-3)));
        r.inequality("cover", "00ff", Slack::Int(2));
        r.check("conservation", "00ff", true, Slack::None);
        r.info("receiver", "00ff", "v=3 final=-10/84 counterexample-only bound, not asserted");
        let text = r.to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "CHECK main 00ff FAIL slack=-3/21");
        assert_eq!(lines[1], "CHECK cover 00ff PASS slack=2");
        assert_eq!(lines[2], "CHECK conservation 00ff PASS slack=-");
        assert!(lines[3].starts_with("INFO receiver 00ff "));
        assert_eq!(lines[4], "SUMMARY checks=3 pass=2 fail=1");
        assert_eq!(parse_check(lines[0]), Some(("main".into(), "00ff".into(), false, "-3/21".into())));
        assert_eq!(parse_check(lines[3]), None);
    }
}
