//! Text forms for diagrams and characters on the command line.
//!
//! A diagram is `A/B` with comma-separated entries, e.g. `3,0/0`. A single
//! list without `/` means `A = B`, the usual shorthand for a diagram whose
//! only symbols are crosses. The kind is full when `|A| = m` and `|B| = n`
//! and Euler otherwise.

use std::fmt;

use superchar::pairing::proj_char;
use superchar::{euler_char, irr_char, kac_char, Diagram, Kind, LaurentPoly};

use crate::Failure;

fn parse_list(s: &str) -> Result<Vec<i64>, Failure> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}');
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Failure::usage(format!("'{t}' is not an integer")))
        })
        .collect()
}

pub fn parse_diagram(s: &str, m: usize, n: usize) -> Result<Diagram, Failure> {
    let (a, b) = match s.split_once('/') {
        Some((a, b)) => (parse_list(a)?, parse_list(b)?),
        None => {
            let c = parse_list(s)?;
            (c.clone(), c)
        }
    };
    let kind = if a.len() == m && b.len() == n {
        Kind::Full
    } else {
        Kind::Euler
    };
    Diagram::new(m, n, kind, a, b).map_err(|e| Failure::input(e.to_string()))
}

/// A character named on the command line: `kac:D`, `euler:D`, `irr:D`,
/// `proj:D`, or `laurent:JSON` where `JSON` is inline or a file path.
#[derive(Clone, Debug)]
pub enum CharSpec {
    Kac(Diagram),
    Euler(Diagram),
    Irr(Diagram),
    Proj(Diagram),
    Laurent(LaurentPoly),
}

impl CharSpec {
    pub fn parse(s: &str, m: usize, n: usize) -> Result<Self, Failure> {
        let (prefix, rest) = s
            .split_once(':')
            .ok_or_else(|| Failure::usage(format!("'{s}' needs a kac:, euler:, irr:, proj: or laurent: prefix")))?;
        match prefix {
            "kac" => {
                let d = parse_diagram(rest, m, n)?;
                d.require_kind(Kind::Full).map_err(|e| Failure::input(e.to_string()))?;
                Ok(CharSpec::Kac(d))
            }
            "euler" => Ok(CharSpec::Euler(parse_diagram(rest, m, n)?.as_euler())),
            "irr" => Ok(CharSpec::Irr(parse_diagram(rest, m, n)?)),
            "proj" => Ok(CharSpec::Proj(parse_diagram(rest, m, n)?)),
            "laurent" => {
                let text = if rest.trim_start().starts_with('{') {
                    rest.to_string()
                } else {
                    std::fs::read_to_string(rest)
                        .map_err(|e| Failure::input(format!("reading {rest}: {e}")))?
                };
                let p: LaurentPoly = serde_json::from_str(&text)
                    .map_err(|e| Failure::input(format!("Laurent JSON: {e}")))?;
                if p.ambient() != (m, n) {
                    return Err(Failure::input(format!(
                        "polynomial lives in gl({}|{}), expected gl({m}|{n})",
                        p.ambient().0,
                        p.ambient().1
                    )));
                }
                Ok(CharSpec::Laurent(p))
            }
            other => Err(Failure::usage(format!("unknown character kind '{other}'"))),
        }
    }

    /// The character as a Laurent polynomial. Irreducible characters are
    /// computed by window inversion with the given left end.
    pub fn to_laurent(&self, window: Option<i64>) -> Result<LaurentPoly, Failure> {
        let out = match self {
            CharSpec::Kac(d) => kac_char(d).map_err(Failure::compute)?,
            CharSpec::Euler(d) => euler_char(d).map_err(Failure::compute)?,
            CharSpec::Irr(d) => irr_char(d, window).map_err(Failure::compute)?.1,
            CharSpec::Proj(d) => proj_char(d).map_err(Failure::compute)?,
            CharSpec::Laurent(p) => p.clone(),
        };
        Ok(out)
    }
}

impl fmt::Display for CharSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharSpec::Kac(d) => write!(f, "K{d}"),
            CharSpec::Euler(d) => write!(f, "E{d}"),
            CharSpec::Irr(d) => write!(f, "L{d}"),
            CharSpec::Proj(d) => write!(f, "P{d}"),
            CharSpec::Laurent(p) => write!(f, "{p}"),
        }
    }
}
