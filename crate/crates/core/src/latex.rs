//! LaTeX rendering of Laurent polynomials and character combinations.

use num_traits::{One, Signed};

use crate::characters::CharCombination;
use crate::diagrams::Diagram;
use crate::laurent::LaurentPoly;

fn var(out: &mut Vec<String>, name: &str, idx: usize, e: i64) {
    match e {
        0 => {}
        1 => out.push(format!("{name}_{{{}}}", idx + 1)),
        _ => out.push(format!("{name}_{{{}}}^{{{e}}}", idx + 1)),
    }
}

/// Terms in decreasing canonical order, e.g. `1 - 2 x_{1}^{-1} y_{1}`.
pub fn laurent_to_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (mono, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        if i > 0 {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        } else if c.is_negative() {
            out.push('-');
        }
        let abs = c.abs();
        let mut vars = vec![];
        for (j, &e) in mono.x.iter().enumerate() {
            var(&mut vars, "x", j, e);
        }
        for (j, &e) in mono.y.iter().enumerate() {
            var(&mut vars, "y", j, e);
        }
        if vars.is_empty() || !abs.is_one() {
            out.push_str(&abs.to_string());
            if !vars.is_empty() {
                out.push(' ');
            }
        }
        out.push_str(&vars.join(" "));
    }
    out
}

fn list(xs: impl DoubleEndedIterator<Item = i64>) -> String {
    xs.rev().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// `(A, A)` diagrams are written by their crosses, as in `E(0,-1)`; other
/// diagrams as `(\{A\},\{B\})`.
pub fn diagram_to_latex(d: &Diagram) -> String {
    if d.a() == d.b() {
        if d.a().is_empty() {
            return "\\emptyset".to_string();
        }
        return list(d.a().iter().copied());
    }
    format!(
        "\\{{{}\\}},\\{{{}\\}}",
        list(d.a().iter().copied()),
        list(d.b().iter().copied())
    )
}

/// `\mathrm{ch}\,E(\emptyset) - \mathrm{ch}\,E(0)` and the like.
pub fn combination_to_latex(c: &CharCombination) -> String {
    if c.is_empty() {
        return "0".to_string();
    }
    let symbol = c.basis().symbol();
    let mut out = String::new();
    for (i, (d, k)) in c.terms().enumerate() {
        if i > 0 {
            out.push_str(if k < 0 { " - " } else { " + " });
        } else if k < 0 {
            out.push('-');
        }
        if k.abs() != 1 {
            out.push_str(&format!("{} ", k.abs()));
        }
        out.push_str(&format!("\\mathrm{{ch}}\\,{symbol}({})", diagram_to_latex(d)));
    }
    out
}
