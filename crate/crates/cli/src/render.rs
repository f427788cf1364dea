use std::fmt::Write as _;
use std::io::IsTerminal;

use nmrsim_core::{Complex64, ComplexMatrix};
use serde::Serialize;

pub struct Style {
    color: bool,
}

impl Style {
    pub fn detect() -> Self {
        let color = std::env::var_os("NMRSIM_NO_COLOR").is_none() && std::io::stdout().is_terminal();
        Self { color }
    }

    fn paint(&self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    pub fn verdict(&self, ok: bool) -> String {
        if ok {
            self.paint("32", "pass")
        } else {
            self.paint("31", "FAIL")
        }
    }

    pub fn yes_no(&self, yes: bool) -> &'static str {
        if yes {
            "yes"
        } else {
            "no"
        }
    }

    pub fn heading(&self, text: &str) -> String {
        self.paint("1", text)
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn entry(z: Complex64, decimals: usize) -> String {
    // avoid printing "-0.0000"
    let clean = |x: f64| {
        if x.abs() < 0.5 * 10f64.powi(-(decimals as i32)) {
            0.0
        } else {
            x
        }
    };
    let (re, im) = (clean(z.re), clean(z.im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{re:.decimals$}{sign}{:.decimals$}i", im.abs())
}

pub fn matrix(m: &ComplexMatrix, decimals: usize) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|&z| entry(z, decimals)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "  {}", line.join("  ")).unwrap();
    }
    out
}

/// Two-column `name  value` lines with the names padded to a common width.
pub fn fields(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        writeln!(out, "  {k:<width$}  {v}").unwrap();
    }
    out
}

pub fn num(x: f64) -> String {
    format!("{x:.12}")
}

pub fn sci(x: f64) -> String {
    format!("{x:.3e}")
}
