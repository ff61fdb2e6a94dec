//! Plain-text rendering: basis names, vectors and aligned tables.

use littleweyl::lie::BasisElement;
use littleweyl::rational::QStr;
use littleweyl::{LieAlgebra, Q};
use num_traits::{One, Signed, Zero};

fn coords(c: &[i64]) -> String {
    c.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

pub fn root(c: &[i64]) -> String {
    format!("({})", coords(c))
}

pub fn roots(rs: &[Vec<i64>]) -> String {
    if rs.is_empty() {
        "∅".into()
    } else {
        rs.iter().map(|r| root(r)).collect::<Vec<_>>().join(" ")
    }
}

pub fn basis_name(g: &LieAlgebra, k: usize) -> String {
    let pos: Vec<usize> = g.positive_roots().collect();
    match g.basis_elements()[k] {
        BasisElement::Neg(i) => format!("f{}", root(&g.root(pos[i]))),
        BasisElement::Pos(i) => format!("e{}", root(&g.root(pos[i]))),
        BasisElement::Cartan(i) => format!("h{}", i + 1),
        BasisElement::Center(i) => format!("z{}", i + 1),
    }
}

fn term(c: &Q, name: &str, first: bool) -> String {
    let sign = if c.is_negative() {
        if first { "-" } else { " - " }
    } else if first {
        ""
    } else {
        " + "
    };
    let a = c.abs();
    if a.is_one() {
        format!("{sign}{name}")
    } else {
        format!("{sign}{a}·{name}")
    }
}

/// An element of `g` as a combination of named basis vectors.
pub fn element(g: &LieAlgebra, v: &[QStr]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if !c.0.is_zero() {
            out += &term(&c.0, &basis_name(g, k), out.is_empty());
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn vector(v: &[QStr]) -> String {
    format!("({})", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
}

pub fn vectors(vs: &[Vec<QStr>]) -> String {
    if vs.is_empty() {
        "0".into()
    } else {
        vs.iter().map(|v| vector(v)).collect::<Vec<_>>().join(" ")
    }
}

pub fn signs(s: &[i8]) -> String {
    s.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect()
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(headers.to_vec())];
    out.push(line(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for r in rows {
        out.push(line(r.iter().map(String::as_str).collect()));
    }
    out.join("\n") + "\n"
}

/// `key: value` lines.
pub fn fields(items: &[(&str, String)]) -> String {
    items.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}
