//! TikZ rendering of labeled cubes, for ambient dimension up to 3.
//!
//! Every cell of the cube gets a node carrying its face label in TeX form;
//! edges are drawn between adjacent vertices. The square and the interval
//! include the interior label, the 3-cube shows its boundary cells only
//! (there is no sensible planar spot for the interior). Placement follows a
//! fixed oblique projection; anchors are a small heuristic.

use thiserror::Error;

use crate::cube::{enumerate_codes, proper_codes, Code, Entry};
use crate::face::{face_label, FaceLabel, IntervalSum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TikzError {
    #[error("tikz rendering is only defined for 1 <= n <= 3, got {0}")]
    UnsupportedDimension(usize),
}

fn axes(n: usize) -> Vec<(f64, f64)> {
    match n {
        1 => vec![(2.0, 0.0)],
        2 => vec![(2.0, 0.0), (0.0, 2.0)],
        // the middle axis is the depth direction of the oblique projection
        _ => vec![(4.0, 0.0), (2.0, 2.0), (0.0, 4.0)],
    }
}

fn coordinate(e: Entry) -> f64 {
    match e {
        Entry::Zero => 0.0,
        Entry::One => 1.0,
        Entry::Free => 0.5,
    }
}

fn center(code: &Code, axes: &[(f64, f64)]) -> (f64, f64) {
    let mut x = 0.0;
    let mut y = 0.0;
    for (e, (ax, ay)) in code.entries().iter().zip(axes) {
        let c = coordinate(*e);
        x += c * ax;
        y += c * ay;
    }
    (x, y)
}

fn tex_interval(arg: &IntervalSum) -> String {
    (arg.lo()..=arg.hi())
        .map(|i| {
            if i < 10 {
                format!("x_{i}")
            } else {
                format!("x_{{{i}}}")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

fn tex_label(label: &FaceLabel) -> String {
    label
        .terms()
        .iter()
        .map(|t| {
            let args = t
                .args()
                .iter()
                .map(tex_interval)
                .collect::<Vec<_>>()
                .join(", ");
            format!("\\varphi_a^{{{args}}}")
        })
        .collect::<Vec<_>>()
        .join(" \\oplus ")
}

// anchor heuristic for the interval and the square; the 3-cube uses plain
// white-backed nodes everywhere
fn node_options(code: &Code) -> String {
    let n = code.n();
    if n == 3 {
        return "[fill=white, inner sep=1pt]".to_string();
    }
    let e = code.entries();
    match n {
        1 => match e[0] {
            Entry::Zero => "[below left]".to_string(),
            Entry::One => "[below right]".to_string(),
            Entry::Free => "[below]".to_string(),
        },
        _ => match (e[0], e[1]) {
            (Entry::Free, Entry::Free) => String::new(),
            (Entry::Free, Entry::Zero) => "[below]".to_string(),
            (Entry::Free, Entry::One) => "[above]".to_string(),
            (Entry::Zero, Entry::Free) => "[left]".to_string(),
            (Entry::One, Entry::Free) => "[right]".to_string(),
            (h, v) => {
                let vert = if v == Entry::Zero { "below" } else { "above" };
                let horiz = if h == Entry::Zero { "left" } else { "right" };
                format!("[{vert} {horiz}]")
            }
        },
    }
}

fn fmt_point((x, y): (f64, f64)) -> String {
    format!("({x},{y})")
}

/// Renders the labeled n-cube as a TikZ picture.
pub fn render_tikz(n: usize) -> Result<String, TikzError> {
    if n == 0 || n > 3 {
        return Err(TikzError::UnsupportedDimension(n));
    }
    let axes = axes(n);
    let scale = if n == 3 { 1.7 } else { 1.8 };
    let mut out = String::new();
    out.push_str(&format!("\\begin{{tikzpicture}}[scale={scale}]\n"));

    // edges between adjacent vertices
    let all = enumerate_codes(n).expect("n >= 1");
    for code in &all {
        if code.dim() != 0 {
            continue;
        }
        for (j, e) in code.entries().iter().enumerate() {
            if *e != Entry::Zero {
                continue;
            }
            let mut other = code.entries().to_vec();
            other[j] = Entry::One;
            let partner = Code::new(other).expect("same length");
            out.push_str(&format!(
                "\\draw {} -- {};\n",
                fmt_point(center(code, &axes)),
                fmt_point(center(&partner, &axes))
            ));
        }
    }

    let cells = if n == 3 { proper_codes(n) } else { enumerate_codes(n) };
    for code in cells.expect("n >= 1") {
        let label = face_label(&code);
        out.push_str(&format!(
            "\\node{} at {} {{${}$}};\n",
            node_options(&code),
            fmt_point(center(&code, &axes)),
            tex_label(&label)
        ));
    }
    out.push_str("\\end{tikzpicture}\n");
    Ok(out)
}
