//! The `.rot` graph file format and CSV matrix dumps.
//!
//! A `.rot` file is UTF-8 text:
//!
//! ```text
//! N M
//! u k v l
//! ...
//! ```
//!
//! Line 1 carries the vertex count and degree; each of the following `N*M`
//! lines states `Rot(u, k) = (v, l)`. All values are 1-based. The writer
//! emits the data lines in row-major `(u, k)` order; the parser accepts any
//! order but requires a complete bijective table. Lines starting with `#`
//! are comments and are ignored. Parsing is strict: a wrong line count or a
//! non-bijective table is a hard error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::LabelledDigraph;
use crate::scalar::Real;

/// Parses a `.rot` document from a string.
pub fn parse_rot(text: &str) -> Result<LabelledDigraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut table: Vec<((usize, usize), (usize, usize))> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            return Err(Error::Parse {
                line: line_no,
                msg: "blank line".into(),
            });
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected `N M`, got {} fields", fields.len()),
                    });
                }
                let n = parse_positive(fields[0], line_no)?;
                let m = parse_positive(fields[1], line_no)?;
                header = Some((n, m));
                table.reserve(n * m);
            }
            Some((n, m)) => {
                if fields.len() != 4 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("expected `u k v l`, got {} fields", fields.len()),
                    });
                }
                let u = parse_index(fields[0], n, line_no)?;
                let k = parse_index(fields[1], m, line_no)?;
                let v = parse_index(fields[2], n, line_no)?;
                let l = parse_index(fields[3], m, line_no)?;
                table.push(((u, k), (v, l)));
            }
        }
    }

    let (n, m) = header.ok_or(Error::Parse {
        line: 1,
        msg: "empty document".into(),
    })?;
    if table.len() != n * m {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("expected {} rotation lines, found {}", n * m, table.len()),
        });
    }
    LabelledDigraph::from_rotation_table(n, m, &table).map_err(|e| Error::Parse {
        line: 1,
        msg: e.to_string(),
    })
}

fn parse_positive(s: &str, line: usize) -> Result<usize> {
    let v: usize = s.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("not a positive integer: {s:?}"),
    })?;
    if v == 0 {
        return Err(Error::Parse {
            line,
            msg: "value must be at least 1".into(),
        });
    }
    Ok(v)
}

fn parse_index(s: &str, bound: usize, line: usize) -> Result<usize> {
    let v = parse_positive(s, line)?;
    if v > bound {
        return Err(Error::Parse {
            line,
            msg: format!("index {v} exceeds bound {bound}"),
        });
    }
    Ok(v - 1)
}

/// Renders a graph as a `.rot` document.
pub fn format_rot(g: &LabelledDigraph) -> String {
    let (n, m) = (g.n_vertices(), g.degree());
    let mut out = String::with_capacity(16 * n * m);
    let _ = writeln!(out, "{n} {m}");
    for u in 0..n {
        for k in 0..m {
            let (v, l) = g.rot_of(u, k).expect("in-range by construction");
            let _ = writeln!(out, "{} {} {} {}", u + 1, k + 1, v + 1, l + 1);
        }
    }
    out
}

/// Reads a graph from a `.rot` file.
pub fn read_rot(path: impl AsRef<Path>) -> Result<LabelledDigraph> {
    let text = fs::read_to_string(path)?;
    parse_rot(&text)
}

/// Writes a graph to a `.rot` file. Output is byte-deterministic.
pub fn write_rot(g: &LabelledDigraph, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, format_rot(g))?;
    Ok(())
}

/// Dumps a dense matrix as CSV, one row per line, entries in scientific
/// notation with 17 significant digits, for external verification.
pub fn write_matrix_csv<T: Real, W: Write>(m: &DMatrix<T>, w: &mut W) -> std::io::Result<()> {
    for i in 0..m.nrows() {
        let mut line = String::new();
        for j in 0..m.ncols() {
            if j > 0 {
                line.push(',');
            }
            let _ = write!(line, "{:.16e}", m[(i, j)].to_f64().unwrap_or(f64::NAN));
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let g = LabelledDigraph::from_rotation_table(
            2,
            2,
            &[
                ((0, 0), (0, 1)),
                ((0, 1), (1, 0)),
                ((1, 0), (1, 1)),
                ((1, 1), (0, 0)),
            ],
        )
        .unwrap();
        let text = format_rot(&g);
        let back = parse_rot(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(text, format_rot(&back));
    }

    #[test]
    fn comments_are_ignored() {
        let text = "# a comment\n2 1\n# another\n1 1 2 1\n2 1 1 1\n";
        let g = parse_rot(text).unwrap();
        assert_eq!(g.rot_of(0, 0).unwrap(), (1, 0));
    }

    #[test]
    fn wrong_line_count_is_an_error() {
        let text = "2 1\n1 1 2 1\n";
        assert!(matches!(parse_rot(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn non_bijective_table_is_an_error() {
        let text = "2 1\n1 1 2 1\n2 1 2 1\n";
        assert!(matches!(parse_rot(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn out_of_range_index_is_an_error() {
        let text = "2 1\n1 1 3 1\n2 1 1 1\n";
        assert!(matches!(parse_rot(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn zero_index_is_an_error() {
        let text = "2 1\n0 1 1 1\n2 1 1 1\n";
        assert!(matches!(parse_rot(text), Err(Error::Parse { .. })));
    }

    proptest::proptest! {
        #[test]
        fn random_graphs_round_trip(seed in 0u64..1000, n in 1usize..9, m in 1usize..5) {
            use crate::randgen::{config_model, random_labelling, SeededRng};
            let e = config_model(n, m, &mut SeededRng::new(seed, 0));
            let g = random_labelling(&e, m, &mut SeededRng::new(seed, 1)).unwrap();
            let back = parse_rot(&format_rot(&g)).unwrap();
            proptest::prop_assert_eq!(g, back);
        }
    }

    #[test]
    fn matrix_csv_has_full_precision() {
        let m = DMatrix::<f64>::from_row_slice(1, 2, &[1.0 / 3.0, 2.0]);
        let mut buf = Vec::new();
        write_matrix_csv(&m, &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s, "3.3333333333333331e-1,2.0000000000000000e0\n");
    }
}
