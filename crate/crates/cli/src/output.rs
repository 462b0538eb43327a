//! Text rendering helpers: Gaussian-rational entries, matrix grids, and
//! aligned tables.

use ga_core::{CMat, GaussianRational};
use num_traits::{One, Signed, Zero};

/// Canonical entry syntax: `0`, `1`, `-1/2`, `i`, `-3/4i`, `1/2+i`, `2-3i`.
pub fn gaussian_str(z: &GaussianRational) -> String {
    let re = &z.re;
    let im = &z.im;
    if im.is_zero() {
        return re.to_string();
    }
    let imag = |out: &mut String, lead: bool| {
        let magnitude = im.abs();
        if im.is_negative() {
            out.push('-');
        } else if !lead {
            out.push('+');
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
        }
        out.push('i');
    };
    let mut out = String::new();
    if re.is_zero() {
        imag(&mut out, true);
    } else {
        out.push_str(&re.to_string());
        imag(&mut out, false);
    }
    out
}

/// Fixed-width matrix grid, entries right-aligned per column.
pub fn matrix_grid(m: &CMat) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| gaussian_str(&m[(i, j)])).collect())
        .collect();
    let widths: Vec<usize> = (0..m.cols())
        .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        out.push('[');
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            out.push_str(&" ".repeat(widths[j] - cell.len()));
            out.push_str(cell);
        }
        out.push_str("]\n");
    }
    out
}

/// Render rows as a left-aligned table under a header.
pub fn aligned_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let render = |cells: &[String]| -> String {
        let mut line = String::new();
        for (j, cell) in cells.iter().enumerate() {
            if j > 0 {
                line.push_str("  ");
            }
            // last column ragged
            if j + 1 == cells.len() {
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.push_str(&" ".repeat(widths[j] - cell.len()));
            }
        }
        line.push('\n');
        line
    };
    let mut out = render(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for row in rows {
        out.push_str(&render(row));
    }
    out
}
