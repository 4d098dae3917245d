//! Deterministic text rendering for algebra elements, rationals, and tables.

use num_traits::{One, Signed, Zero};
use rootspace::algebra::{pair_name, ClassicalAlgebra, Family};
use rootspace::matrix::ExactMatrix;
use rootspace::Rational;

/// Rational as `p/q`, or just `p` when the denominator is one.
pub fn rat_str(r: &Rational) -> String {
    r.to_string()
}

/// One summand of a linear combination over named elements.
pub struct Term {
    pub coeff: Rational,
    pub label: String,
}

/// Renders a signed sum like `-1/2E_12+1/2Y_12`; the zero sum renders as `0`.
///
/// Unit coefficients are dropped, the leading term carries a bare `-` when
/// negative, and later terms are joined by `+` or `-`.
pub fn render_terms(terms: &[Term]) -> String {
    let mut out = String::new();
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        if out.is_empty() {
            if t.coeff.is_negative() {
                out.push('-');
            }
        } else {
            out.push(if t.coeff.is_negative() { '-' } else { '+' });
        }
        let mag = t.coeff.abs();
        if !mag.is_one() {
            out.push_str(&rat_str(&mag));
        }
        out.push_str(&t.label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Torus-part terms.  For the special unitary family, maximal runs of equal
/// nonzero coefficients over consecutive H_{k,k+1} merge into a single chain
/// element (H_12 + H_23 with equal weight prints as that weight times H_13).
fn torus_terms(alg: &ClassicalAlgebra, coeffs: &[Rational]) -> Vec<Term> {
    let mut terms = Vec::new();
    if alg.family == Family::SU {
        let mut k = 0;
        while k < coeffs.len() {
            if coeffs[k].is_zero() {
                k += 1;
                continue;
            }
            let start = k;
            while k + 1 < coeffs.len() && coeffs[k + 1] == coeffs[start] {
                k += 1;
            }
            terms.push(Term {
                coeff: coeffs[start].clone(),
                label: pair_name('H', start + 1, k + 2),
            });
            k += 1;
        }
    } else {
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.push(Term {
                    coeff: c.clone(),
                    label: format!("H_{}", k + 1),
                });
            }
        }
    }
    terms
}

/// Renders a full coefficient vector over the algebra's named basis.
pub fn render_coeffs(alg: &ClassicalAlgebra, coeffs: &[Rational]) -> String {
    let mut terms = torus_terms(alg, &coeffs[..alg.rank]);
    for (j, c) in coeffs[alg.rank..].iter().enumerate() {
        if !c.is_zero() {
            terms.push(Term {
                coeff: c.clone(),
                label: alg.basis[alg.rank + j].name.clone(),
            });
        }
    }
    render_terms(&terms)
}

/// Expands a matrix over the algebra basis and renders it.
pub fn render_element(alg: &ClassicalAlgebra, m: &ExactMatrix) -> rootspace::error::Result<String> {
    let coeffs = alg.expand(m)?;
    Ok(render_coeffs(alg, &coeffs))
}

/// Diagonal entries of a torus element of the special unitary family, given
/// its coordinates over H_12..H_(n-1)n, as `diag(l1, ..., ln)`.
pub fn su_diag(coeffs: &[Rational]) -> String {
    let n = coeffs.len() + 1;
    let mut entries = Vec::with_capacity(n);
    for j in 0..n {
        let hi = if j < coeffs.len() { coeffs[j].clone() } else { Rational::zero() };
        let lo = if j > 0 { coeffs[j - 1].clone() } else { Rational::zero() };
        entries.push(rat_str(&(hi - lo)));
    }
    format!("diag({})", entries.join(", "))
}

/// Tuple like `(1, 0, -3/2)`.
pub fn tuple_str(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(rat_str).collect();
    format!("({})", parts.join(", "))
}

/// Fixed-width grid with a corner label, column headers, and row headers.
pub fn render_grid(
    corner: &str,
    col_headers: &[String],
    row_headers: &[String],
    cells: &[Vec<String>],
) -> String {
    let mut w0 = corner.len();
    for rh in row_headers {
        w0 = w0.max(rh.len());
    }
    let mut widths: Vec<usize> = col_headers.iter().map(String::len).collect();
    for row in cells {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    out.push_str(&format!("{corner:<w0$} |"));
    for (h, w) in col_headers.iter().zip(&widths) {
        out.push_str(&format!(" {h:<w$}"));
    }
    while out.ends_with(' ') {
        out.pop();
    }
    out.push('\n');
    out.push_str(&"-".repeat(w0));
    out.push_str("-+");
    for w in &widths {
        out.push_str(&"-".repeat(w + 1));
    }
    out.push('\n');
    for (rh, row) in row_headers.iter().zip(cells) {
        out.push_str(&format!("{rh:<w0$} |"));
        for (cell, w) in row.iter().zip(&widths) {
            out.push_str(&format!(" {cell:<w$}"));
        }
        // Trim trailing padding so lines never end in spaces.
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out
}

/// Plain left-aligned columns without a header rule, for listings.
pub fn render_columns(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (j, cell) in row.iter().enumerate() {
            if j + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<w$}  ", w = widths[j]));
            }
        }
        while line.ends_with(' ') {
            line.pop();
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Human name of the algebra: su(3), so(16), sp(8).
pub fn display_name(alg: &ClassicalAlgebra) -> String {
    match alg.family {
        Family::SU => format!("su({})", alg.n),
        Family::SOEven => format!("so({})", 2 * alg.n),
        Family::SOOdd => format!("so({})", 2 * alg.n + 1),
        Family::Sp => format!("sp({})", alg.n),
    }
}
