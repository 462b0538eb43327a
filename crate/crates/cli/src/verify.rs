//! Golden-table verification: every fixture row is re-derived by the engine
//! and each mismatch is reported with its file line.

use ga_core::golden::GoldenTable;
use ga_core::scalar::int;
use ga_core::{centralizer, spinor_representation, MatrixRep, Mv, Rational, Result, RingKind};

pub struct CheckResult {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

pub struct RowReport {
    pub k: i32,
    pub line: usize,
    pub checks: Vec<CheckResult>,
}

impl RowReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

pub struct TableReport {
    pub p: u32,
    pub q: u32,
    pub source: String,
    pub rows: Vec<RowReport>,
}

impl TableReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(RowReport::ok)
    }
}

fn check(name: &'static str, ok: bool, detail: String) -> CheckResult {
    CheckResult { name, ok, detail }
}

fn eq_check<T: PartialEq + std::fmt::Display>(name: &'static str, got: T, want: T) -> CheckResult {
    let ok = got == want;
    let detail = if ok {
        format!("{got}")
    } else {
        format!("got {got}, want {want}")
    };
    CheckResult { name, ok, detail }
}

type Involution = (&'static str, fn(&Mv) -> Mv, i64);

/// Expected sign flip of the class index under each involution, from its
/// action on the pseudoscalar (n odd).
fn involution_flips(n: u32) -> [Involution; 3] {
    let rev: i64 = if n % 4 == 1 { 1 } else { -1 };
    [
        ("grade_involution", |f: &Mv| f.grade_involution(), -1),
        ("reversion", |f: &Mv| f.reversion(), rev),
        (
            "clifford_conjugation",
            |f: &Mv| f.clifford_conjugation(),
            -rev,
        ),
    ]
}

pub fn verify_table(table: &GoldenTable, source: String) -> Result<TableReport> {
    let sig = table.sig;
    let d = sig.d() as i64;
    let is_complex = sig.ring() == RingKind::C;
    let rep: Option<MatrixRep> = if is_complex {
        Some(spinor_representation(sig)?)
    } else {
        None
    };

    let mut rows = Vec::new();
    for row in &table.rows {
        let f = &row.element;
        let k = row.k as i64;
        let mut checks = Vec::new();

        let square = f * f;
        let minus_one = Mv::scalar(sig, int(-1));
        checks.push(check(
            "root",
            square == minus_one,
            if square == minus_one {
                "f^2 = -1".into()
            } else {
                format!("f^2 = {square}")
            },
        ));

        checks.push(eq_check("scal", f.scal(), int(0)));

        if !sig.n().is_multiple_of(2) {
            let expected = Rational::new(k.into(), d.into());
            checks.push(eq_check("spec", f.spec()?, expected));
        }

        let cent = centralizer(f).len() as i64;
        let expected_cent = if is_complex {
            2 * ((d + k).pow(2) + (d - k).pow(2))
        } else {
            sig.dim() as i64 / 2
        };
        checks.push(eq_check("centralizer_dim", cent, expected_cent));

        if let Some(rep) = &rep {
            match rep.char_min_poly(f) {
                Ok((exps, _)) => {
                    checks.push(eq_check(
                        "char_poly",
                        format!("({},{})", exps.n1, exps.n2),
                        format!("({},{})", row.n1, row.n2),
                    ));
                    checks.push(eq_check(
                        "char_poly_formula",
                        format!("({},{})", exps.n1, exps.n2),
                        format!("({},{})", d + k, d - k),
                    ));
                }
                Err(e) => checks.push(check("char_poly", false, e.to_string())),
            }
        }

        if !sig.n().is_multiple_of(2) {
            for (name, involution, flip) in involution_flips(sig.n()) {
                let image = involution(f);
                let ok_root = image.is_root_of_minus_one();
                let expected = Rational::new((flip * k).into(), d.into());
                let spec = image.spec()?;
                let ok = ok_root && spec == expected;
                let detail = if ok {
                    format!("maps class {k} to class {}", flip * k)
                } else if !ok_root {
                    "image does not square to -1".to_string()
                } else {
                    format!("image has Spec {spec}, want {expected}")
                };
                checks.push(check(name, ok, detail));
            }
        }

        rows.push(RowReport {
            k: row.k,
            line: row.line,
            checks,
        });
    }
    Ok(TableReport {
        p: sig.p(),
        q: sig.q(),
        source,
        rows,
    })
}
