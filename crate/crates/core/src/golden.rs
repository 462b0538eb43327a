//! Plain-text root-table fixtures.
//!
//! One file per algebra. `#` starts a comment, a `signature p q` line pins
//! the algebra, and each row reads `k | element | n1 n2` with the element in
//! the multivector literal syntax and (n1, n2) the exponents of the
//! characteristic polynomial (t-i)^n1 (t+i)^n2.

use crate::error::{GaError, Result};
use crate::parse::parse_multivector;
use crate::signature::Signature;
use crate::Mv;

#[derive(Debug, Clone)]
pub struct GoldenRow {
    pub k: i32,
    pub element: Mv,
    pub n1: u32,
    pub n2: u32,
    /// 1-based line number in the source file, for locating failures.
    pub line: usize,
}

#[derive(Debug, Clone)]
pub struct GoldenTable {
    pub sig: Signature,
    pub rows: Vec<GoldenRow>,
}

pub fn parse_golden(text: &str) -> Result<GoldenTable> {
    let mut sig: Option<Signature> = None;
    let mut rows = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("signature") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let [p, q] = parts[..] else {
                return Err(GaError::Parse(format!(
                    "line {line}: expected 'signature p q'"
                )));
            };
            let p: u32 = p.parse().map_err(|_| bad_line(line, "p"))?;
            let q: u32 = q.parse().map_err(|_| bad_line(line, "q"))?;
            sig = Some(Signature::new(p, q)?);
            continue;
        }
        let sig = sig
            .ok_or_else(|| GaError::Parse(format!("line {line}: row before the signature line")))?;
        let fields: Vec<&str> = content.split('|').map(str::trim).collect();
        let [k, element, exponents] = fields[..] else {
            return Err(GaError::Parse(format!(
                "line {line}: expected 'k | element | n1 n2'"
            )));
        };
        let k: i32 = k.parse().map_err(|_| bad_line(line, "k"))?;
        let element = parse_multivector(element, sig)
            .map_err(|e| GaError::Parse(format!("line {line}: {e}")))?;
        let exps: Vec<&str> = exponents.split_whitespace().collect();
        let [n1, n2] = exps[..] else {
            return Err(GaError::Parse(format!(
                "line {line}: expected two exponents"
            )));
        };
        let n1: u32 = n1.parse().map_err(|_| bad_line(line, "n1"))?;
        let n2: u32 = n2.parse().map_err(|_| bad_line(line, "n2"))?;
        rows.push(GoldenRow {
            k,
            element,
            n1,
            n2,
            line,
        });
    }
    let sig = sig.ok_or_else(|| GaError::Parse("missing signature line".into()))?;
    if rows.is_empty() {
        return Err(GaError::Parse("golden table has no rows".into()));
    }
    Ok(GoldenTable { sig, rows })
}

fn bad_line(line: usize, what: &str) -> GaError {
    GaError::Parse(format!("line {line}: malformed {what}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_table() {
        let text = "\
# roots of -1, smallest complex case
signature 3 0
1 | e123 | 2 0
0 | e23 | 1 1
-1 | -e123 | 0 2
";
        let table = parse_golden(text).unwrap();
        assert_eq!(table.sig, Signature::new(3, 0).unwrap());
        assert_eq!(table.rows.len(), 3);
        assert_eq!(table.rows[1].k, 0);
        assert_eq!((table.rows[0].n1, table.rows[0].n2), (2, 0));
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(parse_golden("").is_err());
        assert!(parse_golden("signature 3 0\n").is_err());
        assert!(parse_golden("1 | e123 | 2 0\n").is_err());
        assert!(parse_golden("signature 3 0\n1 | e123 | 2\n").is_err());
        assert!(parse_golden("signature 3 0\nx | e123 | 2 0\n").is_err());
    }
}
