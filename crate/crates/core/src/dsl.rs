//! Text format for structure-constant algebras.
//!
//! ```text
//! # one-generated, 4-dimensional
//! dim 4
//! param lambda = 1/2
//! e1*e1 = e2
//! e1*e3 = (2 - lambda) e4
//! ```
//!
//! A document is a `dim` line, then `param` bindings, then product lines;
//! `#` starts a comment and unmentioned products are zero. Parameters are
//! substituted at parse time, so the resulting `Algebra` is fully numeric.
//! `serialize_algebra` emits the same format and round-trips.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::expr::{self, Bindings, SymbolKind};
use crate::scalar::{self, Scalar};

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut dim: Option<usize> = None;
    let mut params = Bindings::new();
    let mut seen_product = false;
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut algebra: Option<Algebra> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }

        let Some(n) = dim else {
            let rest = line.strip_prefix("dim").ok_or_else(|| Error::Syntax {
                line: line_no,
                col: 1,
                msg: "expected 'dim <n>' before anything else".into(),
            })?;
            let n: usize = rest.trim().parse().map_err(|_| Error::Syntax {
                line: line_no,
                col: 4,
                msg: format!("bad dimension '{}'", rest.trim()),
            })?;
            dim = Some(n);
            algebra = Some(Algebra::zero(n));
            continue;
        };

        if let Some(rest) = line.strip_prefix("param ") {
            if seen_product {
                return Err(Error::Syntax {
                    line: line_no,
                    col: 1,
                    msg: "param lines must come before product lines".into(),
                });
            }
            let (name, value) = rest.split_once('=').ok_or_else(|| Error::Syntax {
                line: line_no,
                col: 1,
                msg: "expected 'param <name> = <rational>'".into(),
            })?;
            let name = name.trim();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Syntax {
                    line: line_no,
                    col: 1,
                    msg: format!("bad parameter name '{name}'"),
                });
            }
            let value = scalar::parse_rational(value.trim()).map_err(|_| Error::Syntax {
                line: line_no,
                col: 1,
                msg: format!("bad rational '{}'", value.trim()),
            })?;
            params.insert(name.to_string(), value);
            continue;
        }

        let (i, j, rhs, rhs_col) = split_product_line(line, line_no)?;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, dim: n });
        }
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, dim: n });
        }
        if !seen.insert((i, j)) {
            return Err(Error::Syntax {
                line: line_no,
                col: 1,
                msg: format!("duplicate product e{i}*e{j}"),
            });
        }
        seen_product = true;
        let terms = expr::parse_combo(rhs, n, SymbolKind::Basis, line_no)?;
        let value = expr::eval_combo(&terms, n, &params).map_err(|e| match e {
            Error::Syntax { col, msg, .. } => Error::Syntax {
                line: line_no,
                col: col + rhs_col,
                msg,
            },
            other => other,
        })?;
        let a = algebra.as_mut().expect("dim seen");
        for (k, c) in value.into_iter().enumerate() {
            if !c.is_zero() {
                a.add_term(i - 1, j - 1, c, k)?;
            }
        }
    }

    algebra.ok_or(Error::Syntax {
        line: text.lines().count() + 1,
        col: 1,
        msg: "missing 'dim <n>' line".into(),
    })
}

/// Split "e<i> * e<j> = <rhs>" and report the 1-based indices plus the
/// column offset where the right-hand side begins.
fn split_product_line(line: &str, line_no: usize) -> Result<(usize, usize, &str, usize)> {
    let bad = |col: usize, msg: &str| Error::Syntax {
        line: line_no,
        col,
        msg: msg.into(),
    };
    let bytes = line.as_bytes();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let read_index = |pos: &mut usize| -> Result<usize> {
        if *pos >= bytes.len() || bytes[*pos] != b'e' {
            return Err(bad(*pos + 1, "expected 'e<index>'"));
        }
        *pos += 1;
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return Err(bad(start + 1, "expected digits after 'e'"));
        }
        line[start..*pos]
            .parse()
            .map_err(|_| bad(start + 1, "index overflow"))
    };

    skip_ws(&mut pos);
    let i = read_index(&mut pos)?;
    skip_ws(&mut pos);
    if pos >= bytes.len() || bytes[pos] != b'*' {
        return Err(bad(pos + 1, "expected '*' between basis elements"));
    }
    pos += 1;
    skip_ws(&mut pos);
    let j = read_index(&mut pos)?;
    skip_ws(&mut pos);
    if pos >= bytes.len() || bytes[pos] != b'=' {
        return Err(bad(pos + 1, "expected '=' after product"));
    }
    pos += 1;
    Ok((i, j, &line[pos..], pos))
}

/// Emit the document format: `dim` line plus one line per nonzero product,
/// in row-major order. Parameters are already substituted in an `Algebra`,
/// so no `param` lines appear.
pub fn serialize_algebra(a: &Algebra) -> String {
    let n = a.dim();
    let mut out = format!("dim {n}\n");
    for i in 0..n {
        for j in 0..n {
            let v = a.basis_product(i, j);
            let terms: Vec<(usize, &Scalar)> =
                v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            if terms.is_empty() {
                continue;
            }
            out.push_str(&format!("e{}*e{} =", i + 1, j + 1));
            for (pos, (k, c)) in terms.iter().enumerate() {
                let negative = scalar::is_negative(c);
                let abs = if negative { -(*c).clone() } else { (*c).clone() };
                let sign = match (pos, negative) {
                    (0, false) => " ",
                    (0, true) => " -",
                    (_, false) => " + ",
                    (_, true) => " - ",
                };
                out.push_str(sign);
                if !abs.is_one() {
                    out.push_str(&format!("{} ", scalar::display(&abs)));
                }
                out.push_str(&format!("e{}", k + 1));
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn two_dimensional_example() {
        let a = parse_algebra("dim 2\ne1*e1 = e2").unwrap();
        let b = Algebra::from_products(2, &[(0, 0, vec![(int(1), 1)])]).unwrap();
        assert_eq!(a.basis_product(0, 0), b.basis_product(0, 0));
        assert!(a.check_novikov().is_empty());
    }

    #[test]
    fn dim_only_gives_zero_algebra() {
        let a = parse_algebra("dim 3").unwrap();
        assert_eq!(a.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert!(crate::matrix::vector_is_zero(&a.basis_product(i, j)));
            }
        }
    }

    #[test]
    fn parameter_substitution() {
        let text = "dim 4\nparam lambda = 0\ne1*e1 = e2\ne1*e2 = e3\ne1*e3 = (2-lambda) e4\ne2*e1 = lambda e3\ne2*e2 = lambda e4\ne3*e1 = lambda e4";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.basis_product(0, 2)[3], int(2));
        assert!(crate::matrix::vector_is_zero(&a.basis_product(1, 0)));
    }

    #[test]
    fn comments_and_whitespace() {
        let text = "# header\n\n  dim   3  # trailing\ne1 * e1 = e2   # product\n# done\n e2*e1 = -1/2 e3 + e2";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.basis_product(1, 0)[2], frac(-1, 2));
        assert_eq!(a.basis_product(1, 0)[1], int(1));
    }

    #[test]
    fn error_positions_and_kinds() {
        assert!(matches!(
            parse_algebra("e1*e1 = e2"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_algebra("dim 2\ne1*e1 = mu e2"),
            Err(Error::UnboundParameter(name)) if name == "mu"
        ));
        assert!(matches!(
            parse_algebra("dim 2\ne1*e3 = e2"),
            Err(Error::IndexOutOfRange { index: 3, dim: 2 })
        ));
        assert!(matches!(
            parse_algebra("dim 2\ne1*e1 = e3"),
            Err(Error::IndexOutOfRange { index: 3, dim: 2 })
        ));
        assert!(matches!(
            parse_algebra("dim 2\ne1*e1 = e2\ne1*e1 = e2"),
            Err(Error::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_algebra("dim 2\ne1*e1 = e2\nparam x = 1"),
            Err(Error::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_algebra("dim 2\ne1 e1 = e2"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(parse_algebra("# nothing\n"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn zero_right_hand_side() {
        let a = parse_algebra("dim 2\ne1*e1 = 0").unwrap();
        assert!(crate::matrix::vector_is_zero(&a.basis_product(0, 0)));
    }

    #[test]
    fn round_trip() {
        let text = "dim 4\nparam lambda = 1/2\ne1*e1 = e2\ne1*e2 = e3\ne1*e3 = (2-lambda) e4\ne2*e1 = lambda e3\ne2*e2 = lambda e4\ne3*e1 = lambda e4";
        let a = parse_algebra(text).unwrap();
        let emitted = serialize_algebra(&a);
        let b = parse_algebra(&emitted).unwrap();
        assert_eq!(a.dim(), b.dim());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.basis_product(i, j), b.basis_product(i, j));
            }
        }
        assert_eq!(emitted, serialize_algebra(&b));
    }

    #[test]
    fn serializer_formats_coefficients() {
        let a = Algebra::from_products(
            3,
            &[
                (0, 0, vec![(int(1), 1), (int(-1), 2)]),
                (1, 0, vec![(frac(-3, 2), 2)]),
            ],
        )
        .unwrap();
        let emitted = serialize_algebra(&a);
        assert_eq!(emitted, "dim 3\ne1*e1 = e2 - e3\ne2*e1 = -3/2 e3\n");
    }
}
