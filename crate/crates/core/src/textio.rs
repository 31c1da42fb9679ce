//! Text form for symmetric matrices, shared by the CLI and test fixtures:
//! six scalars in the order `d1 d2 d3 o12 o13 o23`, each a plain integer or
//! a rational `num/den`, whitespace-separated.

use crate::error::CoreError;
use crate::jordan::SymMat3;
use crate::scalar::{Int, Rat};
use num::BigInt;
use std::fmt::Write as _;
use std::str::FromStr;

pub fn parse_rat(token: &str) -> Result<Rat, CoreError> {
    let mk = |s: &str| {
        BigInt::from_str(s).map_err(|e| CoreError::Parse(format!("bad integer {s:?}: {e}")))
    };
    match token.split_once('/') {
        Some((n, d)) => {
            let num = mk(n)?;
            let den = mk(d)?;
            if den == BigInt::from(0) {
                return Err(CoreError::Parse(format!("zero denominator in {token:?}")));
            }
            Ok(Rat::new(num, den))
        }
        None => Ok(Rat::from_integer(mk(token)?)),
    }
}

pub fn parse_sym_mat(line: &str) -> Result<SymMat3<Rat>, CoreError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 6 {
        return Err(CoreError::Parse(format!(
            "expected 6 scalars (d1 d2 d3 o12 o13 o23), got {}",
            toks.len()
        )));
    }
    let v: Result<Vec<Rat>, CoreError> = toks.iter().map(|t| parse_rat(t)).collect();
    let v = v?;
    Ok(SymMat3::new(
        v[0].clone(),
        v[1].clone(),
        v[2].clone(),
        v[3].clone(),
        v[4].clone(),
        v[5].clone(),
    ))
}

/// One matrix per non-empty line; `#` starts a comment.
pub fn parse_tuple(text: &str) -> Result<Vec<SymMat3<Rat>>, CoreError> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .filter(|l| !l.trim().is_empty())
        .map(parse_sym_mat)
        .collect()
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom() == &Int::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_sym_mat(x: &SymMat3<Rat>) -> String {
    let mut s = String::new();
    for (k, e) in x.entries().iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{}", fmt_rat(e));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn round_trip() {
        let x = SymMat3::new(
            rat(1, 1),
            rat(-2, 3),
            rat(0, 1),
            rat(5, 1),
            rat(7, 2),
            rat(-1, 1),
        );
        let s = format_sym_mat(&x);
        assert_eq!(s, "1 -2/3 0 5 7/2 -1");
        assert_eq!(parse_sym_mat(&s).unwrap(), x);
    }

    #[test]
    fn tuple_with_comments() {
        let text = "# fixture\n1 0 0 0 0 0\n\n0 1 0 0 0 0 # second\n";
        let t = parse_tuple(text).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0], SymMat3::frame(1));
        assert_eq!(t[1], SymMat3::frame(2));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_sym_mat("1 2 3 4 5").is_err());
        assert!(parse_sym_mat("1 2 3 4 5 1/0").is_err());
        assert!(parse_sym_mat("1 2 3 4 5 x").is_err());
    }
}
