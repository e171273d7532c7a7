//! Stable text and structured (JSON record list) forms of [`ESymFunc`].
//!
//! Text form: terms in descending lexicographic partition order, written
//! `coeff*e[p1,p2,…]` and joined by ` + ` / ` - `, e.g.
//! `50*e[5] + 6*e[4,1] + 4*e[3,2]`. The zero function is `0`.
//!
//! Structured form: a JSON array of `{"partition": [..], "num": "..",
//! "den": ".."}` records in the same order, numerator and denominator as
//! decimal strings so that arbitrarily large values survive any JSON reader.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::compositions::Partition;
use crate::error::{Error, Result};
use crate::symfunc::ESymFunc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub partition: Vec<usize>,
    pub num: String,
    pub den: String,
}

fn write_coeff(out: &mut String, c: &BigRational) {
    out.push_str(&c.numer().to_string());
    if !c.is_integer() {
        out.push('/');
        out.push_str(&c.denom().to_string());
    }
}

pub fn to_text(f: &ESymFunc) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (p, c)) in f.terms().rev().enumerate() {
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        write_coeff(&mut out, &c.abs());
        out.push_str("*e");
        out.push_str(&p.to_string());
    }
    out
}

fn parse_err(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        message: message.into(),
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| parse_err(format!("bad numerator `{num}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| parse_err(format!("bad denominator `{den}`")))?;
    if den.is_zero() {
        return Err(parse_err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn parse_partition(s: &str) -> Result<Partition> {
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| parse_err(format!("expected `[..]`, found `{s}`")))?;
    if inner.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = inner
        .split(',')
        .map(|p| match p.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(parse_err(format!("bad part `{p}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::from_parts(parts))
}

/// Parses the text form produced by [`to_text`]. Whitespace is ignored and
/// `−` is accepted as a minus sign.
pub fn parse_text(s: &str) -> Result<ESymFunc> {
    let compact: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '−' { '-' } else { c })
        .collect();
    if compact == "0" {
        return Ok(ESymFunc::zero());
    }
    if compact.is_empty() {
        return Err(parse_err("empty expansion"));
    }
    let mut f = ESymFunc::zero();
    let mut rest = compact.as_str();
    let mut degree = None;
    while !rest.is_empty() {
        let negative = rest.starts_with('-');
        rest = rest.strip_prefix(['+', '-']).unwrap_or(rest);
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let (coeff, basis) = term
            .split_once("*e")
            .ok_or_else(|| parse_err(format!("term `{term}` is not of the form c*e[..]")))?;
        let mut c = parse_rational(coeff)?;
        if negative {
            c = -c;
        }
        let p = parse_partition(basis)?;
        if *degree.get_or_insert(p.size()) != p.size() {
            return Err(parse_err(format!("term `{term}` has inconsistent degree")));
        }
        f.add_term(p, c);
    }
    Ok(f)
}

pub fn to_records(f: &ESymFunc) -> Vec<TermRecord> {
    f.terms()
        .rev()
        .map(|(p, c)| TermRecord {
            partition: p.parts().to_vec(),
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

pub fn from_records(records: &[TermRecord]) -> Result<ESymFunc> {
    let mut f = ESymFunc::zero();
    let mut degree = None;
    for r in records {
        if r.partition.contains(&0) {
            return Err(parse_err("partition with a zero part"));
        }
        let p = Partition::from_parts(r.partition.clone());
        if *degree.get_or_insert(p.size()) != p.size() {
            return Err(parse_err("records have inconsistent degrees"));
        }
        f.add_term(p, parse_rational(&format!("{}/{}", r.num, r.den))?);
    }
    Ok(f)
}

pub fn to_json(f: &ESymFunc) -> String {
    serde_json::to_string(&to_records(f)).expect("records serialize")
}

pub fn from_json(s: &str) -> Result<ESymFunc> {
    let records: Vec<TermRecord> = serde_json::from_str(s).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    from_records(&records)
}
