//! Plain text form for diagrams: a `start` line and a `crossings` line with
//! exact rationals.

use num_rational::Rational64;

use crate::{ArcDiagram, CurveError};

pub fn write_diagram(d: &ArcDiagram) -> String {
    let xs: Vec<String> = d
        .crossings
        .iter()
        .map(|x| format!("{}/{}", x.numer(), x.denom()))
        .collect();
    if xs.is_empty() {
        format!("start {}\ncrossings\n", d.start)
    } else {
        format!("start {}\ncrossings {}\n", d.start, xs.join(" "))
    }
}

pub fn parse_diagram(n: usize, input: &str) -> Result<ArcDiagram, CurveError> {
    let mut start = None;
    let mut crossings = Vec::new();
    let mut saw_crossings = false;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let t = raw.split('#').next().unwrap().trim();
        if t.is_empty() {
            continue;
        }
        let mut parts = t.split_whitespace();
        match parts.next() {
            Some("start") => {
                let v = parts
                    .next()
                    .ok_or_else(|| err(line, "missing start vertex"))?;
                let s: usize = v.parse().map_err(|_| err(line, "bad start vertex"))?;
                if s < 1 || s > n {
                    return Err(err(line, "start vertex out of range"));
                }
                start = Some(s);
            }
            Some("crossings") => {
                saw_crossings = true;
                for tok in parts {
                    crossings.push(parse_rational(line, tok)?);
                }
            }
            _ => return Err(err(line, "expected `start` or `crossings`")),
        }
    }
    let start = start.ok_or_else(|| err(0, "missing start line"))?;
    if !saw_crossings {
        return Err(err(0, "missing crossings line"));
    }
    let d = ArcDiagram { n, start, crossings };
    d.validate()?;
    Ok(d)
}

fn parse_rational(line: usize, tok: &str) -> Result<Rational64, CurveError> {
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p, q),
        None => (tok, "1"),
    };
    let p: i64 = p.parse().map_err(|_| err(line, "bad rational"))?;
    let q: i64 = q.parse().map_err(|_| err(line, "bad rational"))?;
    if q == 0 {
        return Err(err(line, "zero denominator"));
    }
    Ok(Rational64::new(p, q))
}

fn err(line: usize, msg: &str) -> CurveError {
    CurveError::Parse { line, msg: msg.to_string() }
}
