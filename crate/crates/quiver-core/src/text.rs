//! Plain-text quiver files: `n <N>` then one `arrow <tail> <head>` line per
//! arrow; `#` comments and blank lines are ignored.

use crate::{Quiver, QuiverError};

pub fn parse_quiver(input: &str) -> Result<Quiver, QuiverError> {
    let mut n: Option<usize> = None;
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let err = |msg: &str| QuiverError::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        match parts.next() {
            Some("n") => {
                let val: usize = parts
                    .next()
                    .ok_or_else(|| err("missing vertex count"))?
                    .parse()
                    .map_err(|_| err("vertex count is not a positive integer"))?;
                if val == 0 {
                    return Err(err("vertex count must be positive"));
                }
                if n.replace(val).is_some() {
                    return Err(err("duplicate `n` line"));
                }
            }
            Some("arrow") => {
                let t: usize = parts
                    .next()
                    .ok_or_else(|| err("missing arrow tail"))?
                    .parse()
                    .map_err(|_| err("arrow tail is not an integer"))?;
                let h: usize = parts
                    .next()
                    .ok_or_else(|| err("missing arrow head"))?
                    .parse()
                    .map_err(|_| err("arrow head is not an integer"))?;
                arrows.push((t, h));
            }
            Some(word) => return Err(err(&format!("unknown directive `{word}`"))),
            None => unreachable!(),
        }
        if parts.next().is_some() {
            return Err(err("trailing tokens"));
        }
    }
    let n = n.ok_or(QuiverError::Parse {
        line: 0,
        msg: "missing `n` line".to_string(),
    })?;
    Quiver::new(n, &arrows)
}
