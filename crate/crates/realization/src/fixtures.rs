//! Curve tables for the rank-7 exceptional quivers whose hardest roots resist
//! the generic descent machinery. Each row records a quiver orientation, a
//! compatible vertex ordering, an arc diagram, and the root it realizes.
//!
//! A row also serves the fully reversed orientation: flipping the picture
//! left-to-right turns a valid curve for (Q, pi) into one for the opposite
//! quiver with the reversed ordering, realizing the same root.

use curve_model::{materialize, signed_word, ArcDiagram, CurveWord};
use quiver_core::{text::parse_quiver, Quiver};
use root_system::{Perm, Root};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("row {row}: {msg}")]
    Bad { row: usize, msg: String },
}

#[derive(Debug, Clone)]
pub struct FixtureRow {
    pub index: usize,
    pub quiver: Quiver,
    pub pi: Perm,
    pub diagram: ArcDiagram,
    pub root: Root,
}

static RAW: &[(&str, &str, &str, &str)] = &[
    (include_str!("../fixtures/e7/row01/quiver.txt"),
     include_str!("../fixtures/e7/row01/pi.txt"),
     include_str!("../fixtures/e7/row01/diagram.txt"),
     include_str!("../fixtures/e7/row01/root.txt")),
    (include_str!("../fixtures/e7/row02/quiver.txt"),
     include_str!("../fixtures/e7/row02/pi.txt"),
     include_str!("../fixtures/e7/row02/diagram.txt"),
     include_str!("../fixtures/e7/row02/root.txt")),
    (include_str!("../fixtures/e7/row03/quiver.txt"),
     include_str!("../fixtures/e7/row03/pi.txt"),
     include_str!("../fixtures/e7/row03/diagram.txt"),
     include_str!("../fixtures/e7/row03/root.txt")),
    (include_str!("../fixtures/e7/row04/quiver.txt"),
     include_str!("../fixtures/e7/row04/pi.txt"),
     include_str!("../fixtures/e7/row04/diagram.txt"),
     include_str!("../fixtures/e7/row04/root.txt")),
    (include_str!("../fixtures/e7/row05/quiver.txt"),
     include_str!("../fixtures/e7/row05/pi.txt"),
     include_str!("../fixtures/e7/row05/diagram.txt"),
     include_str!("../fixtures/e7/row05/root.txt")),
    (include_str!("../fixtures/e7/row06/quiver.txt"),
     include_str!("../fixtures/e7/row06/pi.txt"),
     include_str!("../fixtures/e7/row06/diagram.txt"),
     include_str!("../fixtures/e7/row06/root.txt")),
    (include_str!("../fixtures/e7/row07/quiver.txt"),
     include_str!("../fixtures/e7/row07/pi.txt"),
     include_str!("../fixtures/e7/row07/diagram.txt"),
     include_str!("../fixtures/e7/row07/root.txt")),
    (include_str!("../fixtures/e7/row08/quiver.txt"),
     include_str!("../fixtures/e7/row08/pi.txt"),
     include_str!("../fixtures/e7/row08/diagram.txt"),
     include_str!("../fixtures/e7/row08/root.txt")),
    (include_str!("../fixtures/e7/row09/quiver.txt"),
     include_str!("../fixtures/e7/row09/pi.txt"),
     include_str!("../fixtures/e7/row09/diagram.txt"),
     include_str!("../fixtures/e7/row09/root.txt")),
    (include_str!("../fixtures/e7/row10/quiver.txt"),
     include_str!("../fixtures/e7/row10/pi.txt"),
     include_str!("../fixtures/e7/row10/diagram.txt"),
     include_str!("../fixtures/e7/row10/root.txt")),
    (include_str!("../fixtures/e7/row11/quiver.txt"),
     include_str!("../fixtures/e7/row11/pi.txt"),
     include_str!("../fixtures/e7/row11/diagram.txt"),
     include_str!("../fixtures/e7/row11/root.txt")),
    (include_str!("../fixtures/e7/row12/quiver.txt"),
     include_str!("../fixtures/e7/row12/pi.txt"),
     include_str!("../fixtures/e7/row12/diagram.txt"),
     include_str!("../fixtures/e7/row12/root.txt")),
    (include_str!("../fixtures/e7/row13/quiver.txt"),
     include_str!("../fixtures/e7/row13/pi.txt"),
     include_str!("../fixtures/e7/row13/diagram.txt"),
     include_str!("../fixtures/e7/row13/root.txt")),
    (include_str!("../fixtures/e7/row14/quiver.txt"),
     include_str!("../fixtures/e7/row14/pi.txt"),
     include_str!("../fixtures/e7/row14/diagram.txt"),
     include_str!("../fixtures/e7/row14/root.txt")),
    (include_str!("../fixtures/e7/row15/quiver.txt"),
     include_str!("../fixtures/e7/row15/pi.txt"),
     include_str!("../fixtures/e7/row15/diagram.txt"),
     include_str!("../fixtures/e7/row15/root.txt")),
    (include_str!("../fixtures/e7/row16/quiver.txt"),
     include_str!("../fixtures/e7/row16/pi.txt"),
     include_str!("../fixtures/e7/row16/diagram.txt"),
     include_str!("../fixtures/e7/row16/root.txt")),
    (include_str!("../fixtures/e7/row17/quiver.txt"),
     include_str!("../fixtures/e7/row17/pi.txt"),
     include_str!("../fixtures/e7/row17/diagram.txt"),
     include_str!("../fixtures/e7/row17/root.txt")),
    (include_str!("../fixtures/e7/row18/quiver.txt"),
     include_str!("../fixtures/e7/row18/pi.txt"),
     include_str!("../fixtures/e7/row18/diagram.txt"),
     include_str!("../fixtures/e7/row18/root.txt")),
    (include_str!("../fixtures/e7/row19/quiver.txt"),
     include_str!("../fixtures/e7/row19/pi.txt"),
     include_str!("../fixtures/e7/row19/diagram.txt"),
     include_str!("../fixtures/e7/row19/root.txt")),
    (include_str!("../fixtures/e7/row20/quiver.txt"),
     include_str!("../fixtures/e7/row20/pi.txt"),
     include_str!("../fixtures/e7/row20/diagram.txt"),
     include_str!("../fixtures/e7/row20/root.txt")),
    (include_str!("../fixtures/e7/row21/quiver.txt"),
     include_str!("../fixtures/e7/row21/pi.txt"),
     include_str!("../fixtures/e7/row21/diagram.txt"),
     include_str!("../fixtures/e7/row21/root.txt")),
    (include_str!("../fixtures/e7/row22/quiver.txt"),
     include_str!("../fixtures/e7/row22/pi.txt"),
     include_str!("../fixtures/e7/row22/diagram.txt"),
     include_str!("../fixtures/e7/row22/root.txt")),
    (include_str!("../fixtures/e7/row23/quiver.txt"),
     include_str!("../fixtures/e7/row23/pi.txt"),
     include_str!("../fixtures/e7/row23/diagram.txt"),
     include_str!("../fixtures/e7/row23/root.txt")),
    (include_str!("../fixtures/e7/row24/quiver.txt"),
     include_str!("../fixtures/e7/row24/pi.txt"),
     include_str!("../fixtures/e7/row24/diagram.txt"),
     include_str!("../fixtures/e7/row24/root.txt")),
];

pub fn rows() -> Result<Vec<FixtureRow>, FixtureError> {
    RAW.iter()
        .enumerate()
        .map(|(i, &(qs, ps, ds, rs))| {
            let row = i + 1;
            let bad = |msg: String| FixtureError::Bad { row, msg };
            let quiver = parse_quiver(qs).map_err(|e| bad(e.to_string()))?;
            let n = quiver.n();
            let images: Vec<usize> = ps
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad(format!("bad ordering token {t}"))))
                .collect::<Result<_, _>>()?;
            let mut seen = images.clone();
            seen.sort_unstable();
            if seen != (1..=n).collect::<Vec<_>>() {
                return Err(bad("ordering is not a permutation".into()));
            }
            let diagram = curve_model::text::parse_diagram(n, ds)
                .map_err(|e| bad(e.to_string()))?;
            let coords: Vec<i64> = rs
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad(format!("bad root token {t}"))))
                .collect::<Result<_, _>>()?;
            if coords.len() != n {
                return Err(bad("root has wrong rank".into()));
            }
            Ok(FixtureRow { index: row, quiver, pi: Perm::new(images), diagram, root: Root(coords) })
        })
        .collect()
}

/// Flip a curve left-to-right: position k becomes n+1-k and every crossing
/// reverses direction. The rebuilt diagram is valid for the opposite quiver
/// under the reversed ordering.
pub fn mirror_diagram(d: &ArcDiagram) -> Option<ArcDiagram> {
    let w = signed_word(d);
    let m = CurveWord {
        n: w.n,
        start: w.n + 1 - w.start,
        letters: w.letters.iter().map(|&(k, s)| (w.n + 1 - k, -s)).collect(),
    };
    materialize(&m).ok()
}

pub fn mirror_pi(pi: &Perm) -> Perm {
    let n = pi.len();
    Perm::new((1..=n).rev().map(|k| pi.image(k)).collect())
}

fn reversed(q: &Quiver) -> Quiver {
    let arrows: Vec<(usize, usize)> = q.arrow_list().iter().map(|&(t, h)| (h, t)).collect();
    Quiver::new(q.n(), &arrows).expect("reversing arrows keeps the quiver valid")
}

/// Find a table witness for the given quiver and root, trying the rows as
/// printed and then their mirror images.
pub fn lookup(q: &Quiver, alpha: &Root) -> Option<(Perm, ArcDiagram)> {
    let table = rows().ok()?;
    let target = q.arrow_list();
    for row in &table {
        if row.root != *alpha {
            continue;
        }
        if row.quiver.arrow_list() == target {
            return Some((row.pi.clone(), row.diagram.clone()));
        }
        if reversed(&row.quiver).arrow_list() == target {
            if let Some(d) = mirror_diagram(&row.diagram) {
                return Some((mirror_pi(&row.pi), d));
            }
        }
    }
    None
}
