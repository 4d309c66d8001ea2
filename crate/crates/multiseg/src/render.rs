//! Plain-text diagrams of multisegments: one row per segment, one column
//! per exponent, so that linked and juxtaposed segments are visible at a
//! glance.
//!
//! Columns cover the exponent range of the rendered family in steps of 1,
//! or of 1/2 when both integral and half-integral exponents occur. Each
//! column is as wide as its header label; a cell shows its family symbol
//! ('*' for the first family, 'o' for the second) when the row's segment
//! contains the column's exponent.

use crate::line::HalfExp;
use crate::multisegment::Multisegment;
use crate::segment::Segment;
use crate::speh::SpehPairParams;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    First,
    Second,
}

impl Family {
    fn symbol(self) -> char {
        match self {
            Family::First => '*',
            Family::Second => 'o',
        }
    }
}

fn grid(rows: &[(Family, Segment)]) -> String {
    if rows.is_empty() {
        return String::new();
    }
    let lo = rows.iter().map(|(_, s)| s.begin()).min().expect("non-empty");
    let hi = rows.iter().map(|(_, s)| s.end()).max().expect("non-empty");
    let mixed = rows
        .iter()
        .any(|(_, s)| s.begin().twice().rem_euclid(2) != rows[0].1.begin().twice().rem_euclid(2));
    let step = if mixed { 1 } else { 2 };
    let mut columns: Vec<HalfExp> = Vec::new();
    let mut x = lo;
    while x <= hi {
        columns.push(x);
        x = HalfExp::half(x.twice() + step);
    }
    let labels: Vec<String> = columns.iter().map(HalfExp::to_string).collect();

    let mut out = String::new();
    out.push_str(&labels.join(" "));
    out.push('\n');
    let mut ordered: Vec<&(Family, Segment)> = rows.iter().collect();
    ordered.sort_by_key(|(fam, s)| (s.begin(), s.end(), *fam == Family::Second));
    for (fam, seg) in ordered {
        let mut row = String::new();
        for (col, label) in columns.iter().zip(&labels) {
            let covered = seg.begin() <= *col
                && *col <= seg.end()
                && (col.twice() - seg.begin().twice()) % 2 == 0;
            let cell = if covered { fam.symbol() } else { ' ' };
            row.push(cell);
            for _ in 1..label.chars().count() {
                row.push(' ');
            }
            row.push(' ');
        }
        while row.ends_with(' ') {
            row.pop();
        }
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// Diagram of one multisegment.
pub fn render_multisegment(a: &Multisegment) -> String {
    let rows: Vec<(Family, Segment)> =
        a.segments().iter().map(|s| (Family::First, s.clone())).collect();
    grid(&rows)
}

/// Diagram of a frame: the Δ row family drawn with '*', the Γ family
/// with 'o'.
pub fn render_pair(p: &SpehPairParams) -> String {
    let mut rows: Vec<(Family, Segment)> = Vec::new();
    rows.extend(p.delta().iter().map(|s| (Family::First, s.clone())));
    rows.extend(p.gamma().iter().map(|s| (Family::Second, s.clone())));
    grid(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line::Line;
    use crate::multisegment::speh;
    use crate::test_util::{hms, ms};

    #[test]
    fn empty_renders_empty() {
        assert_eq!(render_multisegment(&Multisegment::empty(Line::default())), "");
    }

    #[test]
    fn square_speh_layout() {
        let text = render_multisegment(&speh(2, 2, HalfExp::ZERO, &Line::default()));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["-1", "0", "1"]);
        assert_eq!(lines[1].matches('*').count(), 2);
        assert_eq!(lines[2].matches('*').count(), 2);
        // First row starts at the left edge, second is shifted right.
        assert!(lines[1].starts_with('*'));
        assert!(lines[2].starts_with(' '));
    }

    #[test]
    fn pair_rows_and_symbols() {
        let p = SpehPairParams::new(3, 5, 4, &Line::default());
        let text = render_pair(&p);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 1 + 6);
        let stars: usize = lines.iter().map(|l| l.matches('*').count()).sum();
        let circles: usize = lines.iter().map(|l| l.matches('o').count()).sum();
        assert_eq!(stars, 3 * 5);
        assert_eq!(circles, 3 * 5);
        // Δ rows come first (they start lower).
        assert!(lines[1].contains('*') && !lines[1].contains('o'));
        assert!(lines[6].contains('o') && !lines[6].contains('*'));
    }

    #[test]
    fn half_integral_headers() {
        let text = render_multisegment(&hms(&[(-1, 1)]));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["-1/2", "1/2"]);
        assert_eq!(lines[1].matches('*').count(), 2);
    }

    #[test]
    fn mixed_cosets_use_half_steps() {
        let a = ms(&[(0, 1)]).msum(&hms(&[(1, 1)])).unwrap();
        let text = render_multisegment(&a);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0].split_whitespace().collect::<Vec<_>>(),
            ["0", "1/2", "1"]
        );
        // The integral segment covers 0 and 1 but skips 1/2.
        let integral_row = lines.iter().find(|l| l.matches('*').count() == 2).unwrap();
        let half_row = lines.iter().find(|l| l.matches('*').count() == 1).unwrap();
        assert_ne!(integral_row, half_row);
    }

    #[test]
    fn gaps_stay_blank() {
        let text = render_multisegment(&ms(&[(0, 0), (3, 3)]));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["0", "1", "2", "3"]);
        assert_eq!(lines[1].matches('*').count(), 1);
        assert_eq!(lines[2].matches('*').count(), 1);
        assert!(lines[1].starts_with('*'));
        assert!(lines[2].ends_with('*'));
    }
}
