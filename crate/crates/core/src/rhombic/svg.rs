//! SVG drawing of a tiling or filling.

use std::fmt::Write;

use crate::pasep::Letter;
use crate::rhombic::filling::{Filling, TileStatus};
use crate::rhombic::tiling::{direction, Tiling};

const SCALE: i64 = 20;
const MARGIN: i64 = 20;

fn fill_color(a: Letter, b: Letter) -> &'static str {
    match (a, b) {
        (Letter::D, Letter::E) => "#f4d35e",
        (Letter::D, _) => "#9bc1bc",
        (_, Letter::E) => "#ee964b",
        _ => "#d0d0d0",
    }
}

/// Draws the tiles of `tiling`, optionally labelled with a filling's
/// symbols and free `q`s.
pub fn render_svg(tiling: &Tiling, filling: Option<&Filling>, k: usize) -> String {
    let placements = tiling.placements(k);
    let statuses = filling.map(Filling::statuses).unwrap_or_default();
    let boundary: Vec<(i64, i64)> = std::iter::once((0, 0))
        .chain(tiling.word().letters().iter().scan((0, 0), |p, &l| {
            let d = direction(l, k);
            *p = (p.0 + d.0, p.1 + d.1);
            Some(*p)
        }))
        .collect();
    let mut points: Vec<(i64, i64)> = boundary.clone();
    for p in &placements {
        let [u, v] = p.sides;
        let (x, y) = p.anchor;
        points.extend([(x + u.0 + v.0, y + u.1 + v.1)]);
    }
    let min_x = points.iter().map(|p| p.0).min().unwrap_or(0);
    let max_y = points.iter().map(|p| p.1).max().unwrap_or(0);
    let width = points.iter().map(|p| p.0).max().unwrap_or(0) - min_x;
    let height = max_y - points.iter().map(|p| p.1).min().unwrap_or(0);
    let px = |(x, y): (i64, i64)| ((x - min_x) * SCALE + MARGIN, (max_y - y) * SCALE + MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        width * SCALE + 2 * MARGIN,
        height * SCALE + 2 * MARGIN,
        width * SCALE + 2 * MARGIN,
        height * SCALE + 2 * MARGIN
    );
    let _ = writeln!(out, r#"<title>{}</title>"#, tiling.word());
    for p in &placements {
        let [u, v] = p.sides;
        let a = p.anchor;
        let corners = [
            a,
            (a.0 + u.0, a.1 + u.1),
            (a.0 + u.0 + v.0, a.1 + u.1 + v.1),
            (a.0 + v.0, a.1 + v.1),
        ];
        let path: Vec<String> = corners
            .iter()
            .map(|&c| {
                let (x, y) = px(c);
                format!("{x},{y}")
            })
            .collect();
        let (x, y) = p.tile;
        let color = fill_color(tiling.letter(x), tiling.letter(y));
        let _ = writeln!(
            out,
            r#"<polygon points="{}" fill="{color}" stroke="black" stroke-width="1"/>"#,
            path.join(" ")
        );
        let label = match statuses.get(&p.tile) {
            Some(TileStatus::Alpha) => "\u{3b1}",
            Some(TileStatus::Beta) => "\u{3b2}",
            Some(TileStatus::FreeQ) => "q",
            _ => "",
        };
        if !label.is_empty() {
            let (p0, p2) = (px(corners[0]), px(corners[2]));
            let (cx, cy) = ((p0.0 + p2.0) / 2, (p0.1 + p2.1) / 2);
            let _ = writeln!(
                out,
                r#"<text x="{cx}" y="{cy}" font-size="12" text-anchor="middle" dominant-baseline="middle">{label}</text>"#
            );
        }
    }
    let path: Vec<String> = boundary
        .iter()
        .map(|&c| {
            let (x, y) = px(c);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        path.join(" ")
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_one_polygon_per_tile() {
        let t = Tiling::maximal(&"daaddedae".parse().unwrap());
        let svg = render_svg(&t, None, 2);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polygon").count(), t.area());
    }
}
