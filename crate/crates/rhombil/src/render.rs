//! Deterministic region output: ASCII art, SVG, and a JSON interchange form
//! that round-trips through the counting engine.

use crate::family::RegionSpec;
use crate::lattice::{Cell, Orient, Region};
use crate::rat::Rat;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Render a region in the requested format. Output is byte-identical for
/// identical regions.
pub fn render_region(region: &Region, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(region),
        RenderFormat::Svg => render_svg(region),
    }
}

/// Slash-art rendering: each cell paints its two slanted edges, so adjacent
/// cells produce the familiar `/\/\` strips. Weighted lozenge positions are
/// listed underneath.
fn render_ascii(region: &Region) -> String {
    let mut out = String::new();
    let (Some((rmin, rmax)), Some((cmin, cmax))) = (region.row_range(), region.col_range())
    else {
        return "(empty region)\n".to_string();
    };
    let width = (cmax - cmin + 2) as usize;
    for r in rmin..=rmax {
        let mut line = vec![b' '; width];
        for cell in region.cells().filter(|c| c.row == r) {
            let i = (cell.col - cmin) as usize;
            match cell.orient() {
                Orient::Up => {
                    line[i] = b'/';
                    line[i + 1] = b'\\';
                }
                Orient::Down => {
                    line[i] = b'\\';
                    line[i + 1] = b'/';
                }
            }
        }
        let line = String::from_utf8(line).expect("ascii");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    for ((a, b), w) in region.weights() {
        writeln!(
            out,
            "weight {} on ({},{})+({},{})",
            crate::rat::display(w),
            a.row,
            a.col,
            b.row,
            b.col
        )
        .expect("write to string");
    }
    out
}

/// Triangle vertices in drawing units (x doubled to keep integers, then
/// scaled; y rows scaled by sqrt(3)/2).
fn cell_points(cell: &Cell) -> [(f64, f64); 3] {
    const UX: f64 = 20.0; // half-unit in x
    const UY: f64 = 34.641_016_151_377_55; // row height
    let cx = cell.col as f64 * UX;
    let top = cell.row as f64 * UY;
    let bot = top + UY;
    match cell.orient() {
        Orient::Up => [(cx, top), (cx - UX, bot), (cx + UX, bot)],
        Orient::Down => [(cx - UX, top), (cx + UX, top), (cx, bot)],
    }
}

fn render_svg(region: &Region) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    if region.is_empty() {
        out.push_str(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"40\" height=\"40\">\
             <!-- empty region --></svg>\n",
        );
        return out;
    }
    let (rmin, rmax) = region.row_range().expect("non-empty");
    let (cmin, cmax) = region.col_range().expect("non-empty");
    let pad = 25.0;
    let ox = pad - (cmin as f64 - 1.0) * 20.0;
    let oy = pad - rmin as f64 * 34.641_016_151_377_55;
    let width = (cmax - cmin + 2) as f64 * 20.0 + 2.0 * pad;
    let height = (rmax - rmin + 1) as f64 * 34.641_016_151_377_55 + 2.0 * pad;
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.2} {height:.2}\">"
    )
    .expect("write");
    for cell in region.cells() {
        let pts = cell_points(cell);
        let points = pts
            .iter()
            .map(|(x, y)| format!("{:.2},{:.2}", x + ox, y + oy))
            .collect::<Vec<_>>()
            .join(" ");
        let fill = match cell.orient() {
            Orient::Up => "#dce8f5",
            Orient::Down => "#f5eedc",
        };
        writeln!(
            out,
            "  <polygon points=\"{points}\" fill=\"{fill}\" stroke=\"#444\" stroke-width=\"1\"/>"
        )
        .expect("write");
    }
    // shaded cores mark lozenge positions with non-unit weight
    for ((a, b), _) in region.weights() {
        let pa = cell_points(a);
        let pb = cell_points(b);
        let cxa = pa.iter().map(|p| p.0).sum::<f64>() / 3.0;
        let cya = pa.iter().map(|p| p.1).sum::<f64>() / 3.0;
        let cxb = pb.iter().map(|p| p.0).sum::<f64>() / 3.0;
        let cyb = pb.iter().map(|p| p.1).sum::<f64>() / 3.0;
        writeln!(
            out,
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"6\" fill=\"#666\"/>",
            (cxa + cxb) / 2.0 + ox,
            (cya + cyb) / 2.0 + oy
        )
        .expect("write");
    }
    out.push_str("</svg>\n");
    out
}

// ---------------------------------------------------------------------------
// JSON interchange

/// Serialized region document. Field order is stable for diffability.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<String>,
    /// `[row, col, "Up"|"Down"]` triples, sorted.
    pub cells: Vec<(i32, i32, Orient)>,
    /// `[[rowA,colA],[rowB,colB],num,den]` per weighted lozenge position.
    pub weights: Vec<((i32, i32), (i32, i32), String, String)>,
}

pub fn region_to_json(region: &Region, spec: Option<&RegionSpec>) -> RegionJson {
    RegionJson {
        family: spec.map(|s| s.family.to_string()),
        params: spec.map(|s| s.params.to_string()),
        cells: region
            .cells()
            .map(|c| (c.row, c.col, c.orient()))
            .collect(),
        weights: region
            .weights()
            .map(|((a, b), w)| {
                (
                    (a.row, a.col),
                    (b.row, b.col),
                    w.numer().to_string(),
                    w.denom().to_string(),
                )
            })
            .collect(),
    }
}

pub fn region_from_json(doc: &RegionJson) -> Result<Region, String> {
    let mut region = Region::new();
    for (row, col, orient) in &doc.cells {
        let cell = Cell::new(*row, *col);
        if cell.orient() != *orient {
            return Err(format!(
                "cell ({row},{col}) cannot point {orient:?} at that position"
            ));
        }
        region.insert(cell);
    }
    for ((ra, ca), (rb, cb), num, den) in &doc.weights {
        let a = Cell::new(*ra, *ca);
        let b = Cell::new(*rb, *cb);
        if !region.contains(&a) || !region.contains(&b) {
            return Err("weighted pair references a missing cell".to_string());
        }
        let num: BigInt = num.parse().map_err(|e| format!("bad numerator: {e}"))?;
        let den: BigInt = den.parse().map_err(|e| format!("bad denominator: {e}"))?;
        if den == BigInt::from(0) {
            return Err("zero denominator in weight".to_string());
        }
        region.set_weight(a, b, Rat::new(num, den));
    }
    Ok(region)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_pprime;

    #[test]
    fn ascii_is_deterministic() {
        let region = crate::lattice::build_p(1, 1, 1).unwrap();
        let one = render_region(&region, RenderFormat::Ascii);
        let two = render_region(&region, RenderFormat::Ascii);
        assert_eq!(one, two);
        assert!(one.contains('/'));
    }

    #[test]
    fn empty_region_renders_placeholders() {
        let empty = Region::new();
        assert_eq!(render_region(&empty, RenderFormat::Ascii), "(empty region)\n");
        assert!(render_region(&empty, RenderFormat::Svg).contains("empty region"));
    }

    #[test]
    fn json_round_trips_with_weights() {
        let region = build_pprime(2, 2, 1).unwrap();
        let doc = region_to_json(&region, None);
        let text = serde_json::to_string(&doc).unwrap();
        let back: RegionJson = serde_json::from_str(&text).unwrap();
        let rebuilt = region_from_json(&back).unwrap();
        assert_eq!(region, rebuilt);
    }
}
