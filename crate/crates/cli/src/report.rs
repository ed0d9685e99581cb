//! Serialization of sweep records as JSON, CSV or an SVG log-log plot.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::CliError;
use crate::sweep::SweepRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            other => Err(CliError::UnknownFormat(other.to_string())),
        }
    }
}

/// Renders `records`. `guides` are slopes drawn as reference lines on the
/// SVG plot; other formats ignore them.
pub fn report(records: &[SweepRecord], format: Format, guides: &[f64]) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(records)? + "\n"),
        Format::Csv => to_csv(records),
        Format::Svg => Ok(to_svg(records, guides)),
    }
}

const CSV_HEADER: &str = "m,k,value,lower_ref,upper_ref,seed,elapsed_ms";

fn to_csv(records: &[SweepRecord]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    for r in records {
        w.serialize(r)?;
    }
    let body = String::from_utf8(w.into_inner().map_err(|e| e.into_error())?)
        .expect("csv output is utf-8");
    Ok(format!("{CSV_HEADER}\n{body}"))
}

/// Reads records written by [`report`] in JSON or CSV form.
pub fn parse_records(text: &str) -> Result<Vec<SweepRecord>, CliError> {
    if text.trim_start().starts_with('[') {
        return Ok(serde_json::from_str(text)?);
    }
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let records = r.deserialize().collect::<Result<Vec<SweepRecord>, _>>()?;
    Ok(records)
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 60.0;

fn to_svg(records: &[SweepRecord], guides: &[f64]) -> String {
    let pts: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.m > 0 && r.value > 0.0)
        .map(|r| ((r.m as f64).ln(), r.value.ln()))
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, y0, x1, y1) = (MARGIN, HEIGHT - MARGIN, WIDTH - MARGIN, MARGIN);
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>"#
    );
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>"#
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">ln m</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 20.0
    );
    let _ = writeln!(
        out,
        r#"<text x="20" y="{}" text-anchor="middle" font-size="14" transform="rotate(-90 20 {})">ln value</text>"#,
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    );
    if !pts.is_empty() {
        let (lo_x, hi_x) = padded_range(pts.iter().map(|p| p.0));
        let (lo_y, hi_y) = padded_range(pts.iter().map(|p| p.1));
        let sx = |x: f64| x0 + (x - lo_x) / (hi_x - lo_x) * (x1 - x0);
        let sy = |y: f64| y0 - (y - lo_y) / (hi_y - lo_y) * (y0 - y1);
        let n = pts.len() as f64;
        let cx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let cy = pts.iter().map(|p| p.1).sum::<f64>() / n;
        for &slope in guides {
            // Through the centroid of the points, clipped to the x range.
            let ya = cy + slope * (lo_x - cx);
            let yb = cy + slope * (hi_x - cx);
            let _ = writeln!(
                out,
                r#"<line class="guide" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray" stroke-dasharray="6 4"><title>slope {slope}</title></line>"#,
                sx(lo_x),
                sy(ya),
                sx(hi_x),
                sy(yb)
            );
        }
        for (&(x, y), r) in pts
            .iter()
            .zip(records.iter().filter(|r| r.m > 0 && r.value > 0.0))
        {
            let _ = writeln!(
                out,
                r#"<circle class="point" cx="{:.2}" cy="{:.2}" r="4" fill="steelblue"><title>m={} value={}</title></circle>"#,
                sx(x),
                sy(y),
                r.m,
                r.value
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    let pad = ((hi - lo) * 0.1).max(0.5);
    (lo - pad, hi + pad)
}
