use serde::Serialize;

use super::AnchorError;

/// A parsed Media Fragments value, limited to the spatial (`xywh`) and
/// temporal (`t`) dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "dimension", rename_all = "kebab-case")]
pub enum MediaFragment {
    SpatialPx { x: u64, y: u64, w: u64, h: u64 },
    SpatialPercent { x: f64, y: f64, w: f64, h: f64 },
    /// Normal play time in seconds; an open end runs to the end of the media.
    Time { start: f64, end: Option<f64> },
}

/// Parses `xywh=[pixel:|percent:]x,y,w,h` or `t=[npt:]start[,end]`.
///
/// Times may be plain seconds (`10`, `10.5`) or clock values
/// (`mm:ss`, `hh:mm:ss`, with an optional fraction). An omitted start
/// (`t=,20`) means 0.
pub fn parse_media_fragment(value: &str) -> Result<MediaFragment, AnchorError> {
    let malformed = |reason: &str| AnchorError::MalformedFragment { value: value.to_owned(), reason: reason.to_owned() };
    if value.is_empty() {
        return Err(malformed("empty value"));
    }
    if value.starts_with('#') {
        return Err(malformed("value must not start with \"#\""));
    }
    let (key, rest) = value.split_once('=').ok_or_else(|| malformed("expected name=value"))?;
    if rest.contains('&') {
        return Err(malformed("only one dimension per value is supported"));
    }
    match key {
        "xywh" => parse_spatial(rest).ok_or_else(|| malformed("expected four comma-separated numbers")),
        "t" => parse_temporal(rest, &malformed),
        other => Err(AnchorError::UnsupportedDimension { dimension: other.to_owned() }),
    }
}

fn parse_spatial(rest: &str) -> Option<MediaFragment> {
    let (unit, coords) = match rest.split_once(':') {
        Some((unit, coords)) => (unit, coords),
        None => ("pixel", rest),
    };
    let parts: Vec<&str> = coords.split(',').collect();
    if parts.len() != 4 {
        return None;
    }
    match unit {
        "pixel" => {
            let n: Vec<u64> = parts.iter().map(|p| parse_digits(p)).collect::<Option<_>>()?;
            Some(MediaFragment::SpatialPx { x: n[0], y: n[1], w: n[2], h: n[3] })
        }
        "percent" => {
            let n: Vec<f64> = parts.iter().map(|p| parse_decimal(p)).collect::<Option<_>>()?;
            if n.iter().any(|&v| v > 100.0) {
                return None;
            }
            Some(MediaFragment::SpatialPercent { x: n[0], y: n[1], w: n[2], h: n[3] })
        }
        _ => None,
    }
}

fn parse_temporal(rest: &str, malformed: &dyn Fn(&str) -> AnchorError) -> Result<MediaFragment, AnchorError> {
    let times = rest.strip_prefix("npt:").unwrap_or(rest);
    let (start, end) = match times.split_once(',') {
        Some((s, e)) => (s, Some(e)),
        None => (times, None),
    };
    let start = match start {
        "" if end.is_some() => 0.0,
        s => parse_npt(s).ok_or_else(|| malformed("bad start time"))?,
    };
    let end = end.map(|e| parse_npt(e).ok_or_else(|| malformed("bad end time"))).transpose()?;
    if end.is_some_and(|e| start > e) {
        return Err(malformed("start time is after end time"));
    }
    Ok(MediaFragment::Time { start, end })
}

fn parse_digits(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Unsigned decimal: digits with an optional fractional part.
fn parse_decimal(s: &str) -> Option<f64> {
    let (int, frac) = match s.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (s, None),
    };
    parse_digits(int)?;
    if let Some(f) = frac {
        parse_digits(f)?;
    }
    s.parse().ok()
}

fn parse_npt(s: &str) -> Option<f64> {
    let fields: Vec<&str> = s.split(':').collect();
    match fields.as_slice() {
        [secs] => parse_decimal(secs),
        [mm, ss] => clock(0, mm, ss),
        [hh, mm, ss] => clock(parse_digits(hh)?, mm, ss),
        _ => None,
    }
}

fn clock(hours: u64, mm: &str, ss: &str) -> Option<f64> {
    if mm.len() != 2 || ss.split('.').next()?.len() != 2 {
        return None;
    }
    let minutes = parse_digits(mm)?;
    let seconds = parse_decimal(ss)?;
    if minutes > 59 || seconds >= 60.0 {
        return None;
    }
    Some((hours * 3600 + minutes * 60) as f64 + seconds)
}
