//! Design files (JSON) and SVG renderings of planar designs.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::design::{layer_decompose, WeightedPointSet, GROUP_TOL};
use crate::error::{DesignError, Result};
use crate::interval::IntervalDesign;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DesignKind {
    Euclidean,
    Interval,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, Default)]
pub struct Metadata {
    pub constructor: String,
    #[serde(default)]
    pub parameters: serde_json::Map<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_strength: Option<usize>,
}

/// On-disk design. For `kind = interval`, `dim` holds the dimension parameter `n`
/// of the weight `(1-x²)^{(n-3)/2}` and each point is a one-element array.
#[derive(Clone, Debug, PartialEq, Deserialize)]
pub struct DesignFile {
    pub format_version: u32,
    pub kind: DesignKind,
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
    #[serde(default)]
    pub metadata: Option<Metadata>,
}

/// Serialisation twin of [`DesignFile`] with floats pre-formatted at 17 significant digits.
#[derive(Serialize)]
struct DesignFileOut<'a> {
    format_version: u32,
    kind: DesignKind,
    dim: usize,
    points: Vec<Vec<Box<RawValue>>>,
    weights: Vec<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    metadata: Option<&'a Metadata>,
}

fn raw(x: f64) -> Result<Box<RawValue>> {
    if !x.is_finite() {
        return Err(DesignError::NonFinite("design file value"));
    }
    RawValue::from_string(format!("{x:.16e}")).map_err(|e| DesignError::Format(e.to_string()))
}

impl DesignFile {
    pub fn from_euclidean(x: &WeightedPointSet, metadata: Option<Metadata>) -> Self {
        DesignFile {
            format_version: FORMAT_VERSION,
            kind: DesignKind::Euclidean,
            dim: x.dim(),
            points: x.points().to_vec(),
            weights: x.weights().to_vec(),
            metadata,
        }
    }

    pub fn from_interval(d: &IntervalDesign, metadata: Option<Metadata>) -> Self {
        DesignFile {
            format_version: FORMAT_VERSION,
            kind: DesignKind::Interval,
            dim: d.n,
            points: d.nodes.iter().map(|&c| vec![c]).collect(),
            weights: d.weights.clone(),
            metadata,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(DesignError::Format(format!("unsupported format_version {}", self.format_version)));
        }
        if self.points.len() != self.weights.len() {
            return Err(DesignError::Format(format!(
                "{} points but {} weights",
                self.points.len(),
                self.weights.len()
            )));
        }
        let width = match self.kind {
            DesignKind::Euclidean => self.dim,
            DesignKind::Interval => 1,
        };
        if let Some(i) = self.points.iter().position(|p| p.len() != width) {
            return Err(DesignError::Format(format!("point {i} should have {width} coordinates")));
        }
        Ok(())
    }

    pub fn to_point_set(&self) -> Result<WeightedPointSet> {
        self.validate()?;
        if self.kind != DesignKind::Euclidean {
            return Err(DesignError::Format("expected a euclidean design, found an interval design".into()));
        }
        WeightedPointSet::new(self.dim, self.points.clone(), self.weights.clone())
    }

    pub fn to_interval(&self) -> Result<IntervalDesign> {
        self.validate()?;
        if self.kind != DesignKind::Interval {
            return Err(DesignError::Format("expected an interval design, found a euclidean design".into()));
        }
        let d = IntervalDesign {
            n: self.dim,
            t: self.metadata.as_ref().and_then(|m| m.claimed_strength).unwrap_or(0),
            nodes: self.points.iter().map(|p| p[0]).collect(),
            weights: self.weights.clone(),
        };
        d.validate()?;
        Ok(d)
    }

    pub fn to_json(&self) -> Result<String> {
        self.validate()?;
        let out = DesignFileOut {
            format_version: self.format_version,
            kind: self.kind,
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|&c| raw(c)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
            weights: self.weights.iter().map(|&w| raw(w)).collect::<Result<Vec<_>>>()?,
            metadata: self.metadata.as_ref(),
        };
        let mut s = serde_json::to_string_pretty(&out).map_err(|e| DesignError::Format(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: DesignFile = serde_json::from_str(s).map_err(|e| DesignError::Format(e.to_string()))?;
        f.validate()?;
        Ok(f)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| DesignError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?).map_err(|e| DesignError::Io(format!("{}: {e}", path.display())))
    }
}

/// Pretty JSON for any report type.
pub fn report_json<T: Serialize>(report: &T) -> Result<String> {
    serde_json::to_string_pretty(report).map_err(|e| DesignError::Format(e.to_string()))
}

const CANVAS: f64 = 480.0;
const MARGIN: f64 = 40.0;
const MAX_MARKER: f64 = 9.0;

/// SVG of a planar design: one guide circle per layer radius and one marker per
/// point, marker area proportional to weight. Output is deterministic.
pub fn render_svg(x: &WeightedPointSet) -> Result<String> {
    if x.dim() != 2 {
        return Err(DesignError::InvalidArgument(format!("can only render planar designs, got dimension {}", x.dim())));
    }
    let ld = layer_decompose(x, GROUP_TOL)?;
    let rmax = ld.radii.iter().cloned().fold(0.0, f64::max);
    let half = CANVAS / 2.0;
    let scale = (half - MARGIN) / rmax;
    let wmax = x.weights().iter().cloned().fold(0.0, f64::max);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
        c = CANVAS
    );
    let _ = writeln!(s, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r##"  <g fill="none" stroke="#bbbbbb" stroke-width="1">"##);
    for r in &ld.radii {
        let _ = writeln!(s, r#"    <circle cx="{half:.3}" cy="{half:.3}" r="{:.3}"/>"#, r * scale);
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, r##"  <g fill="#1f4e79">"##);
    for (p, w) in x.points().iter().zip(x.weights()) {
        let cx = half + p[0] * scale;
        // SVG y axis points down
        let cy = half - p[1] * scale;
        let r = MAX_MARKER * (w / wmax).sqrt();
        let _ = writeln!(s, r#"    <circle cx="{cx:.3}" cy="{cy:.3}" r="{r:.3}"/>"#);
    }
    let _ = writeln!(s, "  </g>");
    s.push_str("</svg>\n");
    Ok(s)
}

/// [`render_svg`] for a design file; interval designs are refused.
pub fn render_file_svg(f: &DesignFile) -> Result<String> {
    if f.kind != DesignKind::Euclidean {
        return Err(DesignError::InvalidArgument("interval designs cannot be rendered".into()));
    }
    render_svg(&f.to_point_set()?)
}
