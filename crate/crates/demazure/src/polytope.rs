//! Three-variable polynomials as weighted lattice clouds on the degree plane, the
//! six Coxeter regions, and CSV/SVG output.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::path::Path;

use crate::poly::Polynomial;
use crate::shape;
use crate::Error;

pub type Point = [u32; 3];

/// Lattice points with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeCloud {
    pub points: BTreeMap<Point, u64>,
}

impl LatticeCloud {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.points.values().copied().max().unwrap_or(0)
    }

    /// Multiset union.
    pub fn union(&self, other: &LatticeCloud) -> LatticeCloud {
        let mut points = self.points.clone();
        for (p, m) in &other.points {
            *points.entry(*p).or_insert(0) += m;
        }
        LatticeCloud { points }
    }

    pub fn touches(&self, r: Region) -> bool {
        self.points.keys().any(|p| r.contains(p))
    }
}

/// One point per monomial; signed polynomials have no cloud.
pub fn cloud_of(f: &Polynomial) -> Result<LatticeCloud, Error> {
    if f.used_vars() > 3 {
        return Err(Error::WrongVariableCount { expected: 3, got: f.used_vars() });
    }
    let f = f.with_nvars(3);
    let mut points = BTreeMap::new();
    for (e, c) in f.terms() {
        if c < 0 {
            return Err(Error::NegativeCoefficient { coeff: c, at: shape::fmt_comp(e) });
        }
        points.insert([e[0], e[1], e[2]], c as u64);
    }
    Ok(LatticeCloud { points })
}

/// The closed sectors of the A_2 arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    /// a1 >= a2 >= a3
    R1,
    /// a1 >= a3 >= a2
    R2,
    /// a2 >= a1 >= a3
    R3,
    /// a3 >= a1 >= a2
    R4,
    /// a2 >= a3 >= a1
    R5,
    /// a3 >= a2 >= a1
    R6,
}

impl Region {
    pub const ALL: [Region; 6] = [Region::R1, Region::R2, Region::R3, Region::R4, Region::R5, Region::R6];

    /// Coordinate indices in decreasing order.
    fn chain(self) -> [usize; 3] {
        match self {
            Region::R1 => [0, 1, 2],
            Region::R2 => [0, 2, 1],
            Region::R3 => [1, 0, 2],
            Region::R4 => [2, 0, 1],
            Region::R5 => [1, 2, 0],
            Region::R6 => [2, 1, 0],
        }
    }

    pub fn contains(self, p: &Point) -> bool {
        let [i, j, k] = self.chain();
        p[i] >= p[j] && p[j] >= p[k]
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

pub fn region_of(p: &Point) -> BTreeSet<Region> {
    Region::ALL.into_iter().filter(|r| r.contains(p)).collect()
}

/// Integer coordinates in the root plane: u = a1 - a2, v = a1 + a2 - 2 a3.
pub fn project(p: &Point) -> (i64, i64) {
    let [a, b, c] = p.map(i64::from);
    (a - b, a + b - 2 * c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Svg,
}

impl Format {
    pub fn from_path(path: &Path) -> Result<Format, Error> {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("csv") => Ok(Format::Csv),
            Some("svg") => Ok(Format::Svg),
            _ => Err(Error::Parse(format!("output must end in .csv or .svg: {}", path.display()))),
        }
    }
}

pub const CSV_HEADER: &str = "a1,a2,a3,u,v,multiplicity,regions";

pub fn to_csv(cloud: &LatticeCloud) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (p, m) in &cloud.points {
        let (u, v) = project(p);
        let regions: Vec<String> = region_of(p).iter().map(Region::to_string).collect();
        writeln!(out, "{},{},{},{u},{v},{m},{}", p[0], p[1], p[2], regions.join(";")).unwrap();
    }
    out
}

pub const CANVAS: u32 = 480;

/// SVG 1.1 picture on a fixed canvas. Screen coordinates are x = √3·u·s,
/// y = -v·s around the canvas centre, which makes the sectors 60° wide.
pub fn to_svg(cloud: &LatticeCloud) -> String {
    let half = f64::from(CANVAS) / 2.0;
    let r3 = 3f64.sqrt();
    let extent = cloud
        .points
        .keys()
        .map(|p| {
            let (u, v) = project(p);
            ((u as f64) * r3).abs().max((v as f64).abs())
        })
        .fold(1.0, f64::max);
    let s = (half - 40.0) / extent;
    let to_screen = |u: f64, v: f64| (half + r3 * u * s, half - v * s);
    let maxm = cloud.max_multiplicity().max(1) as f64;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{CANVAS}" height="{CANVAS}" fill="white"/>"#).unwrap();
    // rays a1=a2, a2=a3, a1=a3 in both directions
    for (u, v) in [(0.0, 1.0), (0.0, -1.0), (1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)] {
        let norm = ((r3 * u) * (r3 * u) + v * v).sqrt();
        let (x, y) = (half + r3 * u / norm * half, half - v / norm * half);
        writeln!(
            out,
            r##"<line x1="{half:.2}" y1="{half:.2}" x2="{x:.2}" y2="{y:.2}" stroke="#999" stroke-width="1"/>"##
        )
        .unwrap();
    }
    for (p, m) in &cloud.points {
        let (u, v) = project(p);
        let (x, y) = to_screen(u as f64, v as f64);
        let r = 3.0 + 5.0 * (*m as f64) / maxm;
        writeln!(
            out,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}" fill="#246"><title>({},{},{}) mult {m}</title></circle>"##,
            p[0], p[1], p[2]
        )
        .unwrap();
        if *m > 1 {
            writeln!(
                out,
                r##"<text x="{:.2}" y="{:.2}" font-size="11" font-family="sans-serif" fill="#a22">{m}</text>"##,
                x + r + 1.0,
                y - r
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn emit(cloud: &LatticeCloud, format: Format, path: &Path) -> Result<(), Error> {
    let body = match format {
        Format::Csv => to_csv(cloud),
        Format::Svg => to_svg(cloud),
    };
    std::fs::write(path, body)?;
    Ok(())
}

/// Does the cloud meet R5 ∪ R6?
pub fn touches_r5_r6(cloud: &LatticeCloud) -> bool {
    cloud.touches(Region::R5) || cloud.touches(Region::R6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::OperatorKind;

    #[test]
    fn clouds() {
        let c = cloud_of(&Polynomial::monomial(&[3, 1, 0])).unwrap();
        assert_eq!(c.points, BTreeMap::from([([3, 1, 0], 1)]));
        let c = cloud_of(&Polynomial::monomial(&[4, 1, 0]).pi(1)).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.points.values().all(|&m| m == 1));
        assert!(c.points.keys().all(|p| p[2] == 0 && p[0] + p[1] == 5));
        let c = cloud_of(&Polynomial::one(0)).unwrap();
        assert_eq!(c.points, BTreeMap::from([([0, 0, 0], 1)]));
        assert!(matches!(cloud_of(&"x1 - x2".parse().unwrap()), Err(Error::NegativeCoefficient { coeff: -1, .. })));
    }

    #[test]
    fn regions() {
        assert_eq!(region_of(&[3, 1, 0]), BTreeSet::from([Region::R1]));
        assert_eq!(region_of(&[2, 2, 2]).len(), 6);
        assert_eq!(region_of(&[1, 3, 0]), BTreeSet::from([Region::R3]));
        assert_eq!(region_of(&[2, 2, 0]), BTreeSet::from([Region::R1, Region::R3]));
    }

    #[test]
    fn projection() {
        assert_eq!(project(&[5, 2, 0]), (3, 7));
        assert_eq!(project(&[2, 5, 0]), (-3, 7));
        assert_eq!(project(&[2, 2, 2]), (0, 0));
        let mut seen = BTreeMap::new();
        for a in 0..=10u32 {
            for b in 0..=10 {
                for c in 0..=10 {
                    let prev = seen.insert((a + b + c, project(&[a, b, c])), [a, b, c]);
                    assert!(prev.is_none());
                }
            }
        }
    }

    #[test]
    fn output() {
        assert_eq!(to_csv(&LatticeCloud::default()), format!("{CSV_HEADER}\n"));
        let k = Polynomial::monomial(&[3, 1, 0]).apply_word(OperatorKind::Pi, &[2]);
        let csv = to_csv(&cloud_of(&k).unwrap());
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.contains("3,0,1,3,1,1,R2\n"));
        let c = cloud_of(&Polynomial::monomial(&[4, 1, 0]).apply_word(OperatorKind::Pi, &[1, 2, 1])).unwrap();
        assert_eq!(to_svg(&c), to_svg(&c.clone()));
        assert!(to_svg(&c).starts_with("<?xml"));
    }
}
