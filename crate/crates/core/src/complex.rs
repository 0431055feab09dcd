//! Finite ordered simplicial complexes: validation, the text and JSON file
//! formats, and the built-in generators.
//!
//! The text format lists one maximal simplex per line as comma-separated
//! vertex indices. `#` starts a comment and blank lines are ignored. The JSON
//! form is `{"vertices": N, "simplices": [[...], ...]}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simplicial complex on the vertices `0..vertex_count`, stored by
/// its maximal simplices. Vertex order is the integer order of the labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Complex {
    #[serde(rename = "vertices")]
    vertex_count: usize,
    #[serde(rename = "simplices")]
    maximal_simplices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl Complex {
    /// Validates the given simplices and reduces them to the maximal ones.
    ///
    /// Vertices that lie in no listed simplex become isolated vertices.
    pub fn new(
        vertex_count: usize,
        simplices: impl IntoIterator<Item = Vec<usize>>,
        name: Option<String>,
    ) -> Result<Self> {
        let mut cleaned = BTreeSet::new();
        for mut s in simplices {
            s.sort_unstable();
            if let Some((a, _)) = s.iter().tuple_windows().find(|(a, b)| a == b) {
                return Err(Error::DuplicateVertex {
                    vertex: *a,
                    simplex: s.clone(),
                });
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: vertex_count,
                });
            }
            if !s.is_empty() {
                cleaned.insert(s);
            }
        }
        if vertex_count == 0 {
            return Err(Error::EmptyComplex);
        }

        let mut by_size: Vec<Vec<usize>> = cleaned.into_iter().collect();
        by_size.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut maximal: Vec<Vec<usize>> = Vec::new();
        for s in by_size {
            if !maximal.iter().any(|m| is_subset(&s, m)) {
                maximal.push(s);
            }
        }
        let mut covered = vec![false; vertex_count];
        for v in maximal.iter().flatten() {
            covered[*v] = true;
        }
        maximal.extend((0..vertex_count).filter(|&v| !covered[v]).map(|v| vec![v]));
        maximal.sort();

        Ok(Self {
            vertex_count,
            maximal_simplices: maximal,
            name,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn maximal_simplices(&self) -> &[Vec<usize>] {
        &self.maximal_simplices
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.maximal_simplices
            .iter()
            .map(|s| s.len() - 1)
            .max()
            .unwrap_or(0)
    }

    /// All simplices, grouped by dimension and sorted lexicographically.
    pub fn simplices(&self) -> Vec<Vec<Vec<usize>>> {
        let mut grades: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); self.dim() + 1];
        for m in &self.maximal_simplices {
            for k in 1..=m.len() {
                for face in m.iter().copied().combinations(k) {
                    grades[k - 1].insert(face);
                }
            }
        }
        grades.into_iter().map(|g| g.into_iter().collect()).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices().iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Suspension: joins the complex with two new cone points.
    pub fn suspension(&self) -> Complex {
        let (north, south) = (self.vertex_count, self.vertex_count + 1);
        let simplices = self.maximal_simplices.iter().flat_map(|s| {
            [north, south].map(|apex| {
                let mut t = s.clone();
                t.push(apex);
                t
            })
        });
        Complex::new(
            self.vertex_count + 2,
            simplices.collect::<Vec<_>>(),
            self.name.as_ref().map(|n| format!("susp({n})")),
        )
        .expect("suspension of a valid complex is valid")
    }

    /// Parses the line-oriented text format.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut simplices = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let simplex = line
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        message: format!("`{tok}` is not a vertex index"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            simplices.push(simplex);
        }
        let vertex_count = simplices.iter().flatten().max().map_or(0, |m| m + 1);
        if vertex_count == 0 {
            return Err(Error::EmptyComplex);
        }
        Complex::new(vertex_count, simplices, None)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: Complex = serde_json::from_str(text)?;
        Complex::new(raw.vertex_count, raw.maximal_simplices, raw.name)
    }

    /// Parses either format, choosing JSON when the first non-blank character is `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.maximal_simplices {
            out.push_str(&s.iter().join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex serializes")
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

/// Built-in complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Boundary of the `(n+1)`-simplex.
    Sphere(usize),
    /// 9-vertex, 18-triangle torus on the 3x3 grid.
    Torus,
    /// 6-vertex real projective plane.
    Rp2,
    Point,
    Interval,
}

impl Generator {
    pub fn generate(self) -> Complex {
        let (n, simplices): (usize, Vec<Vec<usize>>) = match self {
            Generator::Sphere(n) => (
                n + 2,
                (0..n + 2).combinations(n + 1).collect(),
            ),
            Generator::Torus => {
                let v = |i: usize, j: usize| 3 * (i % 3) + (j % 3);
                let mut t = Vec::with_capacity(18);
                for i in 0..3 {
                    for j in 0..3 {
                        t.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
                        t.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
                    }
                }
                (9, t)
            }
            Generator::Rp2 => (
                6,
                [
                    [0, 1, 2],
                    [0, 2, 3],
                    [0, 3, 4],
                    [0, 4, 5],
                    [0, 1, 5],
                    [1, 2, 4],
                    [2, 3, 5],
                    [1, 3, 4],
                    [2, 4, 5],
                    [1, 3, 5],
                ]
                .iter()
                .map(|t| t.to_vec())
                .collect(),
            ),
            Generator::Point => (1, vec![vec![0]]),
            Generator::Interval => (2, vec![vec![0, 1]]),
        };
        Complex::new(n, simplices, Some(self.to_string())).expect("built-in complexes are valid")
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sphere(n) => write!(f, "sphere:{n}"),
            Generator::Torus => f.write_str("torus"),
            Generator::Rp2 => f.write_str("rp2"),
            Generator::Point => f.write_str("point"),
            Generator::Interval => f.write_str("interval"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// Accepts `NAME[:PARAM]`, e.g. `sphere:3`, `torus`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let unknown = || Error::UnknownGenerator(s.to_string());
        match (name, param) {
            ("sphere", Some(p)) => p.parse().map(Generator::Sphere).map_err(|_| unknown()),
            ("torus", None) => Ok(Generator::Torus),
            ("rp2", None) => Ok(Generator::Rp2),
            ("point", None) => Ok(Generator::Point),
            ("interval", None) => Ok(Generator::Interval),
            _ => Err(unknown()),
        }
    }
}
