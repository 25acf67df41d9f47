//! CSV ingestion for feature vectors, similarity matrices and element
//! metadata.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use simgreedy::objectives::SimilarityMatrix;

/// Symmetry tolerance for an ingested similarity matrix.
pub const SYMMETRY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Features {
    pub labels: Vec<String>,
    pub vectors: Vec<Vec<f64>>,
}

fn reader(path: &Path, headers: bool) -> Result<csv::Reader<std::fs::File>> {
    csv::ReaderBuilder::new()
        .has_headers(headers)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .with_context(|| format!("reading {}", path.display()))
}

fn number(field: &str, path: &Path, line: usize, col: usize) -> Result<f64> {
    field
        .parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .with_context(|| {
            format!(
                "{}:{line}: column {} is not a number: {field:?}",
                path.display(),
                col + 1
            )
        })
}

/// Headerless CSV, one element per row: a label followed by its features.
pub fn ingest_features(path: &Path) -> Result<Features> {
    let mut labels = Vec::new();
    let mut vectors: Vec<Vec<f64>> = Vec::new();
    let mut seen = BTreeSet::new();
    for record in reader(path, false)?.records() {
        let record = record.with_context(|| format!("reading {}", path.display()))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let label = record.get(0).unwrap_or_default().to_string();
        let v = record
            .iter()
            .enumerate()
            .skip(1)
            .map(|(col, x)| number(x, path, line, col))
            .collect::<Result<Vec<f64>>>()?;
        if v.is_empty() {
            bail!("{}:{line}: row {label:?} has no features", path.display());
        }
        if let Some(first) = vectors.first() {
            if first.len() != v.len() {
                bail!(
                    "{}:{line}: row {label:?} has {} features, expected {}",
                    path.display(),
                    v.len(),
                    first.len()
                );
            }
        }
        if v.iter().all(|&x| x == 0.0) {
            bail!("{}:{line}: row {label:?} is a zero vector", path.display());
        }
        if !seen.insert(label.clone()) {
            bail!("{}:{line}: duplicate label {label:?}", path.display());
        }
        labels.push(label);
        vectors.push(v);
    }
    if vectors.is_empty() {
        bail!("{}: no rows", path.display());
    }
    Ok(Features { labels, vectors })
}

/// Headerless dense `n x n` CSV. Entries may disagree with their transpose
/// by [`SYMMETRY_TOLERANCE`]; the pair is then averaged. Entries outside
/// `[0, 1]` are clamped with a warning.
pub fn ingest_similarity(path: &Path) -> Result<SimilarityMatrix<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for record in reader(path, false)?.records() {
        let record = record.with_context(|| format!("reading {}", path.display()))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let row = record
            .iter()
            .enumerate()
            .map(|(col, x)| number(x, path, line, col))
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        bail!("{}: no rows", path.display());
    }
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        bail!(
            "{}: row {i} has {} entries, expected {n}",
            path.display(),
            r.len()
        );
    }
    let mut clamped = 0usize;
    let mut entries = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (rows[i][j], rows[j][i]);
            if (a - b).abs() > SYMMETRY_TOLERANCE {
                bail!(
                    "{}: entries ({i},{j}) = {a} and ({j},{i}) = {b} are not symmetric",
                    path.display()
                );
            }
            let s = 0.5 * (a + b);
            if !(0.0..=1.0).contains(&s) {
                clamped += 1;
            }
            entries[i * n + j] = s.clamp(0.0, 1.0);
        }
    }
    if clamped > 0 {
        log::warn!("{}: clamped {clamped} entries into [0, 1]", path.display());
    }
    SimilarityMatrix::new(n, entries).with_context(|| format!("validating {}", path.display()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetaRow {
    pub id: String,
    pub genres: Vec<String>,
    pub year: Option<i64>,
    pub rating: Option<f64>,
}

#[derive(Deserialize)]
struct RawMeta {
    id: String,
    #[serde(default)]
    genres: String,
    #[serde(default)]
    year: Option<i64>,
    #[serde(default)]
    rating: Option<f64>,
}

/// CSV with a header naming at least `id` and `genres`; `year` and `rating`
/// may be absent or empty. Genres are separated by `;`.
pub fn ingest_metadata(path: &Path) -> Result<Vec<MetaRow>> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut rdr = reader(path, true)?;
    for (i, raw) in rdr.deserialize::<RawMeta>().enumerate() {
        let raw = raw.with_context(|| format!("{}: row {}", path.display(), i + 1))?;
        if !seen.insert(raw.id.clone()) {
            bail!("{}: duplicate id {:?}", path.display(), raw.id);
        }
        let genres = raw
            .genres
            .split(';')
            .map(str::trim)
            .filter(|g| !g.is_empty())
            .map(String::from)
            .collect();
        out.push(MetaRow {
            id: raw.id,
            genres,
            year: raw.year,
            rating: raw.rating,
        });
    }
    Ok(out)
}

/// Metadata rows in element order. Every element label needs a row; rows for
/// unknown labels are ignored.
pub fn align<'a>(rows: &'a [MetaRow], labels: &[String]) -> Result<Vec<&'a MetaRow>> {
    let by_id: BTreeMap<&str, &MetaRow> = rows.iter().map(|r| (r.id.as_str(), r)).collect();
    labels
        .iter()
        .map(|l| {
            by_id
                .get(l.as_str())
                .copied()
                .with_context(|| format!("no metadata for element {l:?}"))
        })
        .collect()
}

/// Knapsack coefficient of a rating before division by the budget.
pub fn rating_cost(rating: f64) -> f64 {
    (rating - 5.0).max(0.0)
}
