//! JSON file formats for complexes, chains, covers, groups and coverings.
//!
//! Coefficients are exact rational strings such as `"-3/4"`; plain JSON
//! integers are accepted on input.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chain::{Chain, Cochain};
use crate::complex::OrientedComplex;
use crate::covering::{CoveringDatum, IsometryGroupDatum};
use crate::error::{Error, Result};
use crate::groupcoh::group::DEFAULT_ORDER_CAP;
use crate::groupcoh::FiniteGroup;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::simplicial::OpenCover;

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: usize,
    pub simplices: Vec<Vec<usize>>,
}

impl ComplexFile {
    pub fn build(&self) -> Result<OrientedComplex> {
        OrientedComplex::from_simplices(self.vertices, &self.simplices)
    }

    /// Every simplex of positive dimension in index order, so that parsing
    /// reproduces the index assignment of `k`.
    pub fn from_complex(k: &OrientedComplex) -> Self {
        Self { vertices: k.vertex_count(), simplices: k.layers().iter().skip(1).flatten().cloned().collect() }
    }
}

pub fn parse_complex(text: &str) -> Result<OrientedComplex> {
    parse_json::<ComplexFile>(text, "complex")?.build()
}

/// The index assignment of every simplex, per dimension.
pub fn index_assignment(k: &OrientedComplex) -> Value {
    let layers: BTreeMap<String, &Vec<Vec<usize>>> =
        k.layers().iter().enumerate().map(|(d, l)| (d.to_string(), l)).collect();
    serde_json::to_value(layers).expect("layers serialize")
}

#[derive(Deserialize)]
struct CoeffFile {
    degree: usize,
    coeffs: BTreeMap<String, Value>,
}

fn coefficient(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().expect("checked").into())),
        other => Err(Error::Parse(format!("coefficient must be a \"p/q\" string or an integer, got {other}"))),
    }
}

fn parse_coeffs(text: &str, what: &str) -> Result<(usize, Vec<(usize, Rational)>)> {
    let file: CoeffFile = parse_json(text, what)?;
    let mut pairs = Vec::with_capacity(file.coeffs.len());
    for (key, value) in &file.coeffs {
        let index = key
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("{what}: simplex index {key:?} is not a nonnegative integer")))?;
        pairs.push((index, coefficient(value)?));
    }
    Ok((file.degree, pairs))
}

pub fn parse_chain(text: &str) -> Result<Chain> {
    let (degree, pairs) = parse_coeffs(text, "chain")?;
    Ok(Chain::from_pairs(degree, pairs))
}

pub fn parse_cochain(text: &str) -> Result<Cochain> {
    let (degree, pairs) = parse_coeffs(text, "cochain")?;
    Ok(Cochain::from_pairs(degree, pairs))
}

fn coeffs_json(degree: usize, iter: impl Iterator<Item = (usize, Rational)>) -> Value {
    let coeffs: BTreeMap<String, String> = iter.map(|(i, a)| (i.to_string(), format_rational(&a))).collect();
    serde_json::json!({ "degree": degree, "coeffs": coeffs })
}

pub fn chain_json(c: &Chain) -> Value {
    coeffs_json(c.degree(), c.iter().map(|(i, a)| (i, a.clone())))
}

pub fn cochain_json(f: &Cochain) -> Value {
    coeffs_json(f.degree(), f.iter().map(|(i, a)| (i, a.clone())))
}

/// Dense list of exact values.
pub fn rationals_json(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(format_rational(v))).collect())
}

#[derive(Deserialize)]
struct CoverFile {
    sets: BTreeMap<String, Vec<CoverEntry>>,
}

/// A cover entry is a vertex list, or an index into the published index
/// assignment flattened across dimensions in increasing dimension.
#[derive(Deserialize)]
#[serde(untagged)]
enum CoverEntry {
    Index(usize),
    Vertices(Vec<usize>),
}

pub fn parse_cover(k: &OrientedComplex, text: &str) -> Result<OpenCover> {
    let file: CoverFile = parse_json(text, "cover")?;
    let flat: Vec<&Vec<usize>> = k.layers().iter().flatten().collect();
    let mut sets = Vec::with_capacity(file.sets.len());
    for (name, entries) in file.sets {
        let mut cells = Vec::with_capacity(entries.len());
        for e in entries {
            cells.push(match e {
                CoverEntry::Vertices(v) => v,
                CoverEntry::Index(i) => flat
                    .get(i)
                    .map(|s| s.to_vec())
                    .ok_or_else(|| Error::Parse(format!("cover {name}: simplex index {i} out of range")))?,
            });
        }
        sets.push((name, cells));
    }
    OpenCover::new(k, sets)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupFile {
    Table { order: usize, table: Vec<Vec<usize>> },
    Generators { degree: usize, generators: Vec<Vec<usize>> },
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    parse_group_capped(text, DEFAULT_ORDER_CAP)
}

pub fn parse_group_capped(text: &str, cap: usize) -> Result<FiniteGroup> {
    let file: GroupFile = parse_json(text, "group")?;
    let group = match file {
        GroupFile::Table { order, table } => {
            if table.len() != order {
                return Err(Error::InvalidGroup(format!("order {order} but {} table rows", table.len())));
            }
            FiniteGroup::from_table(table)?
        }
        GroupFile::Generators { degree, generators } => FiniteGroup::from_permutations(degree, &generators, cap)?,
    };
    group.check_order(cap)?;
    Ok(group)
}

pub fn group_json(g: &FiniteGroup) -> Value {
    serde_json::json!({ "order": g.order(), "table": g.table() })
}

#[derive(Deserialize)]
struct CoveringFile {
    base: ComplexFile,
    total: ComplexFile,
    projection: Vec<usize>,
    deck_generators: Vec<Vec<usize>>,
    fundamental_domain: Vec<usize>,
}

pub fn parse_covering(text: &str) -> Result<CoveringDatum> {
    let file: CoveringFile = parse_json(text, "covering")?;
    CoveringDatum::new(
        file.base.build()?,
        file.total.build()?,
        file.projection,
        &file.deck_generators,
        file.fundamental_domain,
    )
}

#[derive(Deserialize)]
struct IsometryFile {
    complex: ComplexFile,
    group_generators: Vec<Vec<usize>>,
    #[serde(default)]
    subgroup_generators: Vec<Vec<usize>>,
}

/// `{"complex": <complex>, "group_generators": [[...]], "subgroup_generators": [[...]]}`.
pub fn parse_isometry_datum(text: &str) -> Result<IsometryGroupDatum> {
    let file: IsometryFile = parse_json(text, "isometry datum")?;
    IsometryGroupDatum::new(file.complex.build()?, &file.group_generators, &file.subgroup_generators)
}
