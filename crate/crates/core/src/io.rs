//! File formats: module vectors, ballots, weighting vectors, games and
//! solution-concept coefficients.
//!
//! Rationals are written as lowest-terms `"p/q"` strings (`"p"` for integers)
//! and read from such strings, from decimal strings, or from bare JSON
//! integers.

use serde_json::{json, Map, Value};

use crate::coopgame::{Game, MarginalWeights, SolutionCoefficients, MAX_PLAYERS};
use crate::rational::{self, int};
use crate::voting::{Profile, WeightingVector};
use crate::{Composition, Error, ModuleVector, Rational, Result, Tabloid};

fn parse_json(text: &str, what: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::parse(what, e))
}

fn field<'a>(object: &'a Value, name: &str) -> Result<&'a Value> {
    object
        .get(name)
        .ok_or_else(|| Error::parse(name, "missing field"))
}

pub fn rational_from_json(name: &str, value: &Value) -> Result<Rational> {
    match value {
        Value::String(text) => rational::parse(text).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(name, message),
            other => other,
        }),
        Value::Number(number) => {
            if let Some(i) = number.as_i64() {
                Ok(int(i))
            } else if number.is_u64() || number.is_f64() {
                rational::parse(&number.to_string())
                    .map_err(|_| Error::parse(name, format!("unsupported number {number}")))
            } else {
                Err(Error::parse(name, format!("unsupported number {number}")))
            }
        }
        other => Err(Error::parse(
            name,
            format!("expected a rational, found {other}"),
        )),
    }
}

pub fn rational_to_json(value: &Rational) -> Value {
    Value::String(rational::format(value))
}

fn rational_list(name: &str, value: &Value) -> Result<Vec<Rational>> {
    value
        .as_array()
        .ok_or_else(|| Error::parse(name, "expected a list"))?
        .iter()
        .enumerate()
        .map(|(i, v)| rational_from_json(&format!("{name}[{i}]"), v))
        .collect()
}

fn usize_from_json(name: &str, value: &Value) -> Result<usize> {
    value
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| Error::parse(name, "expected a nonnegative integer"))
}

fn shape_from_json(value: &Value) -> Result<Composition> {
    let parts = value
        .as_array()
        .ok_or_else(|| Error::parse("shape", "expected a list of row lengths"))?
        .iter()
        .enumerate()
        .map(|(i, v)| usize_from_json(&format!("shape[{i}]"), v))
        .collect::<Result<Vec<_>>>()?;
    Composition::new(parts)
}

fn shape_to_json(shape: &Composition) -> Value {
    json!(shape.parts())
}

/// `{"shape": [...], "values": {"<rank>": "p/q", ...}}` listing the nonzero
/// entries in rank order.
pub fn vector_to_json(v: &ModuleVector) -> Value {
    let values: Map<String, Value> = v
        .iter_nonzero()
        .map(|(rank, value)| (rank.to_string(), rational_to_json(value)))
        .collect();
    json!({ "shape": shape_to_json(v.shape()), "values": values })
}

pub fn vector_from_json(value: &Value) -> Result<ModuleVector> {
    let shape = shape_from_json(field(value, "shape")?)?;
    let values = field(value, "values")?
        .as_object()
        .ok_or_else(|| Error::parse("values", "expected an object keyed by rank"))?;
    let mut dense = vec![Rational::default(); shape.tabloid_count()? as usize];
    for (key, entry) in values {
        let rank: usize = key.parse().map_err(|_| {
            Error::parse("values", format!("rank {key:?} is not a decimal integer"))
        })?;
        if rank >= dense.len() {
            return Err(Error::RankOutOfRange {
                rank: rank as u128,
                count: dense.len() as u128,
            });
        }
        dense[rank] = rational_from_json(&format!("values.{key}"), entry)?;
    }
    ModuleVector::from_values(&shape, dense)
}

pub fn read_vector(text: &str) -> Result<ModuleVector> {
    vector_from_json(&parse_json(text, "vector")?)
}

/// `"1>2>3"`, or `"1=2>3"` for a partial ranking whose rows tie.
pub fn ranking_to_string(x: &Tabloid) -> String {
    x.rows()
        .map(|row| {
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("=")
        })
        .collect::<Vec<_>>()
        .join(">")
}

pub fn ranking_from_string(name: &str, text: &str) -> Result<Vec<Vec<usize>>> {
    text.trim()
        .split('>')
        .map(|row| {
            row.split('=')
                .map(|label| {
                    label.trim().parse::<usize>().map_err(|_| {
                        Error::parse(name, format!("candidate label {label:?} in {text:?}"))
                    })
                })
                .collect()
        })
        .collect()
}

fn tabloid_from_rows(
    name: &str,
    n: usize,
    shape: Option<&Composition>,
    rows: Vec<Vec<usize>>,
) -> Result<Tabloid> {
    let found = Composition::new(rows.iter().map(Vec::len).collect::<Vec<_>>())
        .map_err(|_| Error::parse(name, "empty row"))?;
    if found.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: found.n(),
        });
    }
    let shape = shape.cloned().unwrap_or(found);
    Tabloid::new(shape, rows).map_err(|e| match e {
        Error::ShapeMismatch { expected, found } => Error::ShapeMismatch {
            expected: format!("{name} of shape {expected}"),
            found,
        },
        Error::InvalidArgument(message) => Error::parse(name, message),
        other => other,
    })
}

/// Ballot JSON: `{"n": 3, "shape": [1,1,1], "ballots": [{"ranking": [[1],[2],[3]], "count": 2}]}`.
pub fn read_ballots_json(text: &str) -> Result<Profile> {
    let value = parse_json(text, "ballot file")?;
    let n = usize_from_json("n", field(&value, "n")?)?;
    let shape = shape_from_json(field(&value, "shape")?)?;
    if shape.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: shape.n(),
        });
    }
    let ballots = field(&value, "ballots")?
        .as_array()
        .ok_or_else(|| Error::parse("ballots", "expected a list"))?;
    let mut entries = Vec::with_capacity(ballots.len());
    for (i, ballot) in ballots.iter().enumerate() {
        let name = format!("ballots[{i}].ranking");
        let rows = field(ballot, "ranking")
            .map_err(|_| Error::parse(&name, "missing field"))?
            .as_array()
            .ok_or_else(|| Error::parse(&name, "expected a list of rows"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::parse(&name, "expected each row to be a list"))?
                    .iter()
                    .map(|label| usize_from_json(&name, label))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let count_name = format!("ballots[{i}].count");
        let count = match ballot.get("count") {
            None => 1,
            Some(c) => c
                .as_u64()
                .ok_or_else(|| Error::parse(&count_name, "expected a nonnegative integer"))?,
        };
        entries.push((tabloid_from_rows(&name, n, Some(&shape), rows)?, count));
    }
    Profile::from_ballots(&shape, entries.iter().map(|(x, c)| (x, *c)))
}

/// CSV ballots, one per line: `1>2>3,count`. Every line must share the
/// shape of the first; `n` is taken from the first line unless given.
pub fn read_ballots_csv(text: &str, n: Option<usize>) -> Result<Profile> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut entries: Vec<(Tabloid, u64)> = Vec::new();
    let mut shape: Option<Composition> = None;
    for (line, record) in reader.records().enumerate() {
        let name = format!("line {}", line + 1);
        let record = record.map_err(|e| Error::parse(&name, e))?;
        let ranking = record
            .get(0)
            .ok_or_else(|| Error::parse(&name, "missing ranking"))?;
        let count = match record.get(1) {
            None | Some("") => 1,
            Some(c) => c
                .parse::<u64>()
                .map_err(|_| Error::parse(&name, format!("count {c:?}")))?,
        };
        let rows = ranking_from_string(&name, ranking)?;
        let size = n.unwrap_or_else(|| rows.iter().map(Vec::len).sum());
        let x = tabloid_from_rows(&name, size, shape.as_ref(), rows)?;
        shape.get_or_insert_with(|| x.shape().clone());
        entries.push((x, count));
    }
    let shape = match (shape, n) {
        (Some(shape), _) => shape,
        (None, Some(n)) => Composition::full_ranking(n)?,
        (None, None) => return Err(Error::parse("ballots", "no ballots and no candidate count")),
    };
    Profile::from_ballots(&shape, entries.iter().map(|(x, c)| (x, *c)))
}

/// `{"weights": ["1", "1/2", "0"]}`.
pub fn read_weights(text: &str) -> Result<WeightingVector> {
    let value = parse_json(text, "weights file")?;
    WeightingVector::new_unsorted(rational_list("weights", field(&value, "weights")?)?)
}

pub fn weights_to_json(w: &WeightingVector) -> Value {
    json!({ "weights": w.weights().iter().map(rational_to_json).collect::<Vec<_>>() })
}

/// `{"n": 3, "v": {"<bitmask>": "p/q", ...}}`; absent coalitions are worth 0.
pub fn read_game(text: &str) -> Result<Game> {
    let value = parse_json(text, "game file")?;
    let n = usize_from_json("n", field(&value, "n")?)?;
    if n < 2 {
        return Err(Error::parse("n", "games need at least two players"));
    }
    if n > MAX_PLAYERS {
        return Err(Error::Capacity {
            what: "game storage",
            needed: 1u128.checked_shl(n as u32).unwrap_or(u128::MAX),
            limit: 1u128 << MAX_PLAYERS,
        });
    }
    let mut game = Game::zero(n)?;
    let values = field(&value, "v")?
        .as_object()
        .ok_or_else(|| Error::parse("v", "expected an object keyed by coalition bitmask"))?;
    for (key, entry) in values {
        let name = format!("v.{key}");
        let mask: u32 = key
            .parse()
            .map_err(|_| Error::parse(&name, "bitmask key is not a decimal integer"))?;
        if mask == 0 {
            return Err(Error::parse(&name, "the empty coalition is fixed at 0"));
        }
        if mask > game.grand_coalition() {
            return Err(Error::SizeMismatch {
                expected: n,
                found: 32 - mask.leading_zeros() as usize,
            });
        }
        game.set(mask, rational_from_json(&name, entry)?)?;
    }
    Ok(game)
}

/// Game JSON listing every nonzero coalition value in bitmask order.
pub fn game_to_json(v: &Game) -> Value {
    let values: Map<String, Value> = (1..=v.grand_coalition())
        .filter(|&s| !num_traits::Zero::is_zero(v.value(s)))
        .map(|s| (s.to_string(), rational_to_json(v.value(s))))
        .collect();
    json!({ "n": v.n(), "v": values })
}

/// `{"c0": [...], "c1": [...]}`.
pub fn read_coefficients(text: &str) -> Result<SolutionCoefficients> {
    let value = parse_json(text, "coefficient file")?;
    let c0 = rational_list("c0", field(&value, "c0")?)?;
    let c1 = rational_list("c1", field(&value, "c1")?)?;
    if c1.len() + 1 != c0.len() {
        return Err(Error::SizeMismatch {
            expected: c0.len(),
            found: c1.len() + 1,
        });
    }
    SolutionCoefficients::new(c0, c1)
}

pub fn coefficients_to_json(c: &SolutionCoefficients) -> Value {
    json!({
        "c0": c.c0().iter().map(rational_to_json).collect::<Vec<_>>(),
        "c1": c.c1().iter().map(rational_to_json).collect::<Vec<_>>(),
    })
}

/// `{"m": [...]}`.
pub fn read_marginal(text: &str) -> Result<MarginalWeights> {
    let value = parse_json(text, "marginal file")?;
    MarginalWeights::new(rational_list("m", field(&value, "m")?)?)
}

pub fn marginal_to_json(m: &MarginalWeights) -> Value {
    json!({ "m": m.weights().iter().map(rational_to_json).collect::<Vec<_>>() })
}
