//! JSON formats. Rationals are written as strings such as `"-1/2"`; edges
//! are keyed as `"u-v"` with `u < v`.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::adversary::AdversaryWitness;
use crate::cn::Certificate;
use crate::graph::{Edge, Graph};
use crate::label::{Label, Labelling, ListAssignment, Mode};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
}

fn shape<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Shape(msg.into()))
}

fn parse_label(v: &Value, ctx: &str) -> Result<Label, FormatError> {
    match v {
        Value::String(s) => s
            .parse()
            .map_err(|e| FormatError::Shape(format!("{ctx}: {e}"))),
        Value::Number(n) if n.is_i64() => Ok(Label::int(n.as_i64().unwrap())),
        _ => shape(format!("{ctx}: expected a rational string, found {v}")),
    }
}

fn parse_edge(key: &str) -> Result<Edge, FormatError> {
    Edge::parse_key(key).ok_or_else(|| FormatError::Shape(format!("bad edge key {key:?}")))
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>, FormatError> {
    v.as_object()
        .ok_or_else(|| FormatError::Shape(format!("{what} must be a JSON object")))
}

pub fn lists_to_value(la: &ListAssignment) -> Value {
    let map: Map<String, Value> = la
        .iter()
        .map(|(e, l)| {
            let labels: Vec<Value> = l.iter().map(|x| Value::String(x.to_string())).collect();
            (e.key(), Value::Array(labels))
        })
        .collect();
    Value::Object(map)
}

pub fn lists_from_value(v: &Value) -> Result<ListAssignment, FormatError> {
    let mut la = ListAssignment::new();
    for (k, l) in object(v, "list assignment")? {
        let e = parse_edge(k)?;
        let Some(items) = l.as_array() else {
            return shape(format!("list of {k} must be an array"));
        };
        let labels = items
            .iter()
            .map(|x| parse_label(x, &format!("list of {k}")))
            .collect::<Result<Vec<_>, _>>()?;
        la.insert(e, labels);
    }
    Ok(la)
}

pub fn parse_lists(text: &str) -> Result<ListAssignment, FormatError> {
    lists_from_value(&serde_json::from_str(text)?)
}

pub fn labelling_to_value(lab: &Labelling) -> Value {
    Value::Object(
        lab.iter()
            .map(|(e, x)| (e.key(), Value::String(x.to_string())))
            .collect(),
    )
}

pub fn labelling_from_value(v: &Value) -> Result<Labelling, FormatError> {
    object(v, "labelling")?
        .iter()
        .map(|(k, x)| Ok((parse_edge(k)?, parse_label(x, &format!("label of {k}"))?)))
        .collect()
}

pub fn parse_labelling(text: &str) -> Result<Labelling, FormatError> {
    labelling_from_value(&serde_json::from_str(text)?)
}

pub fn certificate_to_value(c: &Certificate) -> Value {
    json!({
        "mode": c.mode.to_string(),
        "exponents": c.exponents,
        "coefficient": c.coefficient.to_string(),
        "bound": c.bound,
        "zero_free_bound": c.zero_free_bound(),
        "max_degree": c.max_degree,
    })
}

pub fn certificate_from_value(v: &Value) -> Result<Certificate, FormatError> {
    let o = object(v, "certificate")?;
    let field = |k: &str| {
        o.get(k)
            .ok_or_else(|| FormatError::Shape(format!("certificate lacks {k:?}")))
    };
    let mode: Mode = field("mode")?
        .as_str()
        .unwrap_or_default()
        .parse()
        .map_err(|e| FormatError::Shape(format!("mode: {e}")))?;
    let exponents = field("exponents")?
        .as_array()
        .ok_or_else(|| FormatError::Shape("exponents must be an array".into()))?
        .iter()
        .map(|x| x.as_u64().map(|t| t as u32))
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| FormatError::Shape("exponents must be non-negative integers".into()))?;
    let coefficient = field("coefficient")?
        .as_str()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| FormatError::Shape("coefficient must be an integer string".into()))?;
    let bound = field("bound")?
        .as_u64()
        .ok_or_else(|| FormatError::Shape("bound must be an integer".into()))? as u32;
    let max_degree = field("max_degree")?
        .as_bool()
        .ok_or_else(|| FormatError::Shape("max_degree must be a boolean".into()))?;
    Ok(Certificate {
        mode,
        exponents,
        coefficient,
        bound,
        max_degree,
    })
}

pub fn graph_to_value(g: &Graph) -> Value {
    Value::Array(g.edges().iter().map(|e| json!([e.u(), e.v()])).collect())
}

pub fn graph_from_value(v: &Value) -> Result<Graph, FormatError> {
    let Some(items) = v.as_array() else {
        return shape("graph must be an array of [u, v] pairs");
    };
    let mut g = Graph::new();
    for it in items {
        let pair = it.as_array().and_then(|p| match p.as_slice() {
            [a, b] => Some((a.as_u64()? as usize, b.as_u64()? as usize)),
            _ => None,
        });
        let Some((a, b)) = pair else {
            return shape(format!("bad edge {it}"));
        };
        g.add_edge(a, b).map_err(|e| FormatError::Shape(e.to_string()))?;
    }
    Ok(g)
}

pub fn witness_to_value(w: &AdversaryWitness) -> Value {
    json!({
        "graph": graph_to_value(&w.graph),
        "lists": lists_to_value(&w.lists),
        "claim": w.claim,
    })
}

pub fn witness_from_value(v: &Value) -> Result<AdversaryWitness, FormatError> {
    let o = object(v, "witness")?;
    let get = |k: &str| {
        o.get(k)
            .ok_or_else(|| FormatError::Shape(format!("witness lacks {k:?}")))
    };
    Ok(AdversaryWitness {
        graph: graph_from_value(get("graph")?)?,
        lists: lists_from_value(get("lists")?)?,
        claim: get("claim")?.as_str().unwrap_or_default().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn lists_round_trip_and_numbers() {
        let la = parse_lists(r#"{"0-1": ["1", "-1/2", 3], "1-2": ["2"]}"#).unwrap();
        assert_eq!(la.get(Edge::new(0, 1)).unwrap().len(), 3);
        assert_eq!(lists_from_value(&lists_to_value(&la)).unwrap(), la);
        assert!(parse_lists(r#"{"1-0": ["1"]}"#).is_err());
        assert!(parse_lists(r#"{"0-1": ["x"]}"#).is_err());
    }

    #[test]
    fn witness_round_trip() {
        let w = crate::adversary::bad_tree8(&Label::int(2)).unwrap();
        assert_eq!(witness_from_value(&witness_to_value(&w)).unwrap(), w);
        let g = generators::petersen();
        assert_eq!(graph_from_value(&graph_to_value(&g)).unwrap(), g);
    }
}
