//! Reading graphs, pairs and other arguments. An argument is read from a
//! file when it names an existing one, from stdin when it is `-`, and is
//! taken literally otherwise.

use std::io::Read;
use std::path::Path;

use degsim::certify::{Certificate, CertifiedPair};
use degsim::graph::{Graph, RootedGraph, SwitchingPartition};
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;

pub fn read_arg(arg: Option<&str>) -> Result<String, CliError> {
    match arg {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Parse(format!("reading stdin: {e}")))?;
            Ok(s)
        }
        Some(a) if Path::new(a).is_file() => {
            std::fs::read_to_string(a).map_err(|e| CliError::Parse(format!("reading {a}: {e}")))
        }
        Some(a) => Ok(a.to_string()),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    if text.trim().is_empty() {
        return Err(CliError::Parse("empty graph input".into()));
    }
    Ok(Graph::parse(text)?)
}

pub fn graph(arg: Option<&str>) -> Result<Graph, CliError> {
    parse_graph(&read_arg(arg)?)
}

fn json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("malformed JSON: {e}")))
}

fn graph_value(v: &Value) -> Result<Graph, CliError> {
    match v {
        Value::String(s) => parse_graph(s),
        Value::Object(_) => Ok(Graph::from_edge_list_json(&v.to_string())?),
        _ => Err(CliError::Parse(
            "expected a graph6 string or an edge-list object".into(),
        )),
    }
}

/// A certified pair as written by `construct`, or a single graph standing
/// for the trivial pair `(g, g, I)`.
pub fn pair(arg: &str) -> Result<CertifiedPair, CliError> {
    let text = read_arg(Some(arg))?;
    let v = serde_json::from_str::<Value>(text.trim()).ok();
    match v {
        Some(v) if v.get("certificate").is_some() => Ok(CertifiedPair::from_json(&v)?),
        _ => Ok(CertifiedPair::trivial(parse_graph(&text)?)),
    }
}

/// A certificate object, or any object holding one under `"certificate"`.
pub fn certificate(arg: &str) -> Result<Certificate, CliError> {
    let v = json(&read_arg(Some(arg))?)?;
    let c = v.get("certificate").unwrap_or(&v);
    Ok(Certificate::from_json(c)?)
}

#[derive(Deserialize)]
struct Instance {
    graph: Value,
    cells: Vec<Vec<usize>>,
    rest: Vec<usize>,
}

/// `{"graph": .., "cells": [[..], ..], "rest": [..]}`.
pub fn switching_instance(arg: &str) -> Result<(Graph, SwitchingPartition), CliError> {
    let v = json(&read_arg(Some(arg))?)?;
    let inst: Instance = serde_json::from_value(v)
        .map_err(|e| CliError::Parse(format!("malformed switching instance: {e}")))?;
    Ok((
        graph_value(&inst.graph)?,
        SwitchingPartition::new(inst.cells, inst.rest),
    ))
}

/// `GRAPH@ROOT`.
pub fn rooted(text: &str) -> Result<RootedGraph, CliError> {
    let (g, r) = text
        .rsplit_once('@')
        .ok_or_else(|| CliError::Parse(format!("expected GRAPH@ROOT, got {text:?}")))?;
    let root = r
        .parse()
        .map_err(|_| CliError::Parse(format!("bad root {r:?}")))?;
    Ok(RootedGraph::new(graph(Some(g))?, root)?)
}

/// `d=c,d=c,...`.
pub fn degree_counts(text: &str) -> Result<std::collections::BTreeMap<usize, usize>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let bad = || CliError::Parse(format!("expected DEGREE=COUNT, got {item:?}"));
            let (d, c) = item.split_once('=').ok_or_else(bad)?;
            Ok((
                d.trim().parse().map_err(|_| bad())?,
                c.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

/// Nonempty lines of a batch input, with any graph6 header dropped.
pub fn batch_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != ">>graph6<<")
        .collect()
}
