//! Graph interchange: DIMACS `.col` and a small JSON object format.
//!
//! DIMACS: comment lines starting with `c`, one `p edge <n> <m>` line, then
//! `e <u> <v>` lines with 1-based endpoints. Duplicate edges are tolerated;
//! everything else malformed is reported with its line number.
//!
//! JSON: `{"n": <int>, "edges": [[u, v], ...]}` with 0-based endpoints.

use colorbound::Graph;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Dimacs { line: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
}

fn bad(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Dimacs {
        line,
        msg: msg.into(),
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph, FormatError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tokens = raw.split_ascii_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if order.is_some() {
                    return Err(bad(line, "second p-line"));
                }
                if tokens.next() != Some("edge") {
                    return Err(bad(line, "expected `p edge <n> <m>`"));
                }
                let n: usize = next_number(&mut tokens, line, "vertex count")?;
                let _declared_m: usize = next_number(&mut tokens, line, "edge count")?;
                order = Some(n);
            }
            Some("e") => {
                let n = order.ok_or_else(|| bad(line, "e-line before the p-line"))?;
                let u: usize = next_number(&mut tokens, line, "endpoint")?;
                let v: usize = next_number(&mut tokens, line, "endpoint")?;
                for x in [u, v] {
                    if x < 1 || x > n {
                        return Err(bad(line, format!("endpoint {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(bad(line, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(bad(line, format!("unknown line type `{other}`")));
            }
        }
    }
    let n = order.ok_or_else(|| bad(text.lines().count() + 1, "missing p-line"))?;
    Ok(Graph::from_edge_list(n, &edges).expect("endpoints validated per line"))
}

fn next_number(
    tokens: &mut std::str::SplitAsciiWhitespace<'_>,
    line: usize,
    what: &str,
) -> Result<usize, FormatError> {
    let tok = tokens
        .next()
        .ok_or_else(|| bad(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| bad(line, format!("bad {what} `{tok}`")))
}

pub fn render_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_json_graph(text: &str) -> Result<Graph, FormatError> {
    let value: Value = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let n = value
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| FormatError::Json("missing integer field `n`".into()))? as usize;
    let list = value
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::Json("missing array field `edges`".into()))?;
    let mut edges = Vec::with_capacity(list.len());
    for (i, pair) in list.iter().enumerate() {
        let ends: Option<(u64, u64)> = pair.as_array().and_then(|p| {
            if p.len() == 2 {
                Some((p[0].as_u64()?, p[1].as_u64()?))
            } else {
                None
            }
        });
        let (u, v) = ends.ok_or_else(|| FormatError::Json(format!("edges[{i}] is not a pair")))?;
        edges.push((u as usize, v as usize));
    }
    Graph::from_edge_list(n, &edges).map_err(|e| FormatError::Json(e.to_string()))
}

pub fn render_json_graph(g: &Graph) -> String {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    serde_json::json!({ "n": g.n(), "edges": edges }).to_string()
}
