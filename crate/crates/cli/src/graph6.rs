//! Reader for the graph6 format (N(n) header plus the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte). Accepts
//! a single graph, optionally preceded by the `>>graph6<<` marker; writer
//! intentionally not provided.

use splice_indices::Graph;

use crate::error::CliError;

const HEADER: &str = ">>graph6<<";

pub fn parse(text: &str) -> Result<Graph, CliError> {
    let mut body = text.trim_start();
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest.trim_start();
    }
    let mut lines = body.lines().map(str::trim).filter(|line| !line.is_empty());
    let line = lines
        .next()
        .ok_or_else(|| CliError::Parse("graph6 input contains no graph".into()))?;
    if lines.next().is_some() {
        return Err(CliError::Parse(
            "graph6 input contains more than one graph; expected exactly one".into(),
        ));
    }

    let values: Vec<u64> = line
        .bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(u64::from(b) - 63)
            } else {
                Err(CliError::Parse(format!("invalid graph6 byte 0x{b:02x}")))
            }
        })
        .collect::<Result<_, _>>()?;

    let (n, data) = decode_order(&values)?;
    let bit_count = n * (n.saturating_sub(1)) / 2;
    let needed = bit_count.div_ceil(6);
    if data.len() != needed {
        return Err(CliError::Parse(format!(
            "graph6 data length mismatch: {n} vertices need {needed} data bytes, found {}",
            data.len()
        )));
    }

    let mut edges = Vec::new();
    let mut position = 0usize;
    for v in 1..n {
        for u in 0..v {
            let bit = (data[position / 6] >> (5 - position % 6)) & 1;
            if bit != 0 {
                edges.push((u, v));
            }
            position += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

fn decode_order(values: &[u64]) -> Result<(usize, &[u64]), CliError> {
    match values {
        [first, rest @ ..] if *first < 63 => Ok((*first as usize, rest)),
        [63, second, rest @ ..] if *second < 63 => {
            if rest.len() < 2 {
                return Err(CliError::Parse("truncated graph6 vertex count".into()));
            }
            let n = (second << 12) | (rest[0] << 6) | rest[1];
            Ok((n as usize, &rest[2..]))
        }
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(CliError::Parse("truncated graph6 vertex count".into()));
            }
            let n = rest[..6].iter().fold(0u64, |acc, &v| (acc << 6) | v);
            Ok((n as usize, &rest[6..]))
        }
        _ => Err(CliError::Parse("empty graph6 line".into())),
    }
}
