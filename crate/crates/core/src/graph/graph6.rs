use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

/// Parses a graph6 string. Accepts the one-byte size prefix (n ≤ 62) and the
/// four-byte `~` form (n ≤ 258047).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::MalformedGraph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::MalformedGraph6(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(GraphError::MalformedGraph6(
                "eight-byte size form (n > 258047) is not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(GraphError::MalformedGraph6("truncated size field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.set(i, j, true);
            }
            k += 1;
        }
    }
    // Padding bits must be zero for a canonical encoding.
    if k % 6 != 0 {
        let last = body[k / 6] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(GraphError::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Encodes without the optional header.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 four-byte form caps n at 258047");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
