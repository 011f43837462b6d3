//! Reader/writer for the printable-ASCII graph6 encoding of undirected
//! simple graphs, for interoperability with external enumeration tools.

use lap2_core::graph::Graph;

/// Encodes a graph; supports orders up to 258047.
pub fn encode(g: &Graph) -> Result<String, String> {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        let v = n as u32;
        out.push(63 + ((v >> 12) & 0x3f) as u8);
        out.push(63 + ((v >> 6) & 0x3f) as u8);
        out.push(63 + (v & 0x3f) as u8);
    } else {
        return Err(format!("order {n} too large for this graph6 writer"));
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push(63 + group);
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

/// Decodes one graph6 line.
pub fn decode(line: &str) -> Result<Graph, String> {
    let bytes: Vec<u8> = line.trim().bytes().collect();
    if bytes.is_empty() {
        return Err("empty graph6 line".to_string());
    }
    let (n, pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err("graph6 orders past 258047 are unsupported".to_string());
        }
        if bytes.len() < 4 {
            return Err("truncated graph6 size field".to_string());
        }
        let mut v: u32 = 0;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err("invalid graph6 byte in size field".to_string());
            }
            v = (v << 6) | (b - 63) as u32;
        }
        (v as usize, 4usize)
    } else {
        if !(63..=126).contains(&bytes[0]) {
            return Err("invalid graph6 byte in size field".to_string());
        }
        ((bytes[0] - 63) as usize, 1usize)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let needed = nbits.div_ceil(6);
    if bytes.len() < pos + needed {
        return Err("truncated graph6 edge data".to_string());
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err("invalid graph6 byte in edge data".to_string());
            }
            let group = byte - 63;
            let bit = (group >> (5 - (bit_index % 6))) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == nbits {
                break 'outer;
            }
        }
    }
    Graph::new(n, &edges).map_err(|e| format!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encoding() {
        // Five vertices, edges (0,2), (0,4), (1,3), (3,4).
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn roundtrip_samples() {
        let samples = [
            Graph::new(1, &[]).unwrap(),
            Graph::new(2, &[(0, 1)]).unwrap(),
            Graph::new(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap(),
            Graph::new(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap(),
        ];
        for g in samples {
            let enc = encode(&g).unwrap();
            assert_eq!(decode(&enc).unwrap(), g, "{enc}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(decode("").is_err());
        assert!(decode("\u{7}").is_err());
    }
}
