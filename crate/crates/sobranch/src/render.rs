//! Plain-text tables and symmetry breaking diagrams.

use sobranch_core::branching::Diagram;

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (k, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if k > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if k + 1 < cells.len() {
                s.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(headers.to_vec());
    out.push_str(&line(
        widths
            .iter()
            .map(|&w| &"--------------------------------"[..w.min(32)])
            .collect(),
    ));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// Key/value pairs, one per line.
pub fn record(pairs: &[(&str, String)]) -> String {
    let width = pairs
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

const COLUMN: usize = 8;

/// Two rows of nodes with `|` for `Π_i → π_i` and `/` for `Π_i → π_{i-1}`,
/// followed by the parameters of every node.
pub fn diagram(d: &Diagram) -> String {
    let upper_group = d
        .upper
        .first()
        .map(|e| e.group().to_string())
        .unwrap_or_default();
    let lower_group = d
        .lower
        .first()
        .map(|e| e.group().to_string())
        .unwrap_or_default();
    let margin = upper_group.len().max(lower_group.len()) + 2;
    let width = margin + COLUMN * (d.upper.len().max(d.lower.len()) + 1);

    let mut nodes_up = format!("{upper_group:<margin$}");
    for i in 0..d.upper.len() {
        nodes_up.push_str(&format!("{:<COLUMN$}", format!("Pi_{i}")));
    }
    let mut arrows = vec![' '; width];
    for a in &d.arrows {
        let col = margin + COLUMN * a.from_height as usize;
        if a.to_height == a.from_height {
            arrows[col + 1] = '|';
        } else {
            arrows[col - 1] = '/';
        }
    }
    let arrows: String = arrows.into_iter().collect();
    let mut nodes_down = format!("{lower_group:<margin$}");
    for i in 0..d.lower.len() {
        nodes_down.push_str(&format!("{:<COLUMN$}", format!("pi_{i}")));
    }

    let mut out = String::new();
    for line in [nodes_up, arrows, nodes_down] {
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push('\n');
    for (i, e) in d.upper.iter().enumerate() {
        out.push_str(&format!("Pi_{i} = {e}\n"));
    }
    for (i, e) in d.lower.iter().enumerate() {
        out.push_str(&format!("pi_{i} = {e}\n"));
    }
    out
}
