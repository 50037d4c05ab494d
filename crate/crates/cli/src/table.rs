//! Plain-text tables with left-aligned columns.

pub fn render(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width = vec![0; cols];
    for r in std::iter::once(header).chain(rows.iter().map(|r| r.as_slice())) {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |r: &[String]| {
        let cells: Vec<String> = r.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", cells.join("  ").trim_end())
    };
    let mut s = line(header);
    for r in rows {
        s.push_str(&line(r));
    }
    s
}

/// Square matrix with row and column labels.
pub fn matrix(corner: &str, labels: &[String], values: &[Vec<usize>]) -> String {
    let header: Vec<String> = std::iter::once(corner.to_string()).chain(labels.iter().cloned()).collect();
    let rows: Vec<Vec<String>> = labels
        .iter()
        .zip(values)
        .map(|(l, row)| std::iter::once(l.clone()).chain(row.iter().map(|v| v.to_string())).collect())
        .collect();
    render(&header, &rows)
}
