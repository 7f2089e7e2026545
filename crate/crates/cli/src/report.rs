//! Aligned-column text tables.

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<const K: usize>(header: [&str; K]) -> Self {
        Table { header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn with_header(header: Vec<String>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn row(&mut self, cells: impl IntoIterator<Item = String>) {
        self.rows.push(cells.into_iter().collect());
    }

    /// Left-aligned columns separated by two spaces; no trailing whitespace.
    pub fn render(&self) -> String {
        let cols = self.header.len();
        let mut width = vec![0; cols];
        for r in std::iter::once(&self.header).chain(&self.rows) {
            for (k, c) in r.iter().enumerate().take(cols) {
                width[k] = width[k].max(c.chars().count());
            }
        }
        let mut out = String::new();
        for r in std::iter::once(&self.header).chain(&self.rows) {
            let mut line = String::new();
            for (k, c) in r.iter().enumerate().take(cols) {
                if k + 1 == cols {
                    line.push_str(c);
                } else {
                    line.push_str(&format!("{:w$}  ", c, w = width[k]));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_line_up() {
        let mut t = Table::new(["id", "count"]);
        t.row(["naoki-bound".to_string(), "142".to_string()]);
        t.row(["x".to_string(), "1".to_string()]);
        assert_eq!(t.render(), "id           count\nnaoki-bound  142\nx            1\n");
    }
}
