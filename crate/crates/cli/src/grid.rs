//! ASCII rendering of an E₁ page: `q` runs up the page, `p` increases to
//! the left, and the resolved sheaf `F` occupies the rightmost column.

use std::collections::BTreeMap;

use serde_json::Value;

pub fn render(page: &Value) -> String {
    let rows = page["rows"].as_u64().unwrap_or(0) as usize;
    let columns = page["columns"].as_u64().unwrap_or(0) as usize;
    let cells: BTreeMap<(usize, usize), String> = page["entries"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|e| {
            let p = e["column"].as_u64().unwrap_or(0) as usize;
            let q = e["row"].as_u64().unwrap_or(0) as usize;
            ((p, q), e["dim"].to_string())
        })
        .collect();
    let width = cells
        .values()
        .map(String::len)
        .chain((0..columns).map(|p| format!("p={p}").len()))
        .max()
        .unwrap_or(1);
    let label = rows.saturating_sub(1).to_string().len().max(1);

    let mut out = String::new();
    out.push_str(&format!("{:>label$} |", "q"));
    for p in (0..columns).rev() {
        out.push_str(&format!(" {:>width$}", format!("p={p}")));
    }
    out.push_str(" | F\n");
    for q in (0..rows).rev() {
        out.push_str(&format!("{q:>label$} |"));
        for p in (0..columns).rev() {
            let cell = cells.get(&(p, q)).map(String::as_str).unwrap_or(".");
            out.push_str(&format!(" {cell:>width$}"));
        }
        out.push_str(if q == 0 { " | H^0(F)\n" } else { " |\n" });
    }
    out.push_str("E1^{p,q} = H^q(T_p) contributes to H^{q-p}(F); d_r: (p,q) -> (p-r, q-r+1)\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn columns_run_right_to_left() {
        let page = json!({
            "rows": 3,
            "columns": 3,
            "entries": [
                {"column": 0, "row": 0, "dim": 120},
                {"column": 2, "row": 2, "dim": 1}
            ]
        });
        let text = render(&page);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "q | p=2 p=1 p=0 | F");
        assert_eq!(lines[1], "2 |   1   .   . |");
        assert_eq!(lines[3], "0 |   .   . 120 | H^0(F)");
    }

    #[test]
    fn empty_page() {
        let text = render(&json!({"rows": 2, "columns": 1, "entries": []}));
        assert!(text.starts_with("q | p=0 | F\n1 |   . |\n0 |   . | H^0(F)\n"));
    }
}
