//! Plain-text rendering: two-column degree tables and the E² page drawn
//! as a grid with `q` ascending upward and `p` to the right.

use crate::ahss::Page;
use crate::kfield::GradedAb;

/// Two-column table `n | <value>` for a graded group.
pub fn graded_table(label: &str, graded: &GradedAb) -> String {
    let rows: Vec<(String, String)> = graded
        .groups()
        .iter()
        .enumerate()
        .map(|(n, g)| (n.to_string(), g.to_string()))
        .collect();
    two_column_table(("n", label), &rows)
}

pub fn two_column_table(header: (&str, &str), rows: &[(String, String)]) -> String {
    let left_width = rows
        .iter()
        .map(|(l, _)| l.chars().count())
        .chain([header.0.chars().count()])
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    out.push_str(&format!("{:>left_width$} | {}\n", header.0, header.1));
    let right_width = rows
        .iter()
        .map(|(_, r)| r.chars().count())
        .chain([header.1.chars().count()])
        .max()
        .unwrap_or(1);
    out.push_str(&format!(
        "{}-+-{}\n",
        "-".repeat(left_width),
        "-".repeat(right_width)
    ));
    for (l, r) in rows {
        out.push_str(&format!("{l:>left_width$} | {r}\n"));
    }
    out
}

/// The page as a text grid: one row per `q` from `Qmax` down to 0, one
/// column per `p`, with the axis labels along the bottom.
pub fn e2_diagram(page: &Page) -> String {
    let cells: Vec<Vec<String>> = (0..=page.q_max())
        .map(|q| {
            (0..=page.p_max())
                .map(|p| page.entry(p as i64, q as i64).to_string())
                .collect()
        })
        .collect();
    let mut widths: Vec<usize> = (0..=page.p_max())
        .map(|p| {
            cells
                .iter()
                .map(|row| row[p].chars().count())
                .max()
                .unwrap_or(1)
        })
        .collect();
    for (p, w) in widths.iter_mut().enumerate() {
        *w = (*w).max(p.to_string().len());
    }
    let q_width = page.q_max().to_string().len().max(1);

    let mut out = String::new();
    for q in (0..=page.q_max()).rev() {
        out.push_str(&format!("{q:>q_width$} |"));
        for p in 0..=page.p_max() {
            out.push_str(&format!(" {:<width$}", cells[q][p], width = widths[p]));
        }
        out.push('\n');
    }
    let total: usize = widths.iter().map(|w| w + 1).sum();
    out.push_str(&format!("{}-+{}\n", "-".repeat(q_width), "-".repeat(total)));
    out.push_str(&" ".repeat(q_width + 2));
    for (p, width) in widths.iter().enumerate() {
        out.push_str(&format!("{p:<width$} "));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::ExtAb;
    use crate::ahss::build_e2;
    use crate::homology::GroupDescriptor;
    use crate::kfield::FieldDescriptor;

    #[test]
    fn table_layout() {
        let graded = GradedAb::from_groups(vec![ExtAb::free(1), ExtAb::rational(1)]);
        let table = graded_table("K_n", &graded);
        assert!(table.contains("0 | Z"));
        assert!(table.contains("1 | Q"));
    }

    #[test]
    fn diagram_has_axes_and_entries() {
        let field = FieldDescriptor::from_order(2).unwrap();
        let page = build_e2(&GroupDescriptor::rationals(), &field, 3);
        let diagram = e2_diagram(&page);
        let lines: Vec<&str> = diagram.lines().collect();
        // rows q = 3..0, separator, axis
        assert_eq!(lines.len(), 6);
        assert!(lines[0].starts_with("3 | Z/3"));
        assert!(lines[3].contains("Z"));
        assert!(lines[3].contains("Q"));
    }
}
