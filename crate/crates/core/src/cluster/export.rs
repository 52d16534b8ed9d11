use super::{ClusterAssignment, Dendrogram};
use crate::svg::{self, Anchor, Svg};

/// Newick text with ultrametric branch lengths: a node at merge height `h`
/// sits at depth `h / 2`, so two leaves joined at 0.4 give `(A:0.2,B:0.2);`.
pub fn export_newick(d: &Dendrogram) -> String {
    let mut out = String::new();
    write_node(d, d.root(), &mut out);
    out.push(';');
    out
}

fn write_node(d: &Dendrogram, node: usize, out: &mut String) {
    match d.children(node) {
        None => out.push_str(&newick_label(&d.labels()[node])),
        Some((l, r)) => {
            let h = d.height(node);
            out.push('(');
            write_node(d, l, out);
            out.push(':');
            out.push_str(&branch_length((h - d.height(l)) / 2.0));
            out.push(',');
            write_node(d, r, out);
            out.push(':');
            out.push_str(&branch_length((h - d.height(r)) / 2.0));
            out.push(')');
        }
    }
}

fn branch_length(v: f64) -> String {
    let s = format!("{:.6}", v.max(0.0));
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn newick_label(label: &str) -> String {
    let plain = label
        .chars()
        .all(|c| !c.is_whitespace() && !"()[]':;,".contains(c));
    if plain {
        label.to_string()
    } else {
        format!("'{}'", label.replace('\'', "''"))
    }
}

const ROW: f64 = 16.0;
const MARGIN: f64 = 20.0;
const TREE_WIDTH: f64 = 480.0;

/// Horizontal dendrogram: root on the left, leaves on the right, merge
/// height on the bottom axis. With an assignment, leaf labels and
/// single-cluster subtrees are coloured by cluster.
pub fn export_svg(d: &Dendrogram, assignment: Option<&ClusterAssignment>) -> String {
    let n = d.len();
    let label_width = d
        .labels()
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(0) as f64
        * 7.0
        + 10.0;
    let width = MARGIN * 2.0 + TREE_WIDTH + label_width;
    let height = MARGIN * 2.0 + ROW * n as f64 + 30.0;
    let max_h = d.height(d.root());
    let scale = if max_h > 0.0 { TREE_WIDTH / max_h } else { 0.0 };
    let x_of = |h: f64| MARGIN + TREE_WIDTH - h * scale;

    let order = d.leaf_order();
    let mut y = vec![0.0; n + d.merges().len()];
    for (row, &leaf) in order.iter().enumerate() {
        y[leaf] = MARGIN + ROW * (row as f64 + 0.5);
    }
    // cluster of each node, or None when its leaves span several clusters
    let mut colour: Vec<Option<usize>> = vec![None; n + d.merges().len()];
    if let Some(a) = assignment {
        for (leaf, c) in a.clusters().iter().enumerate().take(n) {
            colour[leaf] = Some(*c);
        }
    }
    for (t, m) in d.merges().iter().enumerate() {
        let node = n + t;
        y[node] = (y[m.left] + y[m.right]) / 2.0;
        colour[node] = match (colour[m.left], colour[m.right]) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
    }
    let stroke = |node: usize| colour[node].map_or("black", |c| svg::palette(c - 1));

    let mut doc = Svg::new(width, height);
    for (t, m) in d.merges().iter().enumerate() {
        let node = n + t;
        let x = x_of(m.height);
        doc.line(x, y[m.left], x, y[m.right], stroke(node), 1.5);
        for child in [m.left, m.right] {
            doc.line(
                x,
                y[child],
                x_of(d.height(child)),
                y[child],
                stroke(child),
                1.5,
            );
        }
    }
    for &leaf in &order {
        let text_x = MARGIN + TREE_WIDTH + 6.0;
        let label = &d.labels()[leaf];
        match colour[leaf] {
            Some(c) if assignment.is_some() => doc.text_colored(
                text_x,
                y[leaf] + 4.0,
                label,
                11.0,
                Anchor::Start,
                svg::palette(c - 1),
            ),
            _ => doc.text(text_x, y[leaf] + 4.0, label, 11.0, Anchor::Start),
        }
    }
    let axis_y = MARGIN + ROW * n as f64 + 6.0;
    doc.line(x_of(max_h), axis_y, x_of(0.0), axis_y, "black", 1.0);
    for t in svg::ticks(0.0, max_h, 5) {
        let x = x_of(t);
        doc.line(x, axis_y, x, axis_y + 4.0, "black", 1.0);
        doc.text(x, axis_y + 16.0, &svg::tick_label(t), 10.0, Anchor::Middle);
    }
    doc.finish()
}
