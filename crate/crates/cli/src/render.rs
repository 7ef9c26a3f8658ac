//! Text and CSV renderings of a [`Document`].

use std::fmt::Write as _;

use pslet_core::tables::format_fixed;

use crate::report::{round_significant, Document, Num, PointReport, TableReport, SIGNIFICANT_DIGITS};
use crate::CliError;

const TABLE_BLOCK: usize = 4;

/// Shortest decimal that survives the fifteen-digit rounding.
pub fn num(x: Num) -> String {
    let r = round_significant(x.0, SIGNIFICANT_DIGITS);
    if r != 0.0 && !(1e-4..1e15).contains(&r.abs()) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

fn opt(x: Option<Num>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn text(doc: &Document) -> String {
    let mut s = String::new();
    if let Some(points) = &doc.points {
        if doc.command == "sweep" {
            points_table(&mut s, points);
        } else {
            for p in points {
                point_text(&mut s, p);
            }
        }
    }
    if let Some(t) = &doc.table {
        if t.id == 5 {
            table_transposed(&mut s, t);
        } else {
            table_text(&mut s, t);
        }
    }
    s
}

fn point_text(s: &mut String, p: &PointReport) {
    let mut line = |key: &str, value: String| {
        let _ = writeln!(s, "{key:<14}{value}");
    };
    line("alpha", num(p.alpha));
    line("l", p.l.to_string());
    if let Some(c) = &p.context {
        line("q0", num(c.q0));
        line("omega", num(c.omega));
        line("beta", num(c.beta));
        line("lbar", num(c.lbar));
    }
    if let Some(e) = &p.energy {
        line("energy", format!("K={} {}", e.terms, num(e.value)));
        if let Some(d) = e.oracle_defect {
            line("energy defect", num(d));
        }
    }
    if let Some(pd) = &p.pade {
        line("pade", format!("[{},{}] {}", pd.n, pd.m, num(pd.value)));
        line("condition", num(pd.condition));
        if let Some(d) = pd.oracle_defect {
            line("pade defect", num(d));
        }
    }
    if let Some(o) = &p.oracle {
        line("oracle", num(o.energy));
        line("nodes", o.nodes.to_string());
        line("q_max", num(o.q_max));
    }
}

const POINT_HEADER: [&str; 14] = [
    "alpha", "l", "q0", "omega", "beta", "lbar", "terms", "energy", "pade_n", "pade_m", "pade", "oracle",
    "energy_defect", "pade_defect",
];

fn point_row(p: &PointReport) -> Vec<String> {
    let c = p.context.as_ref();
    let e = p.energy.as_ref();
    let pd = p.pade.as_ref();
    vec![
        num(p.alpha),
        p.l.to_string(),
        opt(c.map(|c| c.q0)),
        opt(c.map(|c| c.omega)),
        opt(c.map(|c| c.beta)),
        opt(c.map(|c| c.lbar)),
        e.map(|e| e.terms.to_string()).unwrap_or_default(),
        opt(e.map(|e| e.value)),
        pd.map(|p| p.n.to_string()).unwrap_or_default(),
        pd.map(|p| p.m.to_string()).unwrap_or_default(),
        opt(pd.map(|p| p.value)),
        opt(p.oracle.as_ref().map(|o| o.energy)),
        opt(e.and_then(|e| e.oracle_defect)),
        opt(pd.and_then(|p| p.oracle_defect)),
    ]
}

fn points_table(s: &mut String, points: &[PointReport]) {
    // only the columns that carry a value somewhere
    let rows: Vec<Vec<String>> = points.iter().map(point_row).collect();
    let keep: Vec<usize> = (0..POINT_HEADER.len())
        .filter(|&j| j < 2 || rows.iter().any(|r| !r[j].is_empty()))
        .filter(|&j| !matches!(POINT_HEADER[j], "q0" | "omega" | "beta" | "lbar"))
        .collect();
    let width = |j: usize| rows.iter().map(|r| r[j].len()).chain([POINT_HEADER[j].len()]).max().unwrap_or(0);
    let widths: Vec<usize> = keep.iter().map(|&j| width(j)).collect();
    let header: Vec<String> = keep.iter().zip(&widths).map(|(&j, w)| format!("{:>w$}", POINT_HEADER[j])).collect();
    let _ = writeln!(s, "{}", header.join("  "));
    for r in &rows {
        let cells: Vec<String> = keep.iter().zip(&widths).map(|(&j, w)| format!("{:>w$}", r[j])).collect();
        let _ = writeln!(s, "{}", cells.join("  "));
    }
}

fn table_text(s: &mut String, t: &TableReport) {
    let _ = writeln!(s, "Table {}: {}", t.id, t.title);
    let has_oracle = t.columns.iter().any(|c| c.oracle.is_some());
    let label_w = t.row_labels.iter().map(String::len).chain([5]).max().unwrap_or(5);
    for block in t.columns.chunks(TABLE_BLOCK) {
        let mut cells: Vec<Vec<String>> = block
            .iter()
            .map(|c| c.values.iter().zip(&c.decimals).map(|(v, &d)| format_fixed(v.0, d)).collect())
            .collect();
        if has_oracle {
            for (col, cells) in block.iter().zip(cells.iter_mut()) {
                let dni = match (col.oracle, col.oracle_decimals) {
                    (Some(o), Some(d)) => format_fixed(o.0, d),
                    _ => String::new(),
                };
                cells.push(dni);
            }
        }
        let widths: Vec<usize> = block
            .iter()
            .zip(&cells)
            .map(|(c, cs)| cs.iter().map(String::len).chain([c.label.len()]).max().unwrap_or(0))
            .collect();
        let _ = writeln!(s);
        let mut head = format!("{:<label_w$}", "alpha");
        if block.iter().any(|c| c.label.starts_with("l=")) {
            head = format!("{:<label_w$}", "");
        }
        for (c, w) in block.iter().zip(&widths) {
            let _ = write!(head, "  {:>w$}", c.label);
        }
        let _ = writeln!(s, "{}", head.trim_end());
        let labels = t.row_labels.iter().map(String::as_str).chain(has_oracle.then_some("DNI"));
        for (i, label) in labels.enumerate() {
            let mut line = format!("{label:<label_w$}");
            for (cs, w) in cells.iter().zip(&widths) {
                let _ = write!(line, "  {:>w$}", cs[i]);
            }
            let _ = writeln!(s, "{}", line.trim_end());
        }
    }
}

fn table_transposed(s: &mut String, t: &TableReport) {
    let _ = writeln!(s, "Table {}: {}\n", t.id, t.title);
    let mut header: Vec<String> = vec!["alpha".into()];
    header.extend(t.row_labels.iter().cloned());
    header.push("DNI".into());
    let rows: Vec<Vec<String>> = t
        .columns
        .iter()
        .map(|c| {
            let mut r = vec![c.label.clone()];
            r.extend(c.values.iter().zip(&c.decimals).map(|(v, &d)| format_fixed(v.0, d)));
            r.push(match (c.oracle, c.oracle_decimals) {
                (Some(o), Some(d)) => format_fixed(o.0, d),
                _ => String::new(),
            });
            r
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|j| rows.iter().map(|r| r[j].len()).chain([header[j].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| {
        let mut out = format!("{:<w$}", cells[0], w = widths[0]);
        for (c, w) in cells.iter().zip(&widths).skip(1) {
            let _ = write!(out, "  {c:>w$}");
        }
        out.trim_end().to_string()
    };
    let _ = writeln!(s, "{}", line(&header));
    for r in &rows {
        let _ = writeln!(s, "{}", line(r));
    }
}

pub fn csv(doc: &Document) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(points) = &doc.points {
        w.write_record(POINT_HEADER)?;
        for p in points {
            w.write_record(point_row(p))?;
        }
    }
    if let Some(t) = &doc.table {
        w.write_record(["table", "column", "alpha", "l", "row", "value"])?;
        let id = t.id.to_string();
        for c in &t.columns {
            let (alpha, l) = (num(c.alpha), c.l.to_string());
            for (label, v) in t.row_labels.iter().zip(&c.values) {
                w.write_record([id.as_str(), &c.label, &alpha, &l, label, &num(*v)])?;
            }
            if let Some(o) = c.oracle {
                w.write_record([id.as_str(), &c.label, &alpha, &l, "DNI", &num(o)])?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io {
        path: "<buffer>".into(),
        source: e.into_error(),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
