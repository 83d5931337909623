use super::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// ASCII picture of a planar embedding: one row per `y` from the top,
/// labels at occupied points and `.` elsewhere.
pub fn render_grid(e: &Embedding, g: &Graph) -> Result<String> {
    if e.k != 2 {
        return Err(Error::RenderDimension);
    }
    let side = e.side as usize;
    let mut cells = vec![vec![None; side]; side];
    for (v, p) in e.placement.iter().enumerate() {
        cells[p[1] as usize][p[0] as usize] = Some(g.label(v));
    }
    let width = g.labels().iter().map(String::len).max().unwrap_or(1).max(1);
    let mut out = String::new();
    for row in cells.iter().rev() {
        let line: Vec<String> = row
            .iter()
            .map(|c| format!("{:<width$}", c.unwrap_or(".")))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    Ok(out)
}
