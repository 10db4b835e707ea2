use super::PhasePoint;

/// Phase-plane grid: `Z` power along the horizontal axis, `X` power along the
/// vertical axis, origin at the bottom left. Support cells print as `#`.
pub fn render_ascii(d: u32, support: &[PhasePoint]) -> String {
    let width = (d - 1).to_string().len();
    let mut out = String::new();
    for q in (0..d).rev() {
        out.push_str(&format!("{q:>width$} |"));
        for p in 0..d {
            let mark = if support.contains(&PhasePoint { p, q }) { '#' } else { '.' };
            out.push_str(&format!(" {mark:>width$}"));
        }
        out.push('\n');
    }
    out.push_str(&format!("{} +{}\n", " ".repeat(width), "-".repeat((width + 1) * d as usize)));
    out.push_str(&format!("{}  ", " ".repeat(width)));
    for p in 0..d {
        out.push_str(&format!(" {p:>width$}"));
    }
    out.push('\n');
    out
}

/// The same grid as a standalone SVG document.
pub fn render_svg(d: u32, support: &[PhasePoint]) -> String {
    const CELL: u32 = 32;
    const MARGIN: u32 = 28;
    let side = d * CELL + 2 * MARGIN;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{side}\" height=\"{side}\" viewBox=\"0 0 {side} {side}\">\n"
    );
    for q in 0..d {
        for p in 0..d {
            let x = MARGIN + p * CELL;
            let y = MARGIN + (d - 1 - q) * CELL;
            let fill = if support.contains(&PhasePoint { p, q }) { "#2b6cb0" } else { "#ffffff" };
            s.push_str(&format!(
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"#444444\"/>\n"
            ));
        }
    }
    for i in 0..d {
        let c = MARGIN + i * CELL + CELL / 2;
        let below = MARGIN + d * CELL + 18;
        let left = MARGIN - 10;
        let row = MARGIN + (d - 1 - i) * CELL + CELL / 2 + 5;
        s.push_str(&format!("  <text x=\"{c}\" y=\"{below}\" font-size=\"12\" text-anchor=\"middle\">{i}</text>\n"));
        s.push_str(&format!("  <text x=\"{left}\" y=\"{row}\" font-size=\"12\" text-anchor=\"middle\">{i}</text>\n"));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_marks_support() {
        let g = render_ascii(3, &[PhasePoint { p: 1, q: 0 }]);
        let lines: Vec<&str> = g.lines().collect();
        assert_eq!(lines[0], "2 | . . .");
        assert_eq!(lines[2], "0 | . # .");
    }

    #[test]
    fn svg_has_one_filled_cell_per_point() {
        let s = render_svg(5, &[PhasePoint { p: 0, q: 2 }, PhasePoint { p: 3, q: 3 }]);
        assert_eq!(s.matches("#2b6cb0").count(), 2);
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
    }
}
