use super::config::SegmentConfig;
use super::{LatticePath, Step};

/// Draws the configuration with `PQ` points as `o`, `P'Q'` points as `x`,
/// other lattice points as `.`, and the path (if any) with `-`, `|` and its
/// vertices marked `*`, or `@`/`#` where it meets `PQ`/`P'Q'`. `O` and `D`
/// are labelled when not otherwise marked.
pub fn render_grid(cfg: &SegmentConfig, path: Option<&LatticePath>) -> String {
    let (pq, ppqq) = (cfg.pq(), cfg.ppqq());
    let d = cfg.d();
    let width = d.x.max(cfg.q_prime().x).max(cfg.q().x).max(0);
    let height = d.y.max(cfg.i).max(0);
    let (cols, rows) = (2 * width as usize + 1, 2 * height as usize + 1);
    let mut canvas = vec![vec![' '; cols]; rows];
    let cell = |x: i64, y: i64| ((2 * (height - y)) as usize, (2 * x) as usize);
    let inside = |x: i64, y: i64| (0..=width).contains(&x) && (0..=height).contains(&y);

    for y in 0..=height {
        for x in 0..=width {
            let p = super::LatticePoint::new(x, y);
            let (r, c) = cell(x, y);
            canvas[r][c] = if pq.contains(p) {
                'o'
            } else if ppqq.contains(p) {
                'x'
            } else if p == cfg.o() {
                'O'
            } else if p == d {
                'D'
            } else {
                '.'
            };
        }
    }
    if let Some(path) = path {
        let verts = path.vertices();
        for (v, s) in verts.iter().zip(&path.steps) {
            if !inside(v.x, v.y) {
                continue;
            }
            let (r, c) = cell(v.x, v.y);
            match s {
                Step::E if inside(v.x + 1, v.y) => canvas[r][c + 1] = '-',
                Step::N if inside(v.x, v.y + 1) => canvas[r - 1][c] = '|',
                _ => {}
            }
        }
        for v in verts.iter().filter(|v| inside(v.x, v.y)) {
            let (r, c) = cell(v.x, v.y);
            canvas[r][c] = if pq.contains(*v) {
                '@'
            } else if ppqq.contains(*v) {
                '#'
            } else {
                '*'
            };
        }
    }
    let mut out = String::new();
    for row in canvas {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_layout() {
        let cfg = SegmentConfig::new(6, 2, 2).unwrap();
        let path: LatticePath = "EENENEEE".parse().unwrap();
        let grid = render_grid(&cfg, Some(&path));
        let expected = "\
. . . *-@-*-*
      |
. . *-@ . x .
    |
*-*-@ . x . .
";
        assert_eq!(grid, expected);
        let bare = render_grid(&cfg, None);
        assert_eq!(bare.lines().last().unwrap(), "O . o . x . .");
        assert_eq!(bare.lines().next().unwrap(), ". . . . o . D");
    }
}
