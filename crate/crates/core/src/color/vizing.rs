use super::EdgeColoring;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Partial coloring with `at[v][c]` = the neighbour joined to `v` by an edge
/// of color `c`, or `NONE`.
struct State<'a> {
    g: &'a Graph,
    at: Vec<Vec<usize>>,
}

impl State<'_> {
    fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.at[u].iter().position(|&w| w == v)
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c] == NONE
    }

    fn smallest_free(&self, v: usize) -> usize {
        self.at[v]
            .iter()
            .position(|&w| w == NONE)
            .expect("Δ+1 colors leave one free")
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        self.at[u][c] = v;
        self.at[v][c] = u;
    }

    fn unset(&mut self, u: usize, v: usize, c: usize) {
        self.at[u][c] = NONE;
        self.at[v][c] = NONE;
    }

    /// Maximal fan at `u` starting with the uncolored edge `uv`: each next
    /// edge's color is free at the previous fan vertex, taking the smallest
    /// such color each time.
    fn fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().expect("nonempty");
            let next = (0..self.at[u].len())
                .filter(|&c| self.is_free(last, c))
                .map(|c| self.at[u][c])
                .find(|&w| w != NONE && !fan.contains(&w));
            match next {
                Some(w) => fan.push(w),
                None => return fan,
            }
        }
    }

    /// Swap colors `c` and `d` along the alternating path that leaves `u`
    /// on color `d`.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut x, mut col) = (u, d);
        while self.at[x][col] != NONE {
            let y = self.at[x][col];
            path.push((x, y, col));
            x = y;
            col = if col == d { c } else { d };
        }
        for &(a, b, col) in &path {
            self.unset(a, b, col);
        }
        for &(a, b, col) in &path {
            self.set(a, b, if col == d { c } else { d });
        }
    }

    fn is_fan_prefix(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| match self.color_of(u, w[1]) {
            Some(col) => self.is_free(w[0], col),
            None => false,
        })
    }

    fn insert(&mut self, u: usize, v: usize) {
        let fan = self.fan(u, v);
        let c = self.smallest_free(u);
        let d = self.smallest_free(*fan.last().expect("nonempty"));
        if c != d {
            self.invert_path(u, c, d);
        }
        let i = (0..fan.len())
            .find(|&i| self.is_free(fan[i], d) && self.is_fan_prefix(u, &fan[..=i]))
            .expect("some fan prefix ends at a vertex missing d");
        // rotate the prefix: each edge takes the color of the next one
        for j in 0..i {
            let next = self.color_of(u, fan[j + 1]).expect("fan edges are colored");
            self.unset(u, fan[j + 1], next);
            self.set(u, fan[j], next);
        }
        self.set(u, fan[i], d);
    }
}

/// Proper edge coloring with at most Δ+1 colors, inserting edges in
/// ascending order and repairing with fans and alternating paths.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let palette = g.max_degree() + 1;
    let mut st = State {
        g,
        at: vec![vec![NONE; palette]; g.n()],
    };
    for &(u, v) in g.edges() {
        st.insert(u, v);
    }
    let colors: Vec<usize> =
        st.g.edges()
            .iter()
            .map(|&(u, v)| st.color_of(u, v).expect("every edge colored") + 1)
            .collect();
    EdgeColoring::from_colors(colors)
}
