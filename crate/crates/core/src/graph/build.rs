//! Constructions: named families, products, powers, subdivisions, incidence
//! graphs, and the bespoke graphs used by the claim registry.

use super::{Graph, IncidenceRole, SubdivisionVertex, VertexTags};
use crate::error::{Error, Result};

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("path requires n >= 1"));
    }
    Graph::from_edges(
        n,
        &(0..n.saturating_sub(1))
            .map(|i| (i, i + 1))
            .collect::<Vec<_>>(),
    )
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("cycle requires n >= 3"));
    }
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("complete requires n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Star on n vertices: center 0 joined to 1..n-1.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("star requires n >= 1"));
    }
    Graph::from_edges(n, &(1..n).map(|leaf| (0, leaf)).collect::<Vec<_>>())
}

/// d-dimensional hypercube with 0/1 coordinate annotations; coordinate i of
/// vertex v is bit d-1-i, matching the product constructors' mixed-radix
/// vertex numbering.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::invalid("hypercube requires d >= 1"));
    }
    if d > 20 {
        return Err(Error::invalid("hypercube dimension too large"));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for i in 0..d {
            let w = v ^ (1 << i);
            if w > v {
                edges.push((v, w));
            }
        }
    }
    let coords = (0..n)
        .map(|v| (0..d).map(|i| (v >> (d - 1 - i)) & 1).collect())
        .collect();
    Graph::from_edges(n, &edges)?.with_tags(VertexTags::Coords {
        factor_sizes: vec![2; d],
        coords,
    })
}

/// Petersen graph as the Kneser graph of 2-subsets of a 5-set.
pub fn petersen() -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
        .collect();
    let mut edges = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            if i != k && i != l && j != k && j != l {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(10, &edges)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ProductKind {
    Cartesian,
    Strong,
}

fn product_many(factors: &[&Graph], kind: ProductKind) -> Result<Graph> {
    if factors.is_empty() {
        return Err(Error::invalid("product requires at least one factor"));
    }
    if factors.iter().any(|g| g.order() == 0) {
        return Err(Error::invalid("product factors must be nonempty"));
    }
    let sizes: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let n: usize = sizes.iter().product();
    let d = factors.len();

    let coord_of = |mut v: usize| -> Vec<usize> {
        let mut c = vec![0; d];
        for i in (0..d).rev() {
            c[i] = v % sizes[i];
            v /= sizes[i];
        }
        c
    };
    let index_of =
        |c: &[usize]| -> usize { c.iter().zip(&sizes).fold(0, |acc, (&x, &s)| acc * s + x) };

    let mut edges = Vec::new();
    for v in 0..n {
        let cv = coord_of(v);
        match kind {
            ProductKind::Cartesian => {
                // Differ in exactly one coordinate and be adjacent there.
                for i in 0..d {
                    let mut cw = cv.clone();
                    for &x in factors[i].neighbors(cv[i]) {
                        cw[i] = x as usize;
                        let w = index_of(&cw);
                        if w > v {
                            edges.push((v, w));
                        }
                    }
                }
            }
            ProductKind::Strong => {
                // Adjacent-or-equal in each coordinate, not equal overall.
                let mut choices: Vec<Vec<usize>> = Vec::with_capacity(d);
                for i in 0..d {
                    let mut opts: Vec<usize> = factors[i]
                        .neighbors(cv[i])
                        .iter()
                        .map(|&x| x as usize)
                        .collect();
                    opts.push(cv[i]);
                    choices.push(opts);
                }
                let mut stack = vec![0usize; d];
                'outer: loop {
                    let cw: Vec<usize> = (0..d).map(|i| choices[i][stack[i]]).collect();
                    let w = index_of(&cw);
                    if w > v {
                        edges.push((v, w));
                    }
                    for i in (0..d).rev() {
                        stack[i] += 1;
                        if stack[i] < choices[i].len() {
                            continue 'outer;
                        }
                        stack[i] = 0;
                        if i == 0 {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    let coords = (0..n).map(coord_of).collect();
    Graph::from_edges(n, &edges)?.with_tags(VertexTags::Coords {
        factor_sizes: sizes,
        coords,
    })
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product_many(&[g, h], ProductKind::Cartesian)
}

pub fn cartesian_products(factors: &[&Graph]) -> Result<Graph> {
    product_many(factors, ProductKind::Cartesian)
}

pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product_many(&[g, h], ProductKind::Strong)
}

pub fn strong_products(factors: &[&Graph]) -> Result<Graph> {
    product_many(factors, ProductKind::Strong)
}

/// s-th power: same vertex set, edges between distinct vertices at distance <= s.
/// Annotations carry over.
pub fn power(g: &Graph, s: usize) -> Result<Graph> {
    if s < 1 {
        return Err(Error::invalid("power requires s >= 1"));
    }
    let n = g.order();
    let mut edges = Vec::new();
    for u in 0..n {
        let dist = g.bfs(u);
        for v in u + 1..n {
            if dist[v] != super::UNREACHABLE && dist[v] as usize <= s {
                edges.push((u, v));
            }
        }
    }
    let mut out = Graph::from_edges(n, &edges)?;
    if let Some(tags) = g.tags() {
        out = out.with_tags(tags.clone())?;
    }
    Ok(out)
}

/// Subdivides each edge s-1 times. Branch vertices keep their indices;
/// subdivision vertices are appended per edge in sorted edge order.
pub fn subdivide(g: &Graph, s: usize) -> Result<Graph> {
    if s < 1 {
        return Err(Error::invalid("subdivide requires s >= 1"));
    }
    let n = g.order();
    let mut tags = vec![SubdivisionVertex::Branch; n];
    let mut edges = Vec::new();
    let mut next = n;
    for (u, v) in g.edges() {
        if s == 1 {
            edges.push((u, v));
            continue;
        }
        let mut prev = u;
        for pos in 1..s {
            tags.push(SubdivisionVertex::Between { u, v, pos });
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edges(next, &edges)?.with_tags(VertexTags::Subdivision(tags))
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Incidence graph of the projective plane of prime order q, built from the
/// 1- and 2-dimensional subspaces of the vector space of triples mod q.
/// Points occupy indices 0..q^2+q, lines the rest. The plane axioms are
/// checked by brute force before returning.
pub fn incidence_graph_pg2(q: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::UnsupportedOrder(format!(
            "projective plane construction supports prime orders only, got {q}"
        )));
    }
    // Normalized homogeneous triples: leading nonzero coordinate equal to 1.
    let mut triples: Vec<[usize; 3]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            triples.push([1, a, b]);
        }
    }
    for a in 0..q {
        triples.push([0, 1, a]);
    }
    triples.push([0, 0, 1]);
    let count = q * q + q + 1;
    debug_assert_eq!(triples.len(), count);

    let incident = |p: &[usize; 3], l: &[usize; 3]| -> bool {
        (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0
    };

    let mut edges = Vec::new();
    let mut lines: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (li, l) in triples.iter().enumerate() {
        for (pi, p) in triples.iter().enumerate() {
            if incident(p, l) {
                edges.push((pi, count + li));
                lines[li].push(pi);
            }
        }
    }

    // Axioms (1)-(4).
    for l in &lines {
        if l.len() != q + 1 {
            return Err(Error::Structural(format!(
                "line with {} points, expected {}",
                l.len(),
                q + 1
            )));
        }
    }
    let mut point_degree = vec![0usize; count];
    for l in &lines {
        for &p in l {
            point_degree[p] += 1;
        }
    }
    if point_degree.iter().any(|&d| d != q + 1) {
        return Err(Error::Structural("point on wrong number of lines".into()));
    }
    let mut line_through = vec![vec![usize::MAX; count]; count];
    for (li, l) in lines.iter().enumerate() {
        for (a, &p) in l.iter().enumerate() {
            for &r in &l[a + 1..] {
                if line_through[p][r] != usize::MAX {
                    return Err(Error::Structural(format!(
                        "points {p},{r} on two common lines"
                    )));
                }
                line_through[p][r] = li;
                line_through[r][p] = li;
            }
        }
    }
    for p in 0..count {
        for r in p + 1..count {
            if line_through[p][r] == usize::MAX {
                return Err(Error::Structural(format!(
                    "points {p},{r} on no common line"
                )));
            }
        }
    }
    for a in 0..count {
        for b in a + 1..count {
            let common = lines[a].iter().filter(|p| lines[b].contains(p)).count();
            if common != 1 {
                return Err(Error::Structural(format!(
                    "lines {a},{b} share {common} points"
                )));
            }
        }
    }
    // Axiom (5): four points with no three collinear.
    let mut found = false;
    'quad: for a in 0..count {
        for b in a + 1..count {
            for c in b + 1..count {
                if line_through[a][b] == line_through[a][c] {
                    continue;
                }
                for d in c + 1..count {
                    let collinear =
                        |x: usize, y: usize, z: usize| line_through[x][y] == line_through[x][z];
                    if !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d) {
                        found = true;
                        break 'quad;
                    }
                }
            }
        }
    }
    if !found {
        return Err(Error::Structural("no quadrilateral found".into()));
    }

    let roles = (0..count)
        .map(IncidenceRole::Point)
        .chain((0..count).map(IncidenceRole::Line))
        .collect();
    Graph::from_edges(2 * count, &edges)?.with_tags(VertexTags::Incidence(roles))
}

/// k-fold strong product of the cycle of length 2s+2, built directly on
/// mixed-radix coordinates: vertices adjacent iff they differ by at most 1
/// modulo 2s+2 in each coordinate and are not equal.
pub fn cycle_strong_power_product(k: usize, s: usize) -> Result<Graph> {
    if k < 1 || s < 1 {
        return Err(Error::invalid(
            "cycle_strong_power_product requires k >= 1 and s >= 1",
        ));
    }
    let c = cycle(2 * s + 2)?;
    let factors: Vec<&Graph> = (0..k).map(|_| &c).collect();
    strong_products(&factors)
}

/// Realizer of a target cop-number sequence: blocks of strong cycle powers
/// joined through a single apex vertex.
#[derive(Debug, Clone)]
pub struct Realizer {
    pub graph: Graph,
    /// Half-open vertex ranges of the blocks, in descent order.
    pub blocks: Vec<(usize, usize)>,
    pub apex: usize,
    /// 1-based descent positions of the input sequence.
    pub descents: Vec<usize>,
}

/// Builds the graph realizing a nonincreasing positive sequence ending at 1:
/// for each descent position i (1-based, value t), a (t-1)-fold strong
/// product of the cycle of length 2i+2, plus an apex adjacent to the all-zero
/// vertex of every block.
pub fn sequence_realizer(seq: &[usize]) -> Result<Realizer> {
    if seq.is_empty() {
        return Err(Error::invalid("sequence must be nonempty"));
    }
    if seq.contains(&0) {
        return Err(Error::invalid("sequence terms must be positive"));
    }
    for w in seq.windows(2) {
        if w[0] < w[1] {
            return Err(Error::invalid("sequence must be nonincreasing"));
        }
    }
    if *seq.last().unwrap() != 1 {
        return Err(Error::invalid("sequence must end at 1"));
    }

    let mut descents = Vec::new();
    for (i, w) in seq.windows(2).enumerate() {
        if w[0] > w[1] {
            descents.push(i + 1);
        }
    }

    let mut blocks = Vec::new();
    let mut edges = Vec::new();
    let mut offset = 0usize;
    for &i in &descents {
        let folds = seq[i - 1] - 1;
        let block = cycle_strong_power_product(folds, i)?;
        for (u, v) in block.edges() {
            edges.push((offset + u, offset + v));
        }
        blocks.push((offset, offset + block.order()));
        offset += block.order();
    }
    let apex = offset;
    for &(start, _) in &blocks {
        edges.push((apex, start));
    }
    let graph = Graph::from_edges(apex + 1, &edges)?;
    Ok(Realizer {
        graph,
        blocks,
        apex,
        descents,
    })
}

/// Member n >= 9 of the capture-time family: a fixed 9-vertex seed plus a
/// tail of vertices v_10, v_11, ... each adjacent to its predecessor and to
/// hub h_1 (n odd) or h_2 (n even).
pub fn capture_family(n: usize) -> Result<Graph> {
    if n < 9 {
        return Err(Error::invalid("capture_family requires n >= 9"));
    }
    // Seed vertex order: q t w x y h1 h2 v8 v9.
    let mut names: Vec<String> = ["q", "t", "w", "x", "y", "h1", "h2", "v8", "v9"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    const Q: usize = 0;
    const T: usize = 1;
    const W: usize = 2;
    const X: usize = 3;
    const Y: usize = 4;
    const H1: usize = 5;
    const H2: usize = 6;
    const V8: usize = 7;
    const V9: usize = 8;
    let mut edges = vec![
        (Q, H1),
        (Q, X),
        (Q, W),
        (H1, T),
        (H1, V9),
        (T, X),
        (T, V8),
        (X, Y),
        (Y, W),
        (Y, V8),
        (V8, V9),
        (V8, H2),
        (H2, W),
    ];
    let mut prev = V9;
    for m in 10..=n {
        let vm = names.len();
        names.push(format!("v{m}"));
        edges.push((vm, prev));
        edges.push((vm, if m % 2 == 1 { H1 } else { H2 }));
        prev = vm;
    }
    Graph::from_edges(names.len(), &edges)?.with_tags(VertexTags::Names(names))
}
