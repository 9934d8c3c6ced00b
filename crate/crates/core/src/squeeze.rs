//! Catacondensed benzenoid systems (hexagonal squeezes) as hexagon trees on
//! the hexagonal lattice.
//!
//! Hexagons are pointy-top cells in axial coordinates. Direction `d` points
//! from a cell to its neighbour at angle `60° · d`; corner `c` sits at angle
//! `60° · c − 30°`, so the side between corners `c` and `c + 1` faces
//! direction `c` and belongs to direction class `(c mod 3) + 1`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rand::Rng;
use thiserror::Error;

pub const FORMAT_HEADER: &str = "phenylene v1";

const AXIAL: [(i32, i32); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

/// One of the six lattice directions, `0..=5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction(u8);

impl Direction {
    pub fn new(value: u8) -> Option<Self> {
        (value < 6).then_some(Direction(value))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn opposite(self) -> Self {
        Direction((self.0 + 3) % 6)
    }

    /// Steps `k` positions counterclockwise.
    pub fn rotate(self, k: usize) -> Self {
        Direction(((self.0 as usize + k) % 6) as u8)
    }

    pub fn all() -> impl Iterator<Item = Direction> {
        (0..6).map(Direction)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Axial coordinates of a lattice cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub q: i32,
    pub r: i32,
}

impl Cell {
    pub const ORIGIN: Cell = Cell { q: 0, r: 0 };

    pub fn neighbor(self, direction: Direction) -> Cell {
        let (dq, dr) = AXIAL[direction.index()];
        Cell {
            q: self.q + dq,
            r: self.r + dr,
        }
    }

    /// Key of corner `corner` of this cell. A lattice vertex is the centroid
    /// of the three cells around it, so the key is the sum of their
    /// coordinates and is the same whichever of the three cells computes it.
    pub fn corner_key(self, corner: usize) -> VertexKey {
        let before = self.neighbor(Direction(((corner + 5) % 6) as u8));
        let after = self.neighbor(Direction((corner % 6) as u8));
        VertexKey {
            x: self.q + before.q + after.q,
            y: self.r + before.r + after.r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexKey {
    pub x: i32,
    pub y: i32,
}

/// Class of a hexagon side by lattice direction; square connecting edges of
/// a phenylene form a fourth class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectionClass(u8);

impl DirectionClass {
    pub const ONE: DirectionClass = DirectionClass(1);
    pub const TWO: DirectionClass = DirectionClass(2);
    pub const THREE: DirectionClass = DirectionClass(3);
    pub const FOUR: DirectionClass = DirectionClass(4);
    pub const ALL: [DirectionClass; 4] = [Self::ONE, Self::TWO, Self::THREE, Self::FOUR];

    pub fn new(value: u8) -> Option<Self> {
        (1..=4).contains(&value).then_some(DirectionClass(value))
    }

    pub fn of_side(corner: usize) -> Self {
        DirectionClass((corner % 3) as u8 + 1)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Zero-based position, `0..4`.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for DirectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Hexagon `child` sits next to hexagon `parent` in `direction`.
/// Indices are 1-based as in the text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Attachment {
    pub child: usize,
    pub parent: usize,
    pub direction: Direction,
}

/// Parent-list encoding of a hexagon tree rooted at hexagon 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqueezeSpec {
    hexagon_count: usize,
    /// Sorted by child; `attachments[k]` has child `k + 2`.
    attachments: Vec<Attachment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("hexagon count must be positive")]
    NoHexagons,
    #[error("child index {child} out of range 2..={hexagon_count}")]
    ChildOutOfRange { child: usize, hexagon_count: usize },
    #[error("child {child} attached more than once")]
    DuplicateChild { child: usize },
    #[error("parent {parent} of child {child} must satisfy 1 <= parent < child")]
    BadParent { child: usize, parent: usize },
    #[error("no attachment for child {child}")]
    MissingChild { child: usize },
}

impl SqueezeSpec {
    pub fn new(hexagon_count: usize, attachments: Vec<Attachment>) -> Result<Self, SpecError> {
        if hexagon_count == 0 {
            return Err(SpecError::NoHexagons);
        }
        let mut slots: Vec<Option<Attachment>> = vec![None; hexagon_count.saturating_sub(1)];
        for attachment in attachments {
            check_attachment(&attachment, hexagon_count)?;
            let slot = &mut slots[attachment.child - 2];
            if slot.is_some() {
                return Err(SpecError::DuplicateChild {
                    child: attachment.child,
                });
            }
            *slot = Some(attachment);
        }
        let attachments = slots
            .into_iter()
            .enumerate()
            .map(|(k, slot)| slot.ok_or(SpecError::MissingChild { child: k + 2 }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SqueezeSpec {
            hexagon_count,
            attachments,
        })
    }

    pub fn hexagon_count(&self) -> usize {
        self.hexagon_count
    }

    pub fn attachments(&self) -> &[Attachment] {
        &self.attachments
    }

    /// True for the chain produced by [`generate_linear_spec`].
    pub fn is_linear_chain(&self) -> bool {
        self.attachments
            .iter()
            .all(|a| a.parent + 1 == a.child && a.direction == Direction(0))
    }
}

fn check_attachment(a: &Attachment, hexagon_count: usize) -> Result<(), SpecError> {
    if a.child < 2 || a.child > hexagon_count {
        return Err(SpecError::ChildOutOfRange {
            child: a.child,
            hexagon_count,
        });
    }
    if a.parent == 0 || a.parent >= a.child {
        return Err(SpecError::BadParent {
            child: a.child,
            parent: a.parent,
        });
    }
    Ok(())
}

impl fmt::Display for SqueezeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{FORMAT_HEADER}")?;
        writeln!(f, "{}", self.hexagon_count)?;
        for a in &self.attachments {
            writeln!(f, "{} {} {}", a.child, a.parent, a.direction)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty document, expected header `{FORMAT_HEADER}`")]
    Empty,
    #[error("line {line}: expected header `{FORMAT_HEADER}`, found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("missing hexagon count line")]
    MissingCount,
    #[error("line {line}: {field} is not a non-negative integer: {text:?}")]
    NotNumeric {
        line: usize,
        field: &'static str,
        text: String,
    },
    #[error("line {line}: expected {expected} fields, found {found}")]
    FieldCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: direction {direction} out of range 0..=5")]
    DirectionOutOfRange { line: usize, direction: u64 },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: SpecError,
    },
}

/// Parses the versioned squeeze spec text format:
///
/// ```text
/// phenylene v1
/// <n>
/// <child> <parent> <direction>     (n - 1 lines)
/// ```
///
/// Lines starting with `#` and blank lines are ignored.
pub fn parse_squeeze_spec(text: &str) -> Result<SqueezeSpec, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, line)| (k + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::Empty)?;
    if header.split_whitespace().collect::<Vec<_>>() != ["phenylene", "v1"] {
        return Err(ParseError::BadHeader {
            line: header_line,
            found: header.to_owned(),
        });
    }

    let (count_line, count) = lines.next().ok_or(ParseError::MissingCount)?;
    let fields = count.split_whitespace().collect::<Vec<_>>();
    if fields.len() != 1 {
        return Err(ParseError::FieldCount {
            line: count_line,
            expected: 1,
            found: fields.len(),
        });
    }
    let hexagon_count = number(fields[0], count_line, "hexagon count")? as usize;
    if hexagon_count == 0 {
        return Err(ParseError::Invalid {
            line: count_line,
            source: SpecError::NoHexagons,
        });
    }

    let mut seen = vec![false; hexagon_count + 1];
    let mut attachments = Vec::with_capacity(hexagon_count - 1);
    let mut last_line = count_line;
    for (line, content) in lines {
        last_line = line;
        let fields = content.split_whitespace().collect::<Vec<_>>();
        if fields.len() != 3 {
            return Err(ParseError::FieldCount {
                line,
                expected: 3,
                found: fields.len(),
            });
        }
        let child = number(fields[0], line, "child")?;
        let parent = number(fields[1], line, "parent")?;
        let direction = number(fields[2], line, "direction")?;
        let invalid = |source| ParseError::Invalid { line, source };
        if child < 2 || child > hexagon_count as u64 {
            return Err(invalid(SpecError::ChildOutOfRange {
                child: child as usize,
                hexagon_count,
            }));
        }
        let direction = u8::try_from(direction)
            .ok()
            .and_then(Direction::new)
            .ok_or(ParseError::DirectionOutOfRange { line, direction })?;
        let attachment = Attachment {
            child: child as usize,
            parent: usize::try_from(parent).unwrap_or(usize::MAX),
            direction,
        };
        check_attachment(&attachment, hexagon_count).map_err(invalid)?;
        if std::mem::replace(&mut seen[attachment.child], true) {
            return Err(invalid(SpecError::DuplicateChild {
                child: attachment.child,
            }));
        }
        attachments.push(attachment);
    }

    SqueezeSpec::new(hexagon_count, attachments).map_err(|source| ParseError::Invalid {
        line: last_line,
        source,
    })
}

fn number(text: &str, line: usize, field: &'static str) -> Result<u64, ParseError> {
    text.parse().map_err(|_| ParseError::NotNumeric {
        line,
        field,
        text: text.to_owned(),
    })
}

/// Linear chain: hexagon `k` sits east of hexagon `k - 1`.
pub fn generate_linear_spec(n: usize) -> SqueezeSpec {
    assert!(n >= 1, "a squeeze needs at least one hexagon");
    let attachments = (2..=n)
        .map(|child| Attachment {
            child,
            parent: child - 1,
            direction: Direction(0),
        })
        .collect();
    SqueezeSpec {
        hexagon_count: n,
        attachments,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SqueezeError {
    #[error("hexagons {first} and {second} occupy the same lattice cell ({q}, {r})", q = cell.q, r = cell.r)]
    CellCollision {
        first: usize,
        second: usize,
        cell: Cell,
    },
    #[error("vertex is shared by hexagons {hexagons:?}; the system is not catacondensed")]
    InternalVertex { hexagons: Vec<usize> },
    #[error(
        "hexagons {first} and {second} are adjacent on the lattice but not in the hexagon tree"
    )]
    DualCycle { first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqueezeVertex {
    pub key: VertexKey,
    /// 0-based hexagon indices, one or two of them.
    pub hexagons: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqueezeEdge {
    pub ends: (usize, usize),
    pub class: DirectionClass,
    pub hexagons: Vec<usize>,
}

/// Edge of the inner dual; `shared_edge` indexes [`Squeeze::edges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualEdge {
    pub parent: usize,
    pub child: usize,
    pub direction: Direction,
    pub shared_edge: usize,
}

/// A validated squeeze embedded on the lattice. Hexagon indices are 0-based
/// here; hexagon `k` is hexagon `k + 1` of the spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Squeeze {
    spec: SqueezeSpec,
    cells: Vec<Cell>,
    corners: Vec<[usize; 6]>,
    vertices: Vec<SqueezeVertex>,
    edges: Vec<SqueezeEdge>,
    inner_dual: Vec<DualEdge>,
}

impl Squeeze {
    pub fn spec(&self) -> &SqueezeSpec {
        &self.spec
    }

    pub fn hexagon_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Squeeze vertex index of each corner of each hexagon.
    pub fn corners(&self) -> &[[usize; 6]] {
        &self.corners
    }

    pub fn vertices(&self) -> &[SqueezeVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[SqueezeEdge] {
        &self.edges
    }

    /// Inner-dual edges in child order.
    pub fn inner_dual(&self) -> &[DualEdge] {
        &self.inner_dual
    }
}

/// Embeds the spec on the lattice and checks that it describes a
/// catacondensed benzenoid system whose inner dual is the given tree.
pub fn validate_squeeze(spec: &SqueezeSpec) -> Result<Squeeze, SqueezeError> {
    let n = spec.hexagon_count;
    let mut cells = Vec::with_capacity(n);
    let mut occupant: HashMap<Cell, usize> = HashMap::with_capacity(n);
    cells.push(Cell::ORIGIN);
    occupant.insert(Cell::ORIGIN, 0);
    for a in &spec.attachments {
        let cell = cells[a.parent - 1].neighbor(a.direction);
        if let Some(&first) = occupant.get(&cell) {
            return Err(SqueezeError::CellCollision {
                first: first + 1,
                second: a.child,
                cell,
            });
        }
        occupant.insert(cell, a.child - 1);
        cells.push(cell);
    }

    let mut vertex_of_key: HashMap<VertexKey, usize> = HashMap::with_capacity(4 * n + 2);
    let mut vertices: Vec<SqueezeVertex> = Vec::with_capacity(4 * n + 2);
    let mut corners = Vec::with_capacity(n);
    for (hexagon, cell) in cells.iter().enumerate() {
        let mut ids = [0; 6];
        for (corner, id) in ids.iter_mut().enumerate() {
            let key = cell.corner_key(corner);
            let index = *vertex_of_key.entry(key).or_insert_with(|| {
                vertices.push(SqueezeVertex {
                    key,
                    hexagons: Vec::with_capacity(2),
                });
                vertices.len() - 1
            });
            let vertex = &mut vertices[index];
            vertex.hexagons.push(hexagon);
            if vertex.hexagons.len() > 2 {
                return Err(SqueezeError::InternalVertex {
                    hexagons: vertex.hexagons.iter().map(|h| h + 1).collect(),
                });
            }
            *id = index;
        }
        corners.push(ids);
    }

    let tree_pairs: HashSet<(usize, usize)> = spec
        .attachments
        .iter()
        .map(|a| (a.parent - 1, a.child - 1))
        .collect();
    for (hexagon, cell) in cells.iter().enumerate() {
        for direction in Direction::all() {
            let Some(&other) = occupant.get(&cell.neighbor(direction)) else {
                continue;
            };
            let (low, high) = (hexagon.min(other), hexagon.max(other));
            if !tree_pairs.contains(&(low, high)) {
                return Err(SqueezeError::DualCycle {
                    first: low + 1,
                    second: high + 1,
                });
            }
        }
    }

    let mut edge_of_ends: HashMap<(usize, usize), usize> = HashMap::with_capacity(5 * n + 1);
    let mut edges: Vec<SqueezeEdge> = Vec::with_capacity(5 * n + 1);
    for (hexagon, ids) in corners.iter().enumerate() {
        for corner in 0..6 {
            let (a, b) = (ids[corner], ids[(corner + 1) % 6]);
            let ends = (a.min(b), a.max(b));
            let class = DirectionClass::of_side(corner);
            let index = *edge_of_ends.entry(ends).or_insert_with(|| {
                edges.push(SqueezeEdge {
                    ends,
                    class,
                    hexagons: Vec::with_capacity(2),
                });
                edges.len() - 1
            });
            assert_eq!(
                edges[index].class, class,
                "direction class of a shared side depends on the hexagon computing it"
            );
            edges[index].hexagons.push(hexagon);
        }
    }

    let inner_dual = spec
        .attachments
        .iter()
        .map(|a| {
            let parent = a.parent - 1;
            let corner = a.direction.index();
            let (x, y) = (corners[parent][corner], corners[parent][(corner + 1) % 6]);
            DualEdge {
                parent,
                child: a.child - 1,
                direction: a.direction,
                shared_edge: edge_of_ends[&(x.min(y), x.max(y))],
            }
        })
        .collect();

    Ok(Squeeze {
        spec: spec.clone(),
        cells,
        corners,
        vertices,
        edges,
        inner_dual,
    })
}

/// Labels a set of cells as a spec by breadth-first search from the
/// smallest cell, so parents always precede children. Cells must form a
/// connected set; lattice adjacency is taken as the hexagon tree.
pub fn spec_from_cells(cells: &BTreeSet<Cell>) -> Option<SqueezeSpec> {
    let first = *cells.iter().next()?;
    let mut index: HashMap<Cell, usize> = HashMap::from([(first, 1)]);
    let mut order = vec![first];
    let mut attachments = Vec::with_capacity(cells.len() - 1);
    let mut head = 0;
    while head < order.len() {
        let cell = order[head];
        head += 1;
        for direction in Direction::all() {
            let next = cell.neighbor(direction);
            if cells.contains(&next) && !index.contains_key(&next) {
                order.push(next);
                index.insert(next, order.len());
                attachments.push(Attachment {
                    child: order.len(),
                    parent: index[&cell],
                    direction,
                });
            }
        }
    }
    if order.len() != cells.len() {
        return None;
    }
    SqueezeSpec::new(cells.len(), attachments).ok()
}

fn normalized(cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    let origin = *cells.iter().next().expect("non-empty cell set");
    cells
        .iter()
        .map(|c| Cell {
            q: c.q - origin.q,
            r: c.r - origin.r,
        })
        .collect()
}

/// Every catacondensed system with `1..=max_n` hexagons, up to translation,
/// grouped by size. Any such system is a valid one with one leaf hexagon
/// added, so the sets are grown level by level.
pub fn enumerate_catacondensed(max_n: usize) -> Vec<Vec<SqueezeSpec>> {
    let mut levels = Vec::with_capacity(max_n);
    if max_n == 0 {
        return levels;
    }
    let mut current: BTreeSet<BTreeSet<Cell>> = BTreeSet::from([BTreeSet::from([Cell::ORIGIN])]);
    loop {
        levels.push(
            current
                .iter()
                .map(|cells| spec_from_cells(cells).expect("connected by construction"))
                .collect(),
        );
        if levels.len() == max_n {
            return levels;
        }
        let mut next = BTreeSet::new();
        for cells in &current {
            for cell in cells {
                for direction in Direction::all() {
                    let added = cell.neighbor(direction);
                    if cells.contains(&added) {
                        continue;
                    }
                    let mut grown = cells.clone();
                    grown.insert(added);
                    let grown = normalized(&grown);
                    if next.contains(&grown) {
                        continue;
                    }
                    let spec = spec_from_cells(&grown).expect("connected by construction");
                    if validate_squeeze(&spec).is_ok() {
                        next.insert(grown);
                    }
                }
            }
        }
        current = next;
    }
}

/// Random valid spec with `n` hexagons. Each child draws a parent and a
/// direction uniformly and is kept only if the prefix stays valid.
pub fn random_spec<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SqueezeSpec {
    assert!(n >= 1, "a squeeze needs at least one hexagon");
    'restart: loop {
        let mut attachments: Vec<Attachment> = Vec::with_capacity(n - 1);
        for child in 2..=n {
            let mut placed = false;
            for _ in 0..64 {
                let candidate = Attachment {
                    child,
                    parent: rng.gen_range(1..child),
                    direction: Direction(rng.gen_range(0..6)),
                };
                attachments.push(candidate);
                let prefix = SqueezeSpec {
                    hexagon_count: child,
                    attachments: attachments.clone(),
                };
                if validate_squeeze(&prefix).is_ok() {
                    placed = true;
                    break;
                }
                attachments.pop();
            }
            if !placed {
                continue 'restart;
            }
        }
        return SqueezeSpec {
            hexagon_count: n,
            attachments,
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn spec(n: usize, rows: &[(usize, usize, u8)]) -> SqueezeSpec {
        SqueezeSpec::new(
            n,
            rows.iter()
                .map(|&(child, parent, d)| Attachment {
                    child,
                    parent,
                    direction: Direction::new(d).unwrap(),
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn parses_single_hexagon() {
        let parsed = parse_squeeze_spec("phenylene v1\n1\n").unwrap();
        assert_eq!(parsed.hexagon_count(), 1);
        assert!(parsed.attachments().is_empty());
    }

    #[test]
    fn parses_linear_chain_with_comments() {
        let text = "# three in a row\nphenylene v1\n3\n2 1 0\n# middle\n3 2 0\n";
        assert_eq!(parse_squeeze_spec(text).unwrap(), generate_linear_spec(3));
    }

    #[test]
    fn rejects_direction_out_of_range() {
        assert_eq!(
            parse_squeeze_spec("phenylene v1\n2\n2 1 6\n"),
            Err(ParseError::DirectionOutOfRange {
                line: 3,
                direction: 6
            })
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", ParseError::Empty),
            (
                "phenylene v2\n1\n",
                ParseError::BadHeader {
                    line: 1,
                    found: "phenylene v2".into(),
                },
            ),
            ("phenylene v1\n", ParseError::MissingCount),
            (
                "phenylene v1\nthree\n",
                ParseError::NotNumeric {
                    line: 2,
                    field: "hexagon count",
                    text: "three".into(),
                },
            ),
            (
                "phenylene v1\n3\n2 1 0\n2 1 1\n",
                ParseError::Invalid {
                    line: 4,
                    source: SpecError::DuplicateChild { child: 2 },
                },
            ),
            (
                "phenylene v1\n3\n2 1 0\n3 3 0\n",
                ParseError::Invalid {
                    line: 4,
                    source: SpecError::BadParent {
                        child: 3,
                        parent: 3,
                    },
                },
            ),
            (
                "phenylene v1\n3\n2 1 0\n4 1 0\n",
                ParseError::Invalid {
                    line: 4,
                    source: SpecError::ChildOutOfRange {
                        child: 4,
                        hexagon_count: 3,
                    },
                },
            ),
            (
                "phenylene v1\n3\n2 1 0\n",
                ParseError::Invalid {
                    line: 3,
                    source: SpecError::MissingChild { child: 3 },
                },
            ),
            (
                "phenylene v1\n2\n2 1\n",
                ParseError::FieldCount {
                    line: 3,
                    expected: 3,
                    found: 2,
                },
            ),
            (
                "phenylene v1\n2\n2 x 0\n",
                ParseError::NotNumeric {
                    line: 3,
                    field: "parent",
                    text: "x".into(),
                },
            ),
            (
                "phenylene v1\n0\n",
                ParseError::Invalid {
                    line: 2,
                    source: SpecError::NoHexagons,
                },
            ),
        ];
        for (text, expected) in cases {
            assert_eq!(parse_squeeze_spec(text), Err(expected), "{text:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        let s = spec(4, &[(3, 1, 2), (2, 1, 0), (4, 2, 5)]);
        assert_eq!(parse_squeeze_spec(&s.to_string()).unwrap(), s);
        assert_eq!(s.to_string(), "phenylene v1\n4\n2 1 0\n3 1 2\n4 2 5\n");
    }

    #[test]
    fn linear_generator() {
        assert!(generate_linear_spec(1).attachments().is_empty());
        assert_eq!(generate_linear_spec(3), spec(3, &[(2, 1, 0), (3, 2, 0)]));
        let squeeze = validate_squeeze(&generate_linear_spec(5)).unwrap();
        assert!(squeeze.cells().iter().all(|c| c.r == 0));
        assert_eq!(
            squeeze.cells().iter().map(|c| c.q).collect::<Vec<_>>(),
            vec![0, 1, 2, 3, 4]
        );
    }

    #[test]
    fn two_hexagons_share_one_side() {
        let squeeze = validate_squeeze(&generate_linear_spec(2)).unwrap();
        assert_eq!(squeeze.vertices().len(), 10);
        assert_eq!(squeeze.edges().len(), 11);
        assert_eq!(squeeze.inner_dual().len(), 1);
        let shared = &squeeze.edges()[squeeze.inner_dual()[0].shared_edge];
        assert_eq!(shared.hexagons, vec![0, 1]);
        assert_eq!(shared.class, DirectionClass::ONE);
    }

    #[test]
    fn collision_is_rejected() {
        let err = validate_squeeze(&spec(3, &[(2, 1, 0), (3, 2, 3)])).unwrap_err();
        assert_eq!(
            err,
            SqueezeError::CellCollision {
                first: 1,
                second: 3,
                cell: Cell::ORIGIN
            }
        );
    }

    // Hand enumeration: cells (0,0) (1,0) (2,-1) (2,-2) (1,-2) (0,-1) ring
    // the empty cell (1,-1). Hexagons 1 and 6 touch without a tree edge;
    // every vertex still lies in at most two hexagons.
    #[test]
    fn coil_is_rejected() {
        let coil = spec(6, &[(2, 1, 0), (3, 2, 1), (4, 3, 2), (5, 4, 3), (6, 5, 4)]);
        assert_eq!(
            validate_squeeze(&coil),
            Err(SqueezeError::DualCycle {
                first: 1,
                second: 6
            })
        );
    }

    #[test]
    fn three_around_a_vertex_is_rejected() {
        let err = validate_squeeze(&spec(3, &[(2, 1, 0), (3, 1, 1)])).unwrap_err();
        assert_eq!(
            err,
            SqueezeError::InternalVertex {
                hexagons: vec![1, 2, 3]
            }
        );
    }

    #[test]
    fn branch_directions_are_spread() {
        let squeeze = validate_squeeze(&spec(4, &[(2, 1, 0), (3, 1, 2), (4, 1, 4)])).unwrap();
        assert_eq!(squeeze.vertices().len(), 18);
        assert_eq!(squeeze.edges().len(), 21);
    }

    #[test]
    fn corner_keys_are_shared_across_each_side() {
        for direction in Direction::all() {
            let here = Cell::ORIGIN;
            let there = here.neighbor(direction);
            let d = direction.index();
            assert_eq!(here.corner_key(d), there.corner_key((d + 4) % 6));
            assert_eq!(here.corner_key((d + 1) % 6), there.corner_key((d + 3) % 6));
        }
    }

    #[test]
    fn enumeration_counts() {
        let levels = enumerate_catacondensed(4);
        assert_eq!(levels[0].len(), 1);
        // two hexagons: three orientations of naphthalene
        assert_eq!(levels[1].len(), 3);
        // three: three linear, six angular orientations; the triangle is
        // excluded (internal vertex)
        assert_eq!(levels[2].len(), 9);
        for (k, level) in levels.iter().enumerate() {
            for s in level {
                assert_eq!(s.hexagon_count(), k + 1);
                validate_squeeze(s).unwrap();
            }
        }
    }

    #[test]
    fn random_specs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=12 {
            let s = random_spec(n, &mut rng);
            assert_eq!(s.hexagon_count(), n);
            validate_squeeze(&s).unwrap();
        }
    }
}
