//! Small reference contexts used throughout the tests and examples.

use crate::bitset::AttrSet;
use crate::context::FormalContext;

fn build(objects: &[&str], attributes: &[&str], grid: &[&str]) -> FormalContext {
    let rows = grid
        .iter()
        .map(|line| {
            AttrSet::from_indices(
                attributes.len(),
                line.chars()
                    .enumerate()
                    .filter(|&(_, c)| c == 'X')
                    .map(|(i, _)| i),
            )
        })
        .collect();
    FormalContext::new(
        objects.iter().map(|s| s.to_string()).collect(),
        attributes.iter().map(|s| s.to_string()).collect(),
        rows,
    )
    .expect("fixture is well formed")
}

/// Four geometric figures: equilateral triangle, right triangle, rectangle,
/// square. Attribute `e` is held by no object.
pub fn geometric_figures() -> FormalContext {
    build(
        &["g1", "g2", "g3", "g4"],
        &["a", "b", "c", "d", "e"],
        &["X..X.", "X.X..", ".XX..", ".XXX."],
    )
}

/// The n×n identity relation. Its lattice is M_n with top and bottom.
pub fn nominal_scale(n: usize) -> FormalContext {
    FormalContext::from_fn(n, n, |g, m| g == m)
}

/// Object `i` holds attributes `0..=i`; the intents form a chain.
pub fn staircase(n: usize) -> FormalContext {
    FormalContext::from_fn(n, n, |g, m| m <= g)
}

/// Complement of the identity: every attribute subset is an intent.
pub fn boolean(n: usize) -> FormalContext {
    FormalContext::from_fn(n, n, |g, m| g != m)
}

/// Five objects described by shape, firmness and colour.
pub fn short_mango() -> FormalContext {
    build(
        &["egg", "kiwi", "plum", "toy cube", "apple"],
        &["oval", "firm", "green", "blue"],
        &["XX..", "X.X.", "X..X", ".XX.", "...."],
    )
}

/// Living beings and water: eight organisms, nine properties.
pub fn live_in_water() -> FormalContext {
    build(
        &[
            "leech",
            "bream",
            "frog",
            "dog",
            "spike-weed",
            "reed",
            "bean",
            "maize",
        ],
        &[
            "needs water to live",
            "lives in water",
            "lives on land",
            "needs chlorophyll to produce food",
            "two seed leaves",
            "one seed leaf",
            "can move around",
            "has limbs",
            "suckles its offspring",
        ],
        &[
            "XX....X..",
            "XX....XX.",
            "XXX...XX.",
            "X.X...XXX",
            "XX.X.X...",
            "XXXX.X...",
            "X.XXX....",
            "X.XX.X...",
        ],
    )
}

/// Column labels of the grouped descriptions table.
pub const DESCRIPTION_COLUMNS: [&str; 9] = [
    "is generator",
    "is closed descr",
    "is minimal gen",
    "is minimum gen",
    "is pseudo intent",
    "is proper premise",
    "is key",
    "is passkey",
    "is intent",
];

/// Grouped descriptions of the first 20 attributes of the Bob Ross episode
/// table: 8 flag combinations, 35 crosses.
pub fn bob_ross_descriptions_grid() -> FormalContext {
    build(
        &["67", "45", "41", "125", "1", "25", "33", "1048239"],
        &DESCRIPTION_COLUMNS,
        &[
            "XXXX..XXX",
            "XX......X",
            "X.XXXXXX.",
            "X.XX.XXX.",
            "X.X.XXX..",
            "X.X..XX..",
            "X...X....",
            "X........",
        ],
    )
}

/// Multiplicities matching the rows of [`bob_ross_descriptions_grid`].
pub const BOB_ROSS_GROUP_COUNTS: [u64; 8] = [67, 45, 41, 125, 1, 25, 33, 1_048_239];
