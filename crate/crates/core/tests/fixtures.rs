use std::path::Path;

use fca_core::charsets::{brute_force_class, Classifier};
use fca_core::context::{
    parse_burmeister, parse_dense_csv, parse_dense_csv_with, write_burmeister, CsvOptions,
};
use fca_core::{fixtures, CharClass, ConceptLattice, FormalContext};

fn load(name: &str) -> FormalContext {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap();
    if name.ends_with(".csv") {
        return parse_dense_csv(&text, None).unwrap();
    }
    let ctx = parse_burmeister(&text).unwrap();
    assert_eq!(write_burmeister(&ctx), text, "{name} does not round-trip");
    ctx
}

#[test]
fn files_match_builtin_fixtures() {
    assert_eq!(load("geometric_figures.cxt"), fixtures::geometric_figures());
    assert_eq!(load("nominal3.cxt"), fixtures::nominal_scale(3));
    assert_eq!(load("nominal3.csv"), fixtures::nominal_scale(3));
    assert_eq!(load("staircase5.cxt"), fixtures::staircase(5));
    assert_eq!(load("short_mango.cxt"), fixtures::short_mango());
    assert_eq!(load("live_in_water.cxt"), fixtures::live_in_water());
    assert_eq!(
        load("bob_ross_descriptions.cxt"),
        fixtures::bob_ross_descriptions_grid()
    );
}

#[test]
fn toy_extents() {
    let ctx = fixtures::geometric_figures();
    // the rows holding both b and c are g3 = {b,c} and g4 = {b,c,d}
    assert_eq!(ctx.extent(&ctx.attrs(&["b", "c"])), ctx.objs(&["g3", "g4"]));
    assert_eq!(ctx.extent(&ctx.attrs(&["e"])).len(), 0);
    assert_eq!(ctx.extent(&ctx.empty_attrs()).len(), 4);
}

#[test]
fn live_in_water_lattice() {
    let ctx = load("live_in_water.cxt");
    assert_eq!(ConceptLattice::from_context(&ctx).len(), 19);
}

/// Subsets of the shortened mango context with their published class
/// memberships: intent, key, passkey, pseudo-intent, proper premise.
const MANGO_TABLE: [(&[&str], [bool; 5]); 16] = [
    (&[], [true, true, true, false, false]),
    (&["blue"], [false, true, true, true, true]),
    (&["green"], [true, true, true, false, false]),
    (&["oval"], [true, true, true, false, false]),
    (&["firm"], [true, true, true, false, false]),
    (&["blue", "green"], [false, true, true, false, true]),
    (&["blue", "oval"], [true, false, false, false, false]),
    (&["blue", "firm"], [false, true, true, false, true]),
    (&["green", "oval"], [true, true, true, false, false]),
    (&["green", "firm"], [true, true, true, false, false]),
    (&["oval", "firm"], [true, true, true, false, false]),
    (
        &["blue", "green", "oval"],
        [false, false, false, true, false],
    ),
    (
        &["blue", "green", "firm"],
        [false, false, false, false, false],
    ),
    (
        &["blue", "oval", "firm"],
        [false, false, false, true, false],
    ),
    (&["green", "oval", "firm"], [false, true, false, true, true]),
    (
        &["blue", "green", "oval", "firm"],
        [true, false, false, false, false],
    ),
];

const MANGO_CLASSES: [CharClass; 5] = [
    CharClass::Intent,
    CharClass::Key,
    CharClass::Passkey,
    CharClass::PseudoIntent,
    CharClass::ProperPremise,
];

#[test]
fn mango_table_agrees_with_brute_force() {
    let ctx = fixtures::short_mango();
    for (k, class) in MANGO_CLASSES.into_iter().enumerate() {
        let members = brute_force_class(&ctx, class).unwrap();
        for (names, flags) in MANGO_TABLE {
            assert_eq!(
                members.contains(&ctx.attrs(names)),
                flags[k],
                "{names:?} as {class:?}"
            );
        }
    }
}

#[test]
fn mango_table_agrees_with_classifier() {
    let ctx = fixtures::short_mango();
    let classifier = Classifier::new(&ctx);
    for (names, flags) in MANGO_TABLE {
        let f = classifier.classify(&ctx.attrs(names));
        let got = MANGO_CLASSES.map(|c| f.get(c));
        assert_eq!(got, flags, "{names:?}");
        assert!(f.is_generator);
    }
}

#[test]
fn episode_table_layout() {
    // two id columns, quoted titles with embedded commas and quotes
    let text = "EPISODE,TITLE,A,B,C\n\
                S01E01,\"\"\"A WALK, IN THE WOODS\"\"\",1,0,1\n\
                S01E02,\"\"\"MT. MCKINLEY\"\"\",0,1,1\n";
    let opts = CsvOptions {
        max_attrs: Some(2),
        id_columns: 2,
    };
    let ctx = parse_dense_csv_with(text, &opts).unwrap();
    assert_eq!(ctx.object_names(), ["S01E01", "S01E02"]);
    assert_eq!(ctx.attribute_names(), ["A", "B"]);
    assert_eq!(ctx.rows()[0], ctx.attrs(&["A"]));
    assert_eq!(ctx.rows()[1], ctx.attrs(&["B"]));
}
