use codegree::{parse_group_file, LoadError, ParseError};
use codegree_core::catalog::{build, parse_name};
use codegree_core::structure::is_isomorphic;
use codegree_core::{Axiom, Error};

fn parse_error(text: &str) -> ParseError {
    match parse_group_file(text) {
        Err(LoadError::Parse { source, .. }) => source,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

fn named(name: &str) -> codegree_core::FiniteGroup {
    build(&parse_name(name).unwrap()).unwrap()
}

#[test]
fn perm_file_gives_s3() {
    let g = parse_group_file("perm 3\n(1 2 3)\n(1 2)\n").unwrap();
    assert_eq!(g.order(), 6);
    assert!(is_isomorphic(&g, &named("S3")).unwrap());
}

#[test]
fn table_file_gives_c2() {
    let g = parse_group_file("table 2\n0 1\n1 0\n").unwrap();
    assert_eq!(g.order(), 2);
    assert!(is_isomorphic(&g, &named("C2")).unwrap());
}

#[test]
fn comments_blank_lines_and_identity() {
    let text = "# the Klein four-group\nperm 4\n\n(1 2)(3 4)\n  # second generator\n(1 3)(2 4)\n()\n";
    let g = parse_group_file(text).unwrap();
    assert!(is_isomorphic(&g, &named("C2xC2")).unwrap());
}

#[test]
fn no_generators_is_trivial() {
    assert_eq!(parse_group_file("perm 5\n").unwrap().order(), 1);
}

#[test]
fn unclosed_cycle_points_at_line_two() {
    let e = parse_error("perm 3\n(1 2\n");
    assert_eq!((e.line, e.column), (2, 1));
    assert!(e.message.contains("unclosed cycle"), "{e}");
}

#[test]
fn errors_carry_positions() {
    let e = parse_error("perm 3\n(1 4)\n");
    assert_eq!((e.line, e.column), (2, 4));
    assert!(e.message.contains("outside"));

    let e = parse_error("perm 3\n(1 2 1)\n");
    assert_eq!((e.line, e.column), (2, 6));
    assert!(e.message.contains("repeated"));

    let e = parse_error("perm 3\n(1 2) x\n");
    assert_eq!((e.line, e.column), (2, 7));

    let e = parse_error("# c\ngroup 3\n");
    assert_eq!((e.line, e.column), (2, 1));

    let e = parse_error("perm three\n");
    assert_eq!((e.line, e.column), (1, 6));

    let e = parse_error("");
    assert_eq!(e.line, 1);

    let e = parse_error("table 2\n0 1\n1\n");
    assert_eq!((e.line, e.column), (3, 2));

    let e = parse_error("table 2\n0 1\n");
    assert_eq!(e.line, 3);
    assert!(e.message.contains("expected 2 rows"));

    let e = parse_error("table 2\n0 1\n1 0\n0 1\n");
    assert_eq!(e.line, 4);
}

#[test]
fn invalid_tables_pass_through_axiom_errors() {
    match parse_group_file("table 2\n0 1\n0 1\n") {
        Err(LoadError::Group(Error::NotAGroup { axiom, .. })) => assert_eq!(axiom, Axiom::Latin),
        other => panic!("{other:?}"),
    }
    match parse_group_file("table 2\n0 2\n1 0\n") {
        Err(LoadError::Group(Error::NotAGroup { axiom, .. })) => assert_eq!(axiom, Axiom::Range),
        other => panic!("{other:?}"),
    }
}

#[test]
fn table_round_trip_matches_permutation_input() {
    let g = named("F(7,3)");
    let mut text = format!("table {}\n", g.order());
    for a in 0..g.order() {
        let row: Vec<String> = (0..g.order()).map(|b| g.mul(a, b).to_string()).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    let h = parse_group_file(&text).unwrap();
    assert!(is_isomorphic(&g, &h).unwrap());
}
