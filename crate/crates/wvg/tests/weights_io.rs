use proptest::prelude::*;
use wvg::io::{parse_weights, write_weights};
use wvg_core::data::builtin_ec;
use wvg_core::{Game, GroupSpec};

fn round_trip(game: &Game) -> Game {
    let mut buf = Vec::new();
    write_weights(game, &mut buf).unwrap();
    parse_weights(buf.as_slice(), "buffer")
        .unwrap()
        .to_game()
        .unwrap()
}

#[test]
fn builtin_electoral_college_round_trips() {
    let g = builtin_ec();
    assert_eq!(round_trip(&g), g);
}

#[test]
fn malformed_rows_name_their_line() {
    let text = "name,weight\nA,1\nB,x\n";
    let err = parse_weights(text.as_bytes(), "toy.csv")
        .unwrap_err()
        .to_string();
    assert!(err.contains("toy.csv") && err.contains('3'), "{err}");
    let dup = "name,weight\nA,1\nA,2\n";
    assert!(parse_weights(dup.as_bytes(), "dup.csv").is_err());
    let neg = "name,weight\nA,-1\n";
    assert!(parse_weights(neg.as_bytes(), "neg.csv").is_err());
}

proptest! {
    #[test]
    fn written_tables_parse_back_exactly(
        rows in proptest::collection::vec((1e-3..1e4f64, proptest::option::of(1.0..1e8f64)), 1..12),
        with_pop in any::<bool>(),
    ) {
        let groups: Vec<GroupSpec> = rows
            .iter()
            .enumerate()
            .map(|(i, (w, p))| {
                let pop = if with_pop { Some(p.unwrap_or(1.0)) } else { None };
                GroupSpec::new(format!("g{i}"), *w, pop).unwrap()
            })
            .collect();
        let g = Game::new(groups).unwrap();
        prop_assert_eq!(round_trip(&g), g);
    }
}
