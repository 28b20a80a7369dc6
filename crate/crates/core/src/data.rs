//! Built-in games and a plain weight table.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::game::{Game, GroupSpec};
use crate::Result;

/// Electoral votes by state under the 2012–2020 apportionment (DC included).
pub const EC_2012_2020: [(&str, f64); 51] = [
    ("AL", 9.0),
    ("AK", 3.0),
    ("AZ", 11.0),
    ("AR", 6.0),
    ("CA", 55.0),
    ("CO", 9.0),
    ("CT", 7.0),
    ("DE", 3.0),
    ("DC", 3.0),
    ("FL", 29.0),
    ("GA", 16.0),
    ("HI", 4.0),
    ("ID", 4.0),
    ("IL", 20.0),
    ("IN", 11.0),
    ("IA", 6.0),
    ("KS", 6.0),
    ("KY", 8.0),
    ("LA", 8.0),
    ("ME", 4.0),
    ("MD", 10.0),
    ("MA", 11.0),
    ("MI", 16.0),
    ("MN", 10.0),
    ("MS", 6.0),
    ("MO", 10.0),
    ("MT", 3.0),
    ("NE", 5.0),
    ("NV", 6.0),
    ("NH", 4.0),
    ("NJ", 14.0),
    ("NM", 5.0),
    ("NY", 29.0),
    ("NC", 15.0),
    ("ND", 3.0),
    ("OH", 18.0),
    ("OK", 7.0),
    ("OR", 7.0),
    ("PA", 20.0),
    ("RI", 4.0),
    ("SC", 9.0),
    ("SD", 3.0),
    ("TN", 11.0),
    ("TX", 38.0),
    ("UT", 6.0),
    ("VT", 3.0),
    ("VA", 13.0),
    ("WA", 12.0),
    ("WV", 5.0),
    ("WI", 10.0),
    ("WY", 3.0),
];

/// Electoral votes and population in thousands.
pub const FL_NY_WY: [(&str, f64, f64); 3] = [
    ("FL", 29.0, 15047.0),
    ("NY", 29.0, 13684.0),
    ("WY", 3.0, 422.0),
];

pub fn builtin_ec() -> Game {
    Game::new(
        EC_2012_2020
            .iter()
            .map(|&(name, w)| GroupSpec::new(name, w, None).expect("valid built-in row"))
            .collect(),
    )
    .expect("valid built-in game")
}

pub fn builtin_fl_ny_wy() -> Game {
    Game::new(
        FL_NY_WY
            .iter()
            .map(|&(name, w, p)| GroupSpec::new(name, w, Some(p)).expect("valid built-in row"))
            .collect(),
    )
    .expect("valid built-in game")
}

/// Rows of a weight file together with where they came from.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    pub rows: Vec<GroupSpec>,
    pub source: String,
}

impl WeightTable {
    pub fn from_game(game: &Game, source: &str) -> Self {
        WeightTable {
            rows: game.groups().to_vec(),
            source: source.to_string(),
        }
    }

    pub fn to_game(&self) -> Result<Game> {
        Game::new(self.rows.clone())
    }

    pub fn has_populations(&self) -> bool {
        self.rows.iter().all(|r| r.population.is_some())
    }
}
