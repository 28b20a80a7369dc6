//! Comma-separated weight tables: `name,weight[,population]`.

use std::collections::HashSet;
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use wvg_core::data::WeightTable;
use wvg_core::{Game, GroupSpec};

use crate::error::{Error, Result};

fn header_shape(headers: &csv::StringRecord, source: &str) -> Result<bool> {
    let cols: Vec<String> = headers
        .iter()
        .map(|h| h.trim().to_ascii_lowercase())
        .collect();
    match cols
        .iter()
        .map(String::as_str)
        .collect::<Vec<_>>()
        .as_slice()
    {
        ["name", "weight"] => Ok(false),
        ["name", "weight", "population"] => Ok(true),
        _ => Err(Error::Parse {
            source_name: source.to_string(),
            line: 1,
            message: format!(
                "expected header `name,weight[,population]`, found `{}`",
                cols.join(",")
            ),
        }),
    }
}

fn parse_number(field: &str, what: &str, source: &str, line: u64) -> Result<f64> {
    field.trim().parse::<f64>().map_err(|_| Error::Parse {
        source_name: source.to_string(),
        line,
        message: format!("{what} `{field}` is not a number"),
    })
}

/// Reads a weight table. `source` names the input in error messages.
pub fn parse_weights<R: Read>(reader: R, source: &str) -> Result<WeightTable> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let with_pop = header_shape(rdr.headers().map_err(|e| csv_error(e, source))?, source)?;
    let mut rows = Vec::new();
    let mut seen = HashSet::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_error(e, source))?;
        let line = rec.position().map_or(0, |p| p.line());
        let name = rec.get(0).unwrap_or("").to_string();
        let weight = parse_number(rec.get(1).unwrap_or(""), "weight", source, line)?;
        let population = if with_pop {
            Some(parse_number(
                rec.get(2).unwrap_or(""),
                "population",
                source,
                line,
            )?)
        } else {
            None
        };
        let row = GroupSpec::new(name.clone(), weight, population)
            .map_err(|e| Error::invalid(format!("{source}, line {line}, row `{name}`: {e}")))?;
        if !seen.insert(name.clone()) {
            return Err(Error::invalid(format!(
                "{source}, line {line}, row `{name}`: duplicate group name"
            )));
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::invalid(format!("{source}: no groups")));
    }
    Ok(WeightTable {
        rows,
        source: source.to_string(),
    })
}

fn csv_error(e: csv::Error, source: &str) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    Error::Parse {
        source_name: source.to_string(),
        line,
        message: e.to_string(),
    }
}

pub fn load_table(path: &Path) -> Result<WeightTable> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_weights(file, &path.display().to_string())
}

pub fn load_weights(path: &Path) -> Result<Game> {
    Ok(load_table(path)?.to_game()?)
}

/// Writes `game` in the format read by [`parse_weights`]. Numbers use the
/// shortest representation that reads back to the same value.
pub fn write_weights<W: Write>(game: &Game, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let with_pop = game.populations().is_some();
    let io = |e: csv::Error| Error::invalid(format!("writing weight table: {e}"));
    if with_pop {
        w.write_record(["name", "weight", "population"])
            .map_err(io)?;
    } else {
        w.write_record(["name", "weight"]).map_err(io)?;
    }
    for g in game.groups() {
        let mut rec = vec![g.name.clone(), g.weight.to_string()];
        if let (true, Some(p)) = (with_pop, g.population) {
            rec.push(p.to_string());
        }
        w.write_record(&rec).map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::invalid(format!("writing weight table: {e}")))?;
    Ok(())
}

pub fn export_weights(game: &Game, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_weights(game, file)
}
