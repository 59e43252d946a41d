use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Front, FrontError, Sense, Solution};

/// On-disk representation of a front.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = FrontError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(FrontError::Parse {
                line: None,
                message: format!("unknown front format `{other}`"),
            }),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FrontFile {
    objectives: Vec<String>,
    #[serde(default)]
    senses: Option<Vec<Sense>>,
    solutions: Vec<SolutionRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SolutionRecord {
    id: String,
    f: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<Vec<f64>>,
}

/// Reads a front and converts every maximized column to minimization by negation.
///
/// `overrides` maps objective names to senses and wins over senses declared in
/// the file. Row order is preserved.
pub fn load_front<R: Read>(
    reader: R,
    format: Format,
    overrides: &[(String, Sense)],
) -> Result<Front, FrontError> {
    let (names, senses, solutions) = match format {
        Format::Csv => read_csv(reader)?,
        Format::Json => read_json(reader)?,
    };
    let mut senses = senses.unwrap_or_else(|| vec![Sense::Minimize; names.len()]);
    if senses.len() != names.len() {
        return Err(FrontError::Parse {
            line: None,
            message: format!(
                "{} senses given for {} objectives",
                senses.len(),
                names.len()
            ),
        });
    }
    for (col, sense) in overrides {
        let n = names
            .iter()
            .position(|name| name == col)
            .ok_or_else(|| FrontError::UnknownColumn(col.clone()))?;
        senses[n] = *sense;
    }
    // Validate before negating so non-finite values are reported against raw input.
    let mut front = Front::new(names, senses, solutions)?;
    for sol in &mut front.solutions {
        for (v, sense) in sol.f.iter_mut().zip(&front.senses) {
            if *sense == Sense::Maximize {
                *v = -*v;
            }
        }
    }
    Ok(front)
}

/// Writes a front so that [`load_front`] restores it exactly. Maximized columns
/// are written in their original orientation.
///
/// CSV carries ids and objective values only; senses and decision-variable
/// payloads need the JSON format.
pub fn write_front<W: Write>(
    front: &Front,
    mut writer: W,
    format: Format,
) -> Result<(), FrontError> {
    let io_err = |e: std::io::Error| FrontError::Parse {
        line: None,
        message: e.to_string(),
    };
    let raw = |sol: &Solution| -> Vec<f64> {
        sol.f
            .iter()
            .zip(&front.senses)
            .map(|(&v, s)| if *s == Sense::Maximize { -v } else { v })
            .collect()
    };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(writer);
            let mut header = vec!["id".to_string()];
            header.extend(front.objective_names.iter().cloned());
            w.write_record(&header).map_err(csv_err)?;
            for sol in &front.solutions {
                let mut record = vec![sol.id.clone()];
                record.extend(raw(sol).iter().map(|v| v.to_string()));
                w.write_record(&record).map_err(csv_err)?;
            }
            w.flush().map_err(io_err)?;
        }
        Format::Json => {
            let file = FrontFile {
                objectives: front.objective_names.clone(),
                senses: Some(front.senses.clone()),
                solutions: front
                    .solutions
                    .iter()
                    .map(|sol| SolutionRecord {
                        id: sol.id.clone(),
                        f: raw(sol),
                        x: sol.x.clone(),
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut writer, &file).map_err(|e| FrontError::Parse {
                line: None,
                message: e.to_string(),
            })?;
            writer.write_all(b"\n").map_err(io_err)?;
        }
    }
    Ok(())
}

type Parsed = (Vec<String>, Option<Vec<Sense>>, Vec<Solution>);

fn csv_err(e: csv::Error) -> FrontError {
    FrontError::Parse {
        line: e.position().map(|p| p.line() as usize),
        message: e.to_string(),
    }
}

fn read_csv<R: Read>(reader: R) -> Result<Parsed, FrontError> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr.headers().map_err(csv_err)?.clone();
    if header.get(0) != Some("id") {
        return Err(FrontError::Parse {
            line: Some(1),
            message: "header must start with `id`".into(),
        });
    }
    let names: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    let mut solutions = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(csv_err)?;
        let line = record.position().map(|p| p.line() as usize);
        let id = record.get(0).unwrap_or_default().to_string();
        if record.len() != names.len() + 1 {
            return Err(FrontError::Parse {
                line,
                message: format!(
                    "row `{id}` has {} fields, expected {}",
                    record.len(),
                    names.len() + 1
                ),
            });
        }
        let f = record
            .iter()
            .skip(1)
            .zip(&names)
            .map(|(field, col)| {
                field.parse::<f64>().map_err(|_| FrontError::Parse {
                    line,
                    message: format!("row `{id}`, column `{col}`: `{field}` is not a number"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        solutions.push(Solution { id, f, x: None });
    }
    Ok((names, None, solutions))
}

fn read_json<R: Read>(reader: R) -> Result<Parsed, FrontError> {
    let file: FrontFile = serde_json::from_reader(reader).map_err(|e| FrontError::Parse {
        line: Some(e.line()),
        message: e.to_string(),
    })?;
    let solutions = file
        .solutions
        .into_iter()
        .map(|r| Solution {
            id: r.id,
            f: r.f,
            x: r.x,
        })
        .collect();
    Ok((file.objectives, file.senses, solutions))
}
