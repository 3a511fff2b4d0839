//! JSON file formats for groups and braces.

use serde::{Deserialize, Serialize};

use crate::brace::{make_brace_from_tables, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{build_group, group_from_perm_generators, Bounds, FiniteGroup};

/// A group given by its Cayley table or by permutation generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table {
        name: Option<String>,
        order: usize,
        table: Vec<Vec<usize>>,
    },
    Perms {
        name: Option<String>,
        degree: usize,
        perm_generators: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceFile {
    pub name: Option<String>,
    pub order: usize,
    pub dot: Vec<Vec<usize>>,
    pub circle: Vec<Vec<usize>>,
}

fn parse<'a, T: Deserialize<'a>>(json: &'a str) -> Result<T> {
    serde_json::from_str(json).map_err(|e| Error::Invalid(format!("malformed JSON: {e}")))
}

fn check_order(what: &str, order: usize, rows: usize) -> Result<()> {
    if order != rows {
        return Err(Error::Invalid(format!("{what} declares order {order} but has {rows} rows")));
    }
    Ok(())
}

impl GroupFile {
    pub fn build(&self, bounds: &Bounds) -> Result<FiniteGroup> {
        match self {
            GroupFile::Table { name, order, table } => {
                check_order("table", *order, table.len())?;
                if *order > bounds.carrier {
                    return Err(Error::size_limit("group", *order as u128, bounds.carrier as u128));
                }
                build_group(table, name.as_deref())
            }
            GroupFile::Perms {
                name,
                degree,
                perm_generators,
            } => group_from_perm_generators(*degree, perm_generators, name.as_deref(), bounds),
        }
    }

    pub fn from_group(g: &FiniteGroup) -> GroupFile {
        GroupFile::Table {
            name: g.name().map(str::to_string),
            order: g.order(),
            table: g.table_rows(),
        }
    }
}

impl BraceFile {
    pub fn build(&self, bounds: &Bounds) -> Result<SkewBrace> {
        check_order("dot", self.order, self.dot.len())?;
        check_order("circle", self.order, self.circle.len())?;
        if self.order > bounds.carrier {
            return Err(Error::size_limit("brace", self.order as u128, bounds.carrier as u128));
        }
        make_brace_from_tables(&self.dot, &self.circle, self.name.as_deref())
    }

    pub fn from_brace(b: &SkewBrace) -> BraceFile {
        BraceFile {
            name: b.name().map(str::to_string),
            order: b.order(),
            dot: b.dot().table_rows(),
            circle: b.circle().table_rows(),
        }
    }
}

pub fn load_group_json(json: &str, bounds: &Bounds) -> Result<FiniteGroup> {
    parse::<GroupFile>(json)?.build(bounds)
}

pub fn load_brace_json(json: &str, bounds: &Bounds) -> Result<SkewBrace> {
    parse::<BraceFile>(json)?.build(bounds)
}
