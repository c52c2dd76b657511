//! Partial Latin square completion encoded as a pair-merge question.
//!
//! Every missing symbol occurrence in a row or column and every empty cell
//! receives a numeric code. The codes are built over a base `q` large
//! enough that `cell = row + column` holds exactly for the codes of one
//! cell and one symbol's missing occurrences in its row and column, and for
//! no other combination. Completing the square is then the same as merging
//! one pair per empty cell.

use std::fmt;
use std::str::FromStr;

use super::pmpp::PmppInstance;
use crate::error::{Error, Result};

/// A cell coordinate; rows and columns are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PlscCell {
    pub row: usize,
    pub col: usize,
}

/// A partial Latin square of order `p`: a `p × p` grid over symbols
/// `1..=p`, no symbol repeating within a row or column, some cells empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlscInstance {
    order: usize,
    grid: Vec<Option<usize>>,
}

impl PlscInstance {
    pub fn new(order: usize, cells: impl Into<Vec<Option<usize>>>) -> Result<Self> {
        let grid = cells.into();
        if order == 0 || grid.len() != order * order {
            return Err(Error::InvalidInstance(format!(
                "order {order} needs {} cells, got {}",
                order * order,
                grid.len()
            )));
        }
        let inst = Self { order, grid };
        for (i, &cell) in inst.grid.iter().enumerate() {
            let Some(symbol) = cell else { continue };
            if symbol == 0 || symbol > order {
                return Err(Error::InvalidInstance(format!(
                    "symbol {symbol} outside 1..={order}"
                )));
            }
            let (row, col) = (i / order, i % order);
            let repeated = (0..order).any(|c| c != col && inst.get(row, c) == Some(symbol))
                || (0..order).any(|r| r != row && inst.get(r, col) == Some(symbol));
            if repeated {
                return Err(Error::InvalidInstance(format!(
                    "symbol {symbol} repeats in row {row} or column {col}"
                )));
            }
        }
        Ok(inst)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.grid[row * self.order + col]
    }

    /// The encoding base, chosen so distinct code groups cannot collide.
    pub fn base(&self) -> u64 {
        6 * self.order as u64 - 2
    }

    pub fn empty_cells(&self) -> Vec<PlscCell> {
        (0..self.order)
            .flat_map(|row| (0..self.order).map(move |col| PlscCell { row, col }))
            .filter(|c| self.get(c.row, c.col).is_none())
            .collect()
    }

    pub fn missing_in_row(&self, row: usize) -> Vec<usize> {
        (1..=self.order).filter(|&s| (0..self.order).all(|c| self.get(row, c) != Some(s))).collect()
    }

    pub fn missing_in_col(&self, col: usize) -> Vec<usize> {
        (1..=self.order).filter(|&s| (0..self.order).all(|r| self.get(r, col) != Some(s))).collect()
    }

    /// Code of symbol `symbol` missing from `row`: `q(2k - 1) - (2c - 1)`
    /// for the 1-based row `k` and symbol `c`.
    pub fn row_code(&self, row: usize, symbol: usize) -> u64 {
        let q = self.base();
        q * (2 * row as u64 + 1) - (2 * symbol as u64 - 1)
    }

    /// Code of symbol `symbol` missing from `col`: `q²(2l - 1) + (2c - 1)`.
    pub fn col_code(&self, col: usize, symbol: usize) -> u64 {
        let q = self.base();
        q * q * (2 * col as u64 + 1) + (2 * symbol as u64 - 1)
    }

    /// Code of an empty cell: `q²(2l - 1) + q(2k - 1)`, the sum of the row
    /// and column codes of any one symbol.
    pub fn cell_code(&self, cell: PlscCell) -> u64 {
        let q = self.base();
        q * q * (2 * cell.col as u64 + 1) + q * (2 * cell.row as u64 + 1)
    }

    /// The pair-merge question: the number list holds all row codes, column
    /// codes, and cell codes, and one pair must merge per empty cell. A
    /// completion pairs each cell code against the row and column codes of
    /// its symbol; conversely any merge of `k` pairs picks such a symbol
    /// assignment.
    pub fn to_pmpp(&self) -> Result<PmppInstance> {
        let mut numbers = collect_codes(self);
        let cells = self.empty_cells();
        if numbers.len() != 3 * cells.len() {
            return Err(Error::CollisionDetected(format!(
                "{} codes for {} empty cells",
                numbers.len(),
                cells.len()
            )));
        }
        let mut sorted = numbers.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != numbers.len() {
            return Err(Error::CollisionDetected("duplicate codes".into()));
        }
        numbers.sort_unstable();
        PmppInstance::new(numbers, cells.len())
    }

    /// Exhaustive completion search; orders up to 5 only.
    pub fn complete(&self) -> Result<Option<Vec<(PlscCell, usize)>>> {
        if self.order > 5 {
            return Err(Error::TooLarge(format!(
                "order {}; completion search supports up to 5",
                self.order
            )));
        }
        let mut work = self.clone();
        let mut assigned = Vec::new();
        if fill(&mut work, &mut assigned) {
            Ok(Some(assigned))
        } else {
            Ok(None)
        }
    }
}

fn collect_codes(inst: &PlscInstance) -> Vec<u64> {
    let mut codes = Vec::new();
    for row in 0..inst.order() {
        codes.extend(inst.missing_in_row(row).into_iter().map(|s| inst.row_code(row, s)));
    }
    for col in 0..inst.order() {
        codes.extend(inst.missing_in_col(col).into_iter().map(|s| inst.col_code(col, s)));
    }
    codes.extend(inst.empty_cells().into_iter().map(|c| inst.cell_code(c)));
    codes
}

fn fill(inst: &mut PlscInstance, assigned: &mut Vec<(PlscCell, usize)>) -> bool {
    let Some(cell) = inst.empty_cells().into_iter().next() else { return true };
    for symbol in 1..=inst.order {
        let blocked = (0..inst.order).any(|c| inst.get(cell.row, c) == Some(symbol))
            || (0..inst.order).any(|r| inst.get(r, cell.col) == Some(symbol));
        if blocked {
            continue;
        }
        inst.grid[cell.row * inst.order + cell.col] = Some(symbol);
        assigned.push((cell, symbol));
        if fill(inst, assigned) {
            return true;
        }
        assigned.pop();
        inst.grid[cell.row * inst.order + cell.col] = None;
    }
    false
}

impl FromStr for PlscInstance {
    type Err = Error;

    /// One row per line; `.`, `_`, or `0` marks an empty cell.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<Option<usize>>> = s
            .lines()
            .map(|l| l.trim())
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|tok| match tok {
                        "." | "_" | "0" => Ok(None),
                        _ => tok.parse::<usize>().map(Some).map_err(|_| {
                            Error::InvalidInstance(format!("bad cell token {tok:?}"))
                        }),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidInstance(format!(
                "need a square grid, got {} rows of varying width",
                order
            )));
        }
        PlscInstance::new(order, rows.into_iter().flatten().collect::<Vec<_>>())
    }
}

impl fmt::Display for PlscInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..self.order {
            for col in 0..self.order {
                if col > 0 {
                    write!(f, " ")?;
                }
                match self.get(row, col) {
                    Some(s) => write!(f, "{s}")?,
                    None => write!(f, ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
