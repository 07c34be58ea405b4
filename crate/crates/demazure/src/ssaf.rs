//! Semi-standard augmented fillings and the two constructions of atoms and keys.

use std::fmt;

use crate::perm::Permutation;
use crate::poly::{OperatorKind, Polynomial};
use crate::shape;
use crate::Error;

/// Default cap on |shape| + l(shape) for exhaustive enumeration.
pub const DEFAULT_BUDGET_CELLS: usize = 24;

/// Enumeration budget, overridable through `DEMAZURE_BUDGET_CELLS`.
pub fn default_budget() -> usize {
    std::env::var("DEMAZURE_BUDGET_CELLS").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET_CELLS)
}

/// A cell of an augmented diagram. Columns are 0-based; row 0 is the basement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub column: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(column: usize, row: usize) -> Self {
        Cell { column, row }
    }
}

/// A filled augmented diagram. `columns[i]` lists column i bottom to top,
/// without the basement entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ssaf {
    basement: Permutation,
    columns: Vec<Vec<u32>>,
}

impl Ssaf {
    /// Basement only.
    pub fn empty(basement: Permutation) -> Self {
        let k = basement.n();
        Ssaf { basement, columns: vec![Vec::new(); k] }
    }

    pub fn from_columns(basement: Permutation, columns: Vec<Vec<u32>>) -> Self {
        assert_eq!(basement.n(), columns.len(), "one column per basement cell");
        Ssaf { basement, columns }
    }

    /// The unique filling of partition shape `lam` over the identity basement:
    /// column j holds only j.
    pub fn dominant(lam: &[u32]) -> Self {
        let k = lam.len();
        let columns = lam.iter().enumerate().map(|(j, &h)| vec![j as u32 + 1; h as usize]).collect();
        Ssaf { basement: Permutation::identity(k), columns }
    }

    pub fn basement(&self) -> &Permutation {
        &self.basement
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn columns_mut(&mut self) -> &mut [Vec<u32>] {
        &mut self.columns
    }

    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn shape(&self) -> Vec<u32> {
        self.columns.iter().map(|c| c.len() as u32).collect()
    }

    pub fn height(&self) -> usize {
        self.columns.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        if cell.column >= self.width() {
            return None;
        }
        if cell.row == 0 {
            Some(self.basement.apply(cell.column + 1) as u32)
        } else {
            self.columns[cell.column].get(cell.row - 1).copied()
        }
    }

    /// Exponent of x_i is (number of entries equal to i, basement included) - 1.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.width()];
        for col in &self.columns {
            for &v in col {
                w[v as usize - 1] += 1;
            }
        }
        w
    }

    /// Checks column monotonicity and every Type A / Type B triple.
    pub fn validate(&self) -> bool {
        for (j, col) in self.columns.iter().enumerate() {
            let mut below = self.basement.apply(j + 1) as u32;
            for &v in col {
                if v == 0 || v > below {
                    return false;
                }
                below = v;
            }
        }
        triples(&self.shape()).iter().all(|t| {
            let [x, y, z] = t.map(|c| self.get(c).unwrap());
            is_inversion_triple(x, y, z)
        })
    }

    /// Row word reading: rows bottom to top, entries of each row sorted ascending.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        (1..=self.height())
            .map(|r| {
                let mut row: Vec<u32> = self.columns.iter().filter_map(|c| c.get(r - 1).copied()).collect();
                row.sort_unstable();
                row
            })
            .collect()
    }
}

impl fmt::Display for Ssaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in (0..=self.height()).rev() {
            let cells: Vec<String> = (0..self.width())
                .map(|j| self.get(Cell::new(j, r)).map_or(".".to_string(), |v| v.to_string()))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Top row first, down to the basement; left to right within a row.
pub fn reading_order(shape: &[u32]) -> Vec<Cell> {
    let h = shape.iter().copied().max().unwrap_or(0) as usize;
    let mut out = Vec::new();
    for r in (0..=h).rev() {
        for (j, &s) in shape.iter().enumerate() {
            if r <= s as usize {
                out.push(Cell::new(j, r));
            }
        }
    }
    out
}

/// Not a coinversion triple, i.e. not (x <= z <= y).
pub fn is_inversion_triple(x: u32, y: u32, z: u32) -> bool {
    !(x <= z && z <= y)
}

/// All triples (X, Y, Z) of a shape. For columns i < j: when shape[i] >= shape[j]
/// (Type A) X is above Y in column i and Z is in X's row of column j; otherwise
/// (Type B) X is above Y in column j and Z is in Y's row of column i, basement
/// row included.
pub fn triples(shape: &[u32]) -> Vec<[Cell; 3]> {
    let mut out = Vec::new();
    for i in 0..shape.len() {
        for j in i + 1..shape.len() {
            let (ai, aj) = (shape[i] as usize, shape[j] as usize);
            if ai >= aj {
                for r in 1..=aj {
                    out.push([Cell::new(i, r), Cell::new(i, r - 1), Cell::new(j, r)]);
                }
            } else {
                for r in 0..=ai {
                    out.push([Cell::new(j, r + 1), Cell::new(j, r), Cell::new(i, r)]);
                }
            }
        }
    }
    out
}

/// All SSAF with the given basement and shape.
pub fn enumerate(basement: &Permutation, shape: &[u32], budget: usize) -> Result<Vec<Ssaf>, Error> {
    let k = basement.n();
    assert_eq!(k, shape.len(), "shape and basement lengths differ");
    let needed = shape::size(shape) as usize + shape.len();
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    // fill row by row from the bottom; a triple is checked once its last cell is set
    let h = shape.iter().copied().max().unwrap_or(0) as usize;
    let order: Vec<Cell> =
        (1..=h).flat_map(|r| (0..k).filter(move |&j| r <= shape[j] as usize).map(move |j| Cell::new(j, r))).collect();
    let pos = |c: Cell| -> Option<usize> {
        if c.row == 0 {
            None
        } else {
            order.iter().position(|&d| d == c)
        }
    };
    let mut checks: Vec<Vec<[Cell; 3]>> = vec![Vec::new(); order.len()];
    for t in triples(shape) {
        match t.iter().filter_map(|&c| pos(c)).max() {
            Some(p) => checks[p].push(t),
            None => {
                let [x, y, z] = t.map(|c| basement.apply(c.column + 1) as u32);
                if !is_inversion_triple(x, y, z) {
                    return Ok(Vec::new());
                }
            }
        }
    }
    let mut f = Ssaf::empty(basement.clone());
    let mut out = Vec::new();
    fill(&order, &checks, 0, &mut f, &mut out);
    Ok(out)
}

fn fill(order: &[Cell], checks: &[Vec<[Cell; 3]>], idx: usize, f: &mut Ssaf, out: &mut Vec<Ssaf>) {
    if idx == order.len() {
        out.push(f.clone());
        return;
    }
    let c = order[idx];
    let below = f.get(Cell::new(c.column, c.row - 1)).unwrap();
    for v in 1..=below {
        f.columns[c.column].push(v);
        let ok = checks[idx].iter().all(|t| {
            let [x, y, z] = t.map(|d| f.get(d).unwrap());
            is_inversion_triple(x, y, z)
        });
        if ok {
            fill(order, checks, idx + 1, f, out);
        }
        f.columns[c.column].pop();
    }
}

fn weight_sum(fillings: &[Ssaf], nvars: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for f in fillings {
        p.add_term(f.weight(), 1);
    }
    p
}

/// A_α as the sum of x^F over SSAF(ε_k, α).
pub fn atom_by_fillings(alpha: &[u32], budget: usize) -> Result<Polynomial, Error> {
    let k = alpha.len();
    Ok(weight_sum(&enumerate(&Permutation::identity(k), alpha, budget)?, k))
}

/// A_α = θ_{ω_α^{-1}} x^λ.
pub fn atom_by_operators(alpha: &[u32]) -> Polynomial {
    let lam = shape::sort_desc(alpha);
    Polynomial::monomial(&lam).apply_perm(OperatorKind::Theta, &shape::omega(alpha).inverse())
}

/// κ_γ as the sum of x^F over SSAF(ε̄_k, reverse(γ)).
pub fn key_by_fillings(gamma: &[u32], budget: usize) -> Result<Polynomial, Error> {
    let k = gamma.len();
    let alpha = shape::reverse(gamma);
    Ok(weight_sum(&enumerate(&Permutation::longest(k), &alpha, budget)?, k))
}

/// κ_γ = π_{ε̄_k ω_α^{-1}} x^λ with α = reverse(γ).
pub fn key_by_operators(gamma: &[u32]) -> Polynomial {
    let k = gamma.len();
    let alpha = shape::reverse(gamma);
    let lam = shape::sort_desc(&alpha);
    let sigma = Permutation::longest(k).compose(&shape::omega(&alpha).inverse());
    Polynomial::monomial(&lam).apply_perm(OperatorKind::Pi, &sigma)
}
