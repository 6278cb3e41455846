use crate::td::NiceTreeDecomposition;

/// Where a row came from: nothing (leaf), one child row, or a pair of rows
/// of the left and right child.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Origin {
    Leaf,
    Single(usize),
    Pair(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table<R> {
    pub rows: Vec<R>,
    /// `origins[i]` lists every child tuple the handler maps to `rows[i]`.
    pub origins: Vec<Vec<Origin>>,
}

impl<R> Default for Table<R> {
    fn default() -> Self {
        Table {
            rows: Vec::new(),
            origins: Vec::new(),
        }
    }
}

impl<R> Table<R> {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Computed,
    Purged,
}

/// A nice tree decomposition together with one table per node.
#[derive(Debug, Clone)]
pub struct Ttd<'t, R> {
    ntd: &'t NiceTreeDecomposition,
    tables: Vec<Table<R>>,
    phase: Phase,
}

impl<'t, R> Ttd<'t, R> {
    pub(crate) fn new(ntd: &'t NiceTreeDecomposition, tables: Vec<Table<R>>, phase: Phase) -> Self {
        assert_eq!(ntd.len(), tables.len(), "one table per node");
        Ttd { ntd, tables, phase }
    }

    pub fn ntd(&self) -> &'t NiceTreeDecomposition {
        self.ntd
    }

    pub fn table(&self, t: usize) -> &Table<R> {
        &self.tables[t]
    }

    pub fn tables(&self) -> &[Table<R>] {
        &self.tables
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }
}
