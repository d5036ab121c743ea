use crate::error::{Error, Result};

/// Explicit resource limits. Exceeding one is an error, never a truncated answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Memo entries allowed during deletion–contraction.
    pub max_memo_entries: usize,
    /// Largest vertex count for `2^n` subset tables.
    pub max_table_vertices: usize,
    /// Cells (`(n+1)·2^n`) allowed in one ranked subset transform.
    pub max_table_cells: usize,
    /// Largest vertex count accepted by deletion–contraction.
    pub max_contraction_vertices: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_memo_entries: 4_000_000,
            max_table_vertices: 22,
            max_table_cells: 1 << 24,
            max_contraction_vertices: 30,
        }
    }
}

impl Budget {
    /// Applies one `KEY=VALUE` override.
    pub fn apply(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("expected KEY=VAL, got {assignment:?}")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("budget value {value:?}")))?;
        match key.trim() {
            "memo_entries" => self.max_memo_entries = value,
            "table_vertices" => self.max_table_vertices = value,
            "table_cells" => self.max_table_cells = value,
            "contraction_vertices" => self.max_contraction_vertices = value,
            other => return Err(Error::InvalidArgument(format!("unknown budget key {other:?}"))),
        }
        Ok(())
    }
}
