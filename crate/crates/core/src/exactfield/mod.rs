//! Exact arithmetic over `Q` and the cyclotomic field `Q(e)`, `e = exp(2 pi i / 5)`.

mod cyclotomic;

pub use cyclotomic::{embed_complex, eps_embed, CycQ};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Field operation selector for [`cyc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`, reducing to the canonical basis.
pub fn cyc_arith(a: &CycQ, b: &CycQ, op: FieldOp) -> Result<CycQ, FieldError> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}
