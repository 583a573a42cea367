//! Small hand-built relations with known module structure.

use crate::relation::HomogeneousRelation;

/// Labels of [`relation_k`], in index order.
pub const K_LABELS: [&str; 4] = ["x", "y", "s", "t"];

/// Labels of [`relation_l`], in index order.
pub const L_LABELS: [&str; 5] = ["x", "y", "s", "t", "z"];

/// Weakly graphic but not modular quotient: `{x,y}` is a module, yet `x`
/// separates `s` from `t` while `y` does not.
pub fn relation_k() -> HomogeneousRelation {
    let (x, y, s, t) = (0, 1, 2, 3);
    HomogeneousRelation::from_class_lists(
        4,
        &[
            vec![vec![y], vec![s], vec![t]],
            vec![vec![x], vec![s, t]],
            vec![vec![x, y], vec![t]],
            vec![vec![x, y], vec![s]],
        ],
    )
    .expect("fixture K")
}

/// Prime (only trivial modules), hence vacuously modular quotient, but not
/// weakly digraphic.
pub fn relation_l() -> HomogeneousRelation {
    let (x, y, s, t, z) = (0, 1, 2, 3, 4);
    HomogeneousRelation::from_class_lists(
        5,
        &[
            vec![vec![s], vec![t, y, z]],
            vec![vec![s, t, x], vec![z]],
            vec![vec![x, y], vec![t, z]],
            vec![vec![x, y], vec![s, z]],
            vec![vec![x], vec![s, t, y]],
        ],
    )
    .expect("fixture L")
}

/// Three elements `a, b, c` where every slice is a single class, so every
/// subset is a module.
pub fn three_element() -> HomogeneousRelation {
    HomogeneousRelation::complete(3)
}
