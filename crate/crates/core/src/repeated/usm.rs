use crate::error::Result;
use crate::oracle::CountedObjective;
use crate::scalar::Scalar;
use crate::set::ElementSet;

/// Deterministic double greedy for unconstrained maximization over subsets of
/// `a`. Returns `X` with `f(X) >= max_{B ⊆ A} f(B) / 3`, and `f(X)`.
///
/// Visits `a` in ascending order keeping `X ⊆ Y`; each element is added to
/// `X` when `f(u | X) >= f(Y - u) - f(Y)` and dropped from `Y` otherwise.
/// Makes `2|A| + 2` value queries.
pub fn usm_double_greedy<T: Scalar>(
    a: &ElementSet,
    f: &CountedObjective<'_, T>,
) -> Result<(ElementSet, T)> {
    let mut x = ElementSet::new();
    let mut y = a.clone();
    let mut fx = f.value(x.as_slice())?;
    let mut fy = f.value(y.as_slice())?;
    for u in a {
        let x_plus = x.with(u);
        let y_minus = y.without(u);
        let fxu = f.value(x_plus.as_slice())?;
        let fyu = f.value(y_minus.as_slice())?;
        if fxu - fx >= fyu - fy {
            x = x_plus;
            fx = fxu;
        } else {
            y = y_minus;
            fy = fyu;
        }
    }
    debug_assert_eq!(x, y);
    Ok((x, fx))
}
