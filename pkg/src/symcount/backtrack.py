"""Exhaustive count by depth-first search over upper-triangle entries.

Entries a[j][k] (j < k) are assigned in row-major pair order
(0,1), (0,2), ..., (0,n-1), (1,2), ...  while residual row sums are
maintained.  A value is admissible when it leaves both touched residuals
non-negative; the last entry of each row is forced to the row's residual,
which implements the completed-row pruning rule.  Every assignment counts
as one search node against the budget.
"""

from .errors import BudgetExceeded
from .instance import CountValue, trivial_count

DEFAULT_NODE_BUDGET = 10**8


def count_backtracking(inst, node_budget=DEFAULT_NODE_BUDGET):
    """Count matrices for `inst` exactly by backtracking.

    Parameters
    ----------
    inst : Instance
    node_budget : int
        Maximum number of entry assignments to explore.  Instances with
        a closed form (odd n*l, l = 0, n <= 2) return without search.

    Returns
    -------
    CountValue with method "backtracking".

    Raises
    ------
    BudgetExceeded if the search tree is larger than the budget.
    """
    known = trivial_count(inst)
    if known is not None:
        return CountValue(inst.n, inst.l, known, "backtracking")

    n, l = inst.n, inst.l
    residual = [l] * n
    nodes = 0

    def descend(j, k):
        nonlocal nodes
        if j == n - 1:
            # all rows closed; the forced assignments guarantee residuals 0..n-2
            return 1 if residual[n - 1] == 0 else 0
        if k == n - 1:
            # last entry of row j is forced to the row residual
            v = residual[j]
            if v > residual[k]:
                return 0
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(nodes, node_budget)
            residual[j] -= v
            residual[k] -= v
            total = descend(j + 1, j + 2)
            residual[j] += v
            residual[k] += v
            return total
        total = 0
        for v in range(min(residual[j], residual[k]) + 1):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(nodes, node_budget)
            residual[j] -= v
            residual[k] -= v
            total += descend(j, k + 1)
            residual[j] += v
            residual[k] += v
        return total

    value = descend(0, 1)
    return CountValue(n, l, value, "backtracking")
