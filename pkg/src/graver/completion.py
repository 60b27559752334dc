"""
Graver basis by completion

Starts from a symmetric lattice basis of ker(M) and closes it under
normal-form reduction of pairwise sums until no new irreducible vector
appears. The result is then filtered down to its ⊑-minimal elements.
"""

import logging
import time
from collections import deque
from typing import List, Optional, Sequence

from ..common import system_logger, log_function_calls
from ..common.enums import GraverMethod
from ..common.exceptions import BudgetExceededError
from ..config.settings import config_manager
from ..models.small_matrix import SmallMatrix, IntVector
from ..models.graver_set import GraverSet
from .order import conforms, minimal_elements

logger = logging.getLogger(__name__)


def kernel_lattice_basis(M: SmallMatrix) -> List[IntVector]:
    """
    Integer basis of the lattice ker(M) ∩ Z^cols.

    Column operations on [M; I] bring M to lower echelon form; the identity
    part of the columns that became zero on M spans the kernel lattice.
    """
    m, d = M.rows, M.cols
    columns = [
        list(M.column(j)) + [1 if k == j else 0 for k in range(d)] for j in range(d)
    ]
    pivot = 0
    for i in range(m):
        while True:
            nonzero = [k for k in range(pivot, d) if columns[k][i] != 0]
            if len(nonzero) <= 1:
                break
            k_min = min(nonzero, key=lambda k: (abs(columns[k][i]), k))
            for k in nonzero:
                if k != k_min:
                    q = columns[k][i] // columns[k_min][i]
                    columns[k] = [a - q * b for a, b in zip(columns[k], columns[k_min])]
        nonzero = [k for k in range(pivot, d) if columns[k][i] != 0]
        if nonzero:
            k = nonzero[0]
            columns[pivot], columns[k] = columns[k], columns[pivot]
            pivot += 1
    return [tuple(c[m:]) for c in columns[pivot:]]


def normal_form(v: Sequence[int], reducers: Sequence[Sequence[int]]) -> IntVector:
    """Subtract reducers g ⊑ v until none conforms to the remainder"""
    current = tuple(v)
    reduced = True
    while reduced and any(current):
        reduced = False
        for g in reducers:
            if conforms(g, current):
                current = tuple(a - b for a, b in zip(current, g))
                reduced = True
                break
    return current


@log_function_calls(system_logger)
def graver_complete(M: SmallMatrix, element_budget: Optional[int] = None) -> GraverSet:
    """
    The full Graver basis of M.

    Raises BudgetExceededError carrying a partial, uncertified GraverSet when
    the working set grows past `element_budget`.
    """
    if element_budget is None:
        element_budget = config_manager.config.budgets.completion_element_budget

    start = time.perf_counter()
    basis = kernel_lattice_basis(M)
    working: List[IntVector] = []
    for b in basis:
        working.append(b)
        working.append(tuple(-a for a in b))

    known = set(working)
    pending = deque(
        tuple(a + b for a, b in zip(f, g))
        for idx, f in enumerate(working)
        for g in working[idx + 1 :]
    )
    seen_sums = set(pending)

    while pending:
        s = pending.popleft()
        if not any(s):
            continue
        r = normal_form(s, working)
        if not any(r) or r in known:
            continue
        working.append(r)
        known.add(r)
        if len(working) > element_budget:
            partial = GraverSet(
                matrix=M,
                elements=frozenset(minimal_elements(working)),
                method=GraverMethod.COMPLETION,
                certified_complete=False,
            )
            raise BudgetExceededError(
                f"Completion exceeded {element_budget} elements",
                element_budget,
                partial=partial,
            )
        for g in working:
            t = tuple(a + b for a, b in zip(r, g))
            if t not in seen_sums:
                seen_sums.add(t)
                pending.append(t)

    elements = frozenset(minimal_elements(working))
    system_logger.log_engine_run(
        GraverMethod.COMPLETION.value,
        M.cols,
        len(elements),
        time.perf_counter() - start,
        {"lattice_rank": len(basis), "working_set": len(working)},
    )
    return GraverSet(
        matrix=M,
        elements=elements,
        method=GraverMethod.COMPLETION,
        certified_complete=True,
    )
