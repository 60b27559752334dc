"""
Lower-bound instance families and their witnesses
"""

from ..common.exceptions import PreconditionViolationError
from ..models.small_matrix import SmallMatrix
from ..models.four_block_spec import FourBlockSpec
from ..models.brick_vector import BrickVector


def gen_lower_4block(t: int, n: int) -> FourBlockSpec:
    """
    A = I_t, B = -I_t, D the (t-1) x t bidiagonal (1, -1), C = (-I_{t-1} | 0).

    Kernel vectors repeat brick 0 in every brick and satisfy
    (n-1) y_i = n y_{i+1} on brick 0, which forces y_1 to be a multiple of
    n^(t-1).
    """
    if t < 2 or n < 2:
        raise PreconditionViolationError(f"Need t, n >= 2, got t={t}, n={n}")
    D = SmallMatrix.from_rows(
        [[1 if j == i else (-1 if j == i + 1 else 0) for j in range(t)] for i in range(t - 1)]
    )
    C = SmallMatrix.from_rows(
        [[-1 if j == i else 0 for j in range(t)] for i in range(t - 1)]
    )
    return FourBlockSpec(
        A=SmallMatrix.identity(t), B=SmallMatrix.identity(t, -1), C=C, D=D, n=n
    )


def witness_4block(t: int, n: int) -> BrickVector:
    """The kernel vector with brick 0 = (n^(t-1), n^(t-2)(n-1), ..., (n-1)^(t-1)) everywhere"""
    if t < 2 or n < 2:
        raise PreconditionViolationError(f"Need t, n >= 2, got t={t}, n={n}")
    y0 = tuple(n ** (t - i) * (n - 1) ** (i - 1) for i in range(1, t + 1))
    return BrickVector(y0, (y0,) * n)


def gen_lower_3block(n: int) -> FourBlockSpec:
    """B = 1, A = (1, -1), D = (1, 0), C = 0"""
    if n < 2:
        raise PreconditionViolationError(f"Need n >= 2, got n={n}")
    return FourBlockSpec(
        A=SmallMatrix.from_rows([[1, -1]]),
        B=SmallMatrix.from_rows([[1]]),
        C=SmallMatrix.zeros(1, 1),
        D=SmallMatrix.from_rows([[1, 0]]),
        n=n,
    )


def witness_3block(n: int) -> BrickVector:
    """(1, (n-1, n), (-1, 0), ..., (-1, 0)): a Graver element of infinity-norm n"""
    if n < 2:
        raise PreconditionViolationError(f"Need n >= 2, got n={n}")
    return BrickVector((1,), ((n - 1, n),) + ((-1, 0),) * (n - 1))
