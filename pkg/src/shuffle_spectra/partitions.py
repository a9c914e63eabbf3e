"""Integer partitions, Young diagram operations, and irreducible dimensions.

Partitions are plain tuples of positive integers in non-increasing order.
The empty tuple is the unique partition of 0.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

PARTITION_CAP = 100
EXACT_DIM_CAP = 30

# log table for hook lengths; hooks never exceed the partition size
_LOG_INT = [float("-inf")] + [math.log(k) for k in range(1, PARTITION_CAP + 2)]


class SizeLimitError(ValueError):
    """Raised when a request exceeds one of the hard size guards."""


def check_partition(parts):
    """Validate and normalize a partition to a tuple. Raises ValueError."""
    parts = tuple(int(p) for p in parts)
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {p}")
        if i + 1 < len(parts) and parts[i + 1] > p:
            raise ValueError(f"partition parts must be non-increasing: {parts}")
    return parts


def enumerate_partitions(n, cap=PARTITION_CAP):
    """All partitions of n in reverse-lexicographic order, starting at (n,)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise SizeLimitError(f"n={n} exceeds partition cap {cap}")
    return list(iter_partitions(n))


def iter_partitions(n):
    """Generator form of enumerate_partitions (no cap check)."""
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        # rightmost part greater than 1
        j = len(a) - 1
        while j >= 0 and a[j] == 1:
            j -= 1
        if j < 0:
            return
        # collapse everything from j on and refill greedily with a[j]-1
        total = a[j] + (len(a) - j - 1)
        x = a[j] - 1
        del a[j:]
        k, r = divmod(total, x)
        a.extend([x] * k)
        if r:
            a.append(r)


def transpose(parts):
    """Conjugate diagram: column lengths of the Young diagram of parts."""
    parts = check_partition(parts)
    if not parts:
        return ()
    t = [0] * parts[0]
    for p in parts:
        for j in range(p):
            t[j] += 1
    return tuple(t)


def hooks(parts):
    """Hook lengths of every box, row by row. List of length sum(parts)."""
    parts = check_partition(parts)
    if not parts:
        raise ValueError("hooks of the empty partition are undefined")
    tr = transpose(parts)
    out = []
    for i, p in enumerate(parts):
        for j in range(p):
            out.append((p - j) + (tr[j] - i) - 1)
    return out


@lru_cache(maxsize=None)
def _log_factorial(n):
    return math.lgamma(n + 1)


def log_dim(parts, tr=None):
    """log of the number of standard Young tableaux, via log n! - sum log hooks.

    Pass a precomputed transpose as tr to skip recomputing it in hot loops.
    """
    parts = check_partition(parts)
    n = sum(parts)
    if n == 0:
        return 0.0
    if tr is None:
        tr = transpose(parts)
    acc = _log_factorial(n)
    table = _LOG_INT
    limit = len(table)
    for i, p in enumerate(parts):
        for j in range(p):
            h = (p - j) + (tr[j] - i) - 1
            acc -= table[h] if h < limit else math.log(h)
    return acc


@dataclass(frozen=True)
class BigDim:
    """Dimension d of an irreducible block: exact integer when available plus log."""

    value: "int | None"
    log_value: float

    def __mul__(self, other):
        v = None
        if self.value is not None and other.value is not None:
            v = self.value * other.value
        return BigDim(v, self.log_value + other.log_value)

    def squared(self):
        v = self.value * self.value if self.value is not None else None
        return BigDim(v, 2.0 * self.log_value)


def exact_dim(parts):
    """Exact SYT count via the hook length formula. Guarded at EXACT_DIM_CAP."""
    parts = check_partition(parts)
    n = sum(parts)
    if n > EXACT_DIM_CAP:
        raise SizeLimitError(f"exact dimension limited to n <= {EXACT_DIM_CAP}")
    if n == 0:
        return 1
    return math.factorial(n) // math.prod(hooks(parts))


def dim(parts):
    """Dimension as a BigDim; exact value populated only up to EXACT_DIM_CAP."""
    parts = check_partition(parts)
    n = sum(parts)
    value = exact_dim(parts) if n <= EXACT_DIM_CAP else None
    return BigDim(value, log_dim(parts))


@dataclass(frozen=True)
class Corner:
    """A removable box: 1-based row index and the reduced partition of n-1."""

    row: int
    reduced: tuple


def corners(parts):
    """All removable corners of a nonempty partition, ascending row order."""
    parts = check_partition(parts)
    if not parts:
        raise ValueError("the empty partition has no corners")
    out = []
    k = len(parts)
    for i, p in enumerate(parts):
        if i + 1 == k or parts[i + 1] < p:
            if p > 1:
                reduced = parts[:i] + (p - 1,) + parts[i + 1:]
            else:
                reduced = parts[:i] + parts[i + 1:]
            out.append(Corner(i + 1, reduced))
    return out
