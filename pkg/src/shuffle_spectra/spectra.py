"""Closed-form eigenvalue spectra of random transpositions and star transpositions.

Both chains on S_n are simultaneously diagonalizable; every eigenvalue is
indexed by a partition of n (random transpositions) or by a removable corner
of a partition of n (star transpositions). Eigenvalues are exact rationals.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .partitions import (
    EXACT_DIM_CAP,
    PARTITION_CAP,
    BigDim,
    SizeLimitError,
    check_partition,
    corners,
    dim,
    enumerate_partitions,
    transpose,
)

EXACT_TRACE_CAP = 12

CHAINS = ("rt", "star")


@dataclass(frozen=True)
class RtEig:
    """One random-transpositions eigenvalue: s = 1/n + ((n-1)/n) r, mult d^2."""

    lam: tuple
    r: Fraction
    s: Fraction
    mult: BigDim


@dataclass(frozen=True)
class StarEig:
    """One star-transpositions eigenvalue, indexed by a removable corner."""

    lam: tuple
    corner_row: int
    reduced: tuple
    s_bar: Fraction
    mult: BigDim


@dataclass(frozen=True)
class SpectralBlock:
    """All eigenvalues attached to one partition of n."""

    lam: tuple
    rt: RtEig
    star: "tuple[StarEig, ...] | None"


def _check_chain(chain):
    if chain not in CHAINS:
        raise ValueError(f"chain must be one of {CHAINS}, got {chain!r}")


def rt_r(parts):
    """The normalized character ratio r of the transposition class at parts."""
    parts = check_partition(parts)
    n = sum(parts)
    if n < 2:
        raise ValueError("need a partition of n >= 2")
    num = sum(comb(p, 2) for p in parts) - sum(comb(q, 2) for q in transpose(parts))
    return Fraction(num, comb(n, 2))


def rt_eigenvalue(parts):
    """Random-transpositions eigenvalue block for one partition."""
    parts = check_partition(parts)
    n = sum(parts)
    if n < 2:
        raise ValueError("need a partition of n >= 2")
    r = rt_r(parts)
    s = Fraction(1, n) + Fraction(n - 1, n) * r
    return RtEig(parts, r, s, dim(parts).squared())


def star_eigenvalues(parts):
    """Star-transpositions eigenvalues of one partition, one per corner."""
    parts = check_partition(parts)
    n = sum(parts)
    if n < 2:
        raise ValueError("need a partition of n >= 2")
    d = dim(parts)
    out = []
    for c in corners(parts):
        s_bar = Fraction(parts[c.row - 1] - c.row + 1, n)
        out.append(StarEig(parts, c.row, c.reduced, s_bar, d * dim(c.reduced)))
    return out


def full_spectrum(chain, n):
    """One SpectralBlock per partition of n, in enumeration order.

    chain="rt" leaves the star entries unpopulated; chain="star" fills both.
    """
    _check_chain(chain)
    if not 2 <= n <= PARTITION_CAP:
        raise ValueError(f"n must be in [2, {PARTITION_CAP}]")
    blocks = []
    for lam in enumerate_partitions(n):
        star = tuple(star_eigenvalues(lam)) if chain == "star" else None
        blocks.append(SpectralBlock(lam, rt_eigenvalue(lam), star))
    return blocks


def spectrum_trace(chain, n):
    """Exact rational sum of mult * eigenvalue; equals (n-1)! for both chains."""
    _check_chain(chain)
    if not 2 <= n <= EXACT_TRACE_CAP:
        raise ValueError(f"exact trace limited to n in [2, {EXACT_TRACE_CAP}]")
    total = Fraction(0)
    for lam in enumerate_partitions(n):
        if chain == "rt":
            e = rt_eigenvalue(lam)
            total += e.mult.value * e.s
        else:
            for e in star_eigenvalues(lam):
                total += e.mult.value * e.s_bar
    return total


def total_multiplicity(chain, n):
    """Exact sum of multiplicities over all blocks; must equal n!."""
    _check_chain(chain)
    if n > EXACT_DIM_CAP:
        raise SizeLimitError(f"exact multiplicities limited to n <= {EXACT_DIM_CAP}")
    if chain == "rt":
        return sum(rt_eigenvalue(lam).mult.value for lam in enumerate_partitions(n))
    return sum(
        e.mult.value for lam in enumerate_partitions(n) for e in star_eigenvalues(lam)
    )


def spectrum_rows(chain, n):
    """Flat (partition, eigenvalue, multiplicity) rows for CSV export."""
    _check_chain(chain)
    if n > EXACT_DIM_CAP:
        raise SizeLimitError(f"exact multiplicities limited to n <= {EXACT_DIM_CAP}")
    rows = []
    for block in full_spectrum(chain, n):
        if chain == "rt":
            rows.append((block.lam, block.rt.s, block.rt.mult.value))
        else:
            for e in block.star:
                rows.append((block.lam, e.s_bar, e.mult.value))
    return rows
