"""Definition-based computation of (arithmetic) Tutte polynomials.

The brute-force engine sweeps all 2^|A| subsets of a vector configuration,
computing each subset's rank and lattice-index multiplicity from the Smith
normal form of its coordinate matrix.  It is deliberately shortcut-free so
that it can serve as a trusted oracle for the other engines.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, Tuple

from .errors import CapacityError, ExactDivisionError, StructureError
from .lattice import VectorConfig, int_matrix_rank, snf_invariant_factors
from .poly import MultiPoly

TUTTE_VARS = ("x", "y")
COBOUNDARY_VARS = ("X", "Y")

DEFAULT_CAPACITY = 25


@dataclass(frozen=True)
class TuttePolynomial:
    poly: MultiPoly  # over ("x", "y")
    rank: int  # rank of the full configuration
    ambient_rank: int  # rank of the reference lattice
    flavor: str  # "classical" or "arithmetic"

    def __post_init__(self):
        if self.poly.vars != TUTTE_VARS:
            raise StructureError("Tutte polynomial must be over (x, y)")
        if self.flavor not in ("classical", "arithmetic"):
            raise StructureError(f"unknown flavor {self.flavor!r}")

    def evaluate(self, x, y) -> Q:
        return self.poly.evaluate({"x": x, "y": y})


@dataclass(frozen=True)
class CoboundaryPolynomial:
    poly: MultiPoly  # over ("X", "Y")
    rank: int

    def __post_init__(self):
        if self.poly.vars != COBOUNDARY_VARS:
            raise StructureError("coboundary polynomial must be over (X, Y)")

    def evaluate(self, X, Y) -> Q:
        return self.poly.evaluate({"X": X, "Y": Y})


# ----------------------------------------------------------------------
# brute force


def _subset_census(
    config: VectorConfig, arithmetic: bool, capacity: int
) -> Tuple[Dict[Tuple[int, int], int], int]:
    """Sweep all subsets; return {(rank, size): total multiplicity} and r(A)."""
    n = len(config)
    if n > capacity:
        raise CapacityError(
            f"{n} vectors exceeds the brute-force capacity guard of {capacity}"
        )
    d = config.lattice.rank
    cols = config.coord_matrix  # tuple of columns, each length d
    counts: Dict[Tuple[int, int], int] = {}
    for mask in range(1 << n):
        indices = [i for i in range(n) if mask >> i & 1]
        matrix = [[cols[j][i] for j in indices] for i in range(d)]
        if arithmetic:
            factors = snf_invariant_factors(matrix)
            rank = len(factors)
            mult = 1
            for f in factors:
                mult *= f
        else:
            rank = int_matrix_rank(matrix) if indices else 0
            mult = 1
        key = (rank, len(indices))
        counts[key] = counts.get(key, 0) + mult
    full_rank = int_matrix_rank([list(row) for row in zip(*cols)]) if n else 0
    return counts, full_rank


def _census_to_poly(counts: Dict[Tuple[int, int], int], full_rank: int) -> MultiPoly:
    xm1 = MultiPoly(TUTTE_VARS, {(1, 0): 1, (0, 0): -1})
    ym1 = MultiPoly(TUTTE_VARS, {(0, 1): 1, (0, 0): -1})
    xp = [MultiPoly.const(TUTTE_VARS, 1)]
    yp = [MultiPoly.const(TUTTE_VARS, 1)]
    max_x = max(full_rank - r for r, _ in counts) if counts else 0
    max_y = max(k - r for r, k in counts) if counts else 0
    for _ in range(max_x):
        xp.append(xp[-1] * xm1)
    for _ in range(max_y):
        yp.append(yp[-1] * ym1)
    total = MultiPoly.zero(TUTTE_VARS)
    for (r, k), w in counts.items():
        total = total + xp[full_rank - r] * yp[k - r] * w
    return total


def arithmetic_tutte_bruteforce(
    config: VectorConfig, capacity: int = DEFAULT_CAPACITY
) -> TuttePolynomial:
    """Arithmetic Tutte polynomial by exact summation over all subsets."""
    counts, full_rank = _subset_census(config, arithmetic=True, capacity=capacity)
    return TuttePolynomial(
        poly=_census_to_poly(counts, full_rank),
        rank=full_rank,
        ambient_rank=config.lattice.rank,
        flavor="arithmetic",
    )


def classical_tutte_bruteforce(
    config: VectorConfig, capacity: int = DEFAULT_CAPACITY
) -> TuttePolynomial:
    """Classical Tutte polynomial: the same sweep with unit multiplicities."""
    counts, full_rank = _subset_census(config, arithmetic=False, capacity=capacity)
    return TuttePolynomial(
        poly=_census_to_poly(counts, full_rank),
        rank=full_rank,
        ambient_rank=config.lattice.rank,
        flavor="classical",
    )


# ----------------------------------------------------------------------
# coboundary <-> Tutte transforms


def coboundary_from_tutte(t: TuttePolynomial) -> CoboundaryPolynomial:
    """psi(X, Y) = (y-1)^r M(x, y) under x = (X+Y-1)/(Y-1), y = Y.

    Since the x-degree of M is at most r, each monomial x^i y^j maps to the
    polynomial (X+Y-1)^i (Y-1)^(r-i) Y^j and no division is needed.
    """
    r = t.rank
    if t.poly.degree_in("x") > r:
        raise StructureError("x-degree exceeds the stated rank")
    xy1 = MultiPoly(COBOUNDARY_VARS, {(1, 0): 1, (0, 1): 1, (0, 0): -1})  # X+Y-1
    ym1 = MultiPoly(COBOUNDARY_VARS, {(0, 1): 1, (0, 0): -1})  # Y-1
    yv = MultiPoly.var(COBOUNDARY_VARS, "Y")
    result = MultiPoly.zero(COBOUNDARY_VARS)
    for (i, j), c in t.poly.terms.items():
        result = result + xy1**i * ym1 ** (r - i) * yv**j * c
    return CoboundaryPolynomial(poly=result, rank=r)


def tutte_from_coboundary(
    c: CoboundaryPolynomial,
    ambient_rank: int,
    flavor: str = "arithmetic",
) -> TuttePolynomial:
    """Recover M(x, y) from psi: substitute X=(x-1)(y-1), Y=y, divide by (y-1)^r."""
    xm1ym1 = MultiPoly(
        TUTTE_VARS, {(1, 1): 1, (1, 0): -1, (0, 1): -1, (0, 0): 1}
    )  # (x-1)(y-1)
    yv = MultiPoly.var(TUTTE_VARS, "y")
    substituted = c.poly.substitute({"X": xm1ym1, "Y": yv})
    ym1 = MultiPoly(TUTTE_VARS, {(0, 1): 1, (0, 0): -1})
    try:
        quotient = substituted.divide_exact(ym1**c.rank)
    except ExactDivisionError as exc:
        raise ExactDivisionError(
            "coboundary polynomial is not divisible by (y-1)^rank; "
            "rank mismatch upstream"
        ) from exc
    return TuttePolynomial(
        poly=quotient, rank=c.rank, ambient_rank=ambient_rank, flavor=flavor
    )
