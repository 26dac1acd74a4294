"""Truncated power series whose coefficients are multivariate polynomials.

A TruncSeries of order N holds the coefficients of Z^0 .. Z^N of a power
series in a distinguished variable Z; each coefficient is a MultiPoly over
a shared variable list (typically ("X", "Y")).  Operations never extend the
truncation order silently: the result order is the minimum of the inputs.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import comb, factorial
from typing import Iterable, List, Sequence, Union

from .errors import PrecisionError, StructureError
from .poly import MultiPoly, Scalar


class TruncSeries:
    """Immutable truncated series with MultiPoly coefficients."""

    __slots__ = ("order", "coeffs", "vars")

    def __init__(self, coeffs: Sequence[MultiPoly]):
        cs = tuple(coeffs)
        if not cs:
            raise StructureError("a series needs at least the constant coefficient")
        vs = cs[0].vars
        for c in cs:
            if c.vars != vs:
                raise StructureError("series coefficients over differing variables")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "order", len(cs) - 1)
        object.__setattr__(self, "vars", vs)

    def __setattr__(self, *_):
        raise AttributeError("TruncSeries is immutable")

    # ------------------------------------------------------------------

    @staticmethod
    def constant(variables: Iterable[str], c: Scalar, order: int) -> "TruncSeries":
        vs = tuple(variables)
        coeffs = [MultiPoly.const(vs, c)] + [
            MultiPoly.zero(vs) for _ in range(order)
        ]
        return TruncSeries(coeffs)

    @staticmethod
    def one(variables: Iterable[str], order: int) -> "TruncSeries":
        return TruncSeries.constant(variables, 1, order)

    def coefficient(self, k: int) -> MultiPoly:
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise StructureError("cannot extend truncation order")
        return TruncSeries(self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    # ------------------------------------------------------------------
    # ring operations

    def _common_order(self, other: "TruncSeries") -> int:
        if self.vars != other.vars:
            raise StructureError("series over differing variable lists")
        return min(self.order, other.order)

    def __add__(self, other: Union["TruncSeries", Scalar, MultiPoly]) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            c = other if isinstance(other, MultiPoly) else MultiPoly.const(self.vars, other)
            return TruncSeries((self.coeffs[0] + c,) + self.coeffs[1:])
        n = self._common_order(other)
        return TruncSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)]
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self + (-Q(other) if not isinstance(other, MultiPoly) else -other)
        return self + (-other)

    def __mul__(self, other: Union["TruncSeries", Scalar, MultiPoly]) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs])
        n = self._common_order(other)
        zero = MultiPoly.zero(self.vars)
        out: List[MultiPoly] = []
        for k in range(n + 1):
            acc = zero
            for i in range(k + 1):
                a = self.coeffs[i]
                b = other.coeffs[k - i]
                if a.terms and b.terms:
                    acc = acc + a * b
            out.append(acc)
        return TruncSeries(out)

    __rmul__ = __mul__

    # ------------------------------------------------------------------
    # analytic operations

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term.

        Uses the derivative recurrence k*g_k = sum_{j=1..k} j*s_j*g_{k-j},
        which is quadratic in the order overall.
        """
        if not self.coeffs[0].is_zero():
            raise PrecisionError("exp requires zero constant term")
        vs = self.vars
        g: List[MultiPoly] = [MultiPoly.const(vs, 1)]
        for k in range(1, self.order + 1):
            acc = MultiPoly.zero(vs)
            for j in range(1, k + 1):
                sj = self.coeffs[j]
                if sj.terms:
                    acc = acc + (sj * g[k - j]) * j
            g.append(acc * Q(1, k))
        return TruncSeries(g)

    def log(self) -> "TruncSeries":
        """log of a series with constant term 1 (derivative recurrence)."""
        if self.coeffs[0] != MultiPoly.const(self.vars, 1):
            raise PrecisionError("log requires constant term 1")
        vs = self.vars
        t: List[MultiPoly] = [MultiPoly.zero(vs)]
        for k in range(1, self.order + 1):
            acc = self.coeffs[k] * k
            for j in range(1, k):
                if t[j].terms:
                    acc = acc - (t[j] * self.coeffs[k - j]) * j
            t.append(acc * Q(1, k))
        return TruncSeries(t)

    def pow_poly(self, exponent: MultiPoly) -> "TruncSeries":
        """self ** exponent for a polynomial exponent, via exp(e * log self)."""
        if exponent.vars != self.vars:
            raise StructureError("exponent over differing variable list")
        return (self.log() * exponent).exp()

    def filter_every_nth(self, n: int) -> "TruncSeries":
        """Zero every coefficient of Z^k with n not dividing k."""
        if n <= 0:
            raise PrecisionError("filter stride must be positive")
        zero = MultiPoly.zero(self.vars)
        return TruncSeries(
            [c if k % n == 0 else zero for k, c in enumerate(self.coeffs)]
        )

    def __str__(self) -> str:
        parts = [f"({c})*Z^{k}" for k, c in enumerate(self.coeffs) if c.terms]
        return " + ".join(parts) if parts else "0"


# ----------------------------------------------------------------------
# deformed exponential series


def deformed_exp_general(
    alpha: MultiPoly, beta: MultiPoly, order: int
) -> TruncSeries:
    """Series whose Z^n coefficient is alpha^n * beta^C(n,2) / n!.

    alpha and beta are polynomials in the coefficient variables; alpha is
    the coefficient of Z in the first argument of the deformed exponential.
    """
    if alpha.vars != beta.vars:
        raise StructureError("alpha and beta over differing variable lists")
    coeffs = []
    for n in range(order + 1):
        coeffs.append((alpha**n) * (beta ** comb(n, 2)) * Q(1, factorial(n)))
    return TruncSeries(coeffs)


def deformed_exponential(
    scale: Scalar,
    order: int,
    *,
    beta_power: int = 1,
    alpha_y_power: int = 0,
    variables: Iterable[str] = ("X", "Y"),
) -> TruncSeries:
    """Deformed exponential sum alpha^n beta^C(n,2) / n! truncated at Z^order.

    The first argument is scale * Y^alpha_y_power * Z and the second is
    Y^beta_power, which covers every shape needed by the generating
    functions here: F(Z,Y), F(2Z,Y), F(-2Z,Y), F(Z,Y^2), F(YZ,Y^2).
    """
    if order < 0:
        raise StructureError("order must be non-negative")
    vs = tuple(variables)
    y = MultiPoly.var(vs, "Y")
    alpha = MultiPoly.const(vs, scale) * y**alpha_y_power
    beta = y**beta_power
    return deformed_exp_general(alpha, beta, order)
