"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is stored as a map from exponent tuples to nonzero Fractions,
relative to a fixed ordered tuple of variable names.  All arithmetic is
exact; there is no floating point anywhere in this package.
"""

from __future__ import annotations

import json
from fractions import Fraction as Q
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import ExactDivisionError, StructureError

Exps = Tuple[int, ...]
Scalar = Union[int, Q]


def _grlex_key(exps: Exps) -> Tuple[int, Exps]:
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial over Q in named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exps, Scalar]):
        vs = tuple(variables)
        canon: Dict[Exps, Q] = {}
        for exps, c in terms.items():
            if len(exps) != len(vs):
                raise StructureError(
                    f"exponent vector {exps} does not match variables {vs}"
                )
            q = Q(c)
            if q != 0:
                canon[tuple(exps)] = q
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, *_):
        raise AttributeError("MultiPoly is immutable")

    # ------------------------------------------------------------------
    # constructors

    @staticmethod
    def zero(variables: Iterable[str]) -> "MultiPoly":
        return MultiPoly(variables, {})

    @staticmethod
    def const(variables: Iterable[str], c: Scalar) -> "MultiPoly":
        vs = tuple(variables)
        return MultiPoly(vs, {(0,) * len(vs): Q(c)})

    @staticmethod
    def var(variables: Iterable[str], name: str, power: int = 1) -> "MultiPoly":
        vs = tuple(variables)
        if name not in vs:
            raise StructureError(f"unknown variable {name!r} among {vs}")
        exps = tuple(power if v == name else 0 for v in vs)
        return MultiPoly(vs, {exps: Q(1)})

    # ------------------------------------------------------------------
    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_term(self) -> Q:
        return self.terms.get((0,) * len(self.vars), Q(0))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def coefficient(self, exps: Exps) -> Q:
        return self.terms.get(tuple(exps), Q(0))

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # ------------------------------------------------------------------
    # arithmetic

    def _check_vars(self, other: "MultiPoly") -> None:
        if self.vars != other.vars:
            raise StructureError(
                f"variable lists differ: {self.vars} vs {other.vars}"
            )

    def _coerce(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check_vars(other)
            return other
        return MultiPoly.const(self.vars, other)

    def __add__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, Q(0)) + c
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = Q(other)
            return MultiPoly(self.vars, {e: cc * c for e, cc in self.terms.items()})
        self._check_vars(other)
        terms: Dict[Exps, Q] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Q(0)) + c1 * c2
        return MultiPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise StructureError("negative polynomial power")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # substitution, division, evaluation

    def substitute(self, bindings: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables; unbound variables pass through.

        The binding values (if any) fix the output variable list; it defaults
        to this polynomial's own list.  Every unbound variable must exist in
        the output list.
        """
        out_vars = self.vars
        for b in bindings.values():
            out_vars = b.vars
            break
        images = {}
        for v in self.vars:
            if v in bindings:
                img = bindings[v]
                if img.vars != out_vars:
                    raise StructureError("bindings use inconsistent variable lists")
                images[v] = img
            else:
                images[v] = MultiPoly.var(out_vars, v)
        result = MultiPoly.zero(out_vars)
        for exps, c in self.terms.items():
            term = MultiPoly.const(out_vars, c)
            for v, e in zip(self.vars, exps):
                if e:
                    term = term * images[v] ** e
            result = result + term
        return result

    def divide_exact(self, d: "MultiPoly") -> "MultiPoly":
        """Exact quotient self / d in the polynomial ring.

        Raises ExactDivisionError if d does not divide self.
        """
        self._check_vars(d)
        if d.is_zero():
            raise ExactDivisionError("division by zero polynomial")
        d_lead = max(d.terms, key=_grlex_key)
        d_lc = d.terms[d_lead]
        rem = self
        quot: Dict[Exps, Q] = {}
        while not rem.is_zero():
            r_lead = max(rem.terms, key=_grlex_key)
            t = tuple(a - b for a, b in zip(r_lead, d_lead))
            if any(e < 0 for e in t):
                raise ExactDivisionError("non-exact polynomial division")
            c = rem.terms[r_lead] / d_lc
            quot[t] = quot.get(t, Q(0)) + c
            rem = rem - MultiPoly(self.vars, {t: c}) * d
        return MultiPoly(self.vars, quot)

    def evaluate(self, values: Mapping[str, Scalar]) -> Q:
        """Evaluate at rational values given for every variable."""
        vals = []
        for v in self.vars:
            if v not in values:
                raise StructureError(f"no value for variable {v!r}")
            vals.append(Q(values[v]))
        total = Q(0)
        for exps, c in self.terms.items():
            t = c
            for val, e in zip(vals, exps):
                if e:
                    t *= val**e
            total += t
        return total

    def scale_denominator_cleared(self) -> Tuple["MultiPoly", int]:
        """Return (p * L, L) where L is the lcm of coefficient denominators."""
        lcm = 1
        for c in self.terms.values():
            d = c.denominator
            g = _gcd(lcm, d)
            lcm = lcm // g * d
        return self * lcm, lcm

    # ------------------------------------------------------------------
    # ordering, printing, serialization

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exps)
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars}, {self})"

    def to_json_dict(self, allow_rational: bool = False) -> dict:
        """Canonical JSON encoding.

        Integer coefficients are emitted as decimal strings; rationals as
        "p/q" only when allow_rational is set (intermediate dumps).
        """
        terms = []
        for exps, c in sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0])):
            if c.denominator == 1:
                coeff = str(c.numerator)
            elif allow_rational:
                coeff = f"{c.numerator}/{c.denominator}"
            else:
                raise StructureError(f"non-integer coefficient {c} in final output")
            terms.append({"coeff": coeff, "exps": list(exps)})
        return {"vars": list(self.vars), "terms": terms}

    def to_json(self, allow_rational: bool = False) -> str:
        return json.dumps(self.to_json_dict(allow_rational=allow_rational))

    @staticmethod
    def from_json_dict(data: dict) -> "MultiPoly":
        terms = {
            tuple(t["exps"]): Q(t["coeff"]) for t in data["terms"]
        }
        return MultiPoly(data["vars"], terms)

    @staticmethod
    def from_json(text: str) -> "MultiPoly":
        return MultiPoly.from_json_dict(json.loads(text))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
