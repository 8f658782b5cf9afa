"""Laurent monomials in the variables Y(i,k) and their crystal operators.

A monomial is a finitely supported exponent map (residue i, integer k) ->
nonzero integer.  The operators multiply by

    A(i,k) = Y(i,k-1) Y(i,k+1) Y(i+1,k)^-1 Y(i-1,k)^-1

(residues mod n) at a position read off either from the running-sum
statistics eps/phi/p/q or, equivalently, from a bracket string holding one
``(`` per positive exponent unit and one ``)`` per negative unit, ordered
by decreasing k.  Both definitions are implemented and tested against each
other.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .brackets import CLOSE, OPEN, BracketString
from .errors import (
    CompatibilityUndefinedForOddN,
    ParseError,
    ResidueOutOfRange,
    ZeroExponent,
)
from .partitions import check_rank


class Monomial:
    """Immutable product of Y(i,k)^u factors over a fixed rank n.

    Equality and hashing use the canonical form (zero exponents dropped,
    residues reduced mod n), so monomials work as dictionary keys during
    graph generation.
    """

    __slots__ = ("n", "_exp", "_key")

    def __init__(self, n: int, exponents: dict | None = None):
        check_rank(n)
        exp = {}
        if exponents:
            for (i, k), u in exponents.items():
                if u == 0:
                    continue
                key = (i % n, k)
                exp[key] = exp.get(key, 0) + u
                if exp[key] == 0:
                    del exp[key]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(
            self,
            "_key",
            tuple(sorted(exp.items(), key=lambda item: (-item[0][1], item[0][0]))),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def exponent(self, i: int, k: int) -> int:
        return self._exp.get((i % self.n, k), 0)

    def factors(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """((i, k), u) pairs sorted by decreasing k, then increasing i."""
        return self._key

    def support(self, i: int) -> list[int]:
        """The k with nonzero exponent at residue i, increasing."""
        i %= self.n
        return sorted(k for (j, k) in self._exp if j == i)

    def is_one(self) -> bool:
        return not self._exp

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot multiply monomials over different ranks")
        exp = dict(self._exp)
        for key, u in other._exp.items():
            exp[key] = exp.get(key, 0) + u
        return Monomial(self.n, exp)

    def __pow__(self, e: int) -> "Monomial":
        return Monomial(self.n, {key: u * e for key, u in self._exp.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.n == other.n
            and self._key == other._key
        )

    def __hash__(self):
        return hash((self.n, self._key))

    def __repr__(self):
        return f"Monomial(n={self.n}, {format_monomial(self)!r})"

    def __str__(self):
        return format_monomial(self)


def y(n: int, i: int, k: int, power: int = 1) -> Monomial:
    """The single-variable monomial Y(i,k)^power."""
    return Monomial(n, {(i, k): power})


def one(n: int) -> Monomial:
    return Monomial(n)


_TERM_RE = re.compile(r"Y\((\d+),(-?\d+)\)(?:\^(-?\d+))?\Z")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``Y(i,k)`` factors joined by ``*``; ``1`` is the empty product."""
    check_rank(n)
    text = text.strip()
    if text == "1":
        return Monomial(n)
    if not text:
        raise ParseError("empty monomial text")
    exp: dict[tuple[int, int], int] = {}
    for term in text.split("*"):
        m = _TERM_RE.match(term)
        if m is None:
            raise ParseError(f"bad monomial factor {term!r}")
        i, k = int(m.group(1)), int(m.group(2))
        if not 0 <= i < n:
            raise ResidueOutOfRange(f"residue {i} outside [0, {n})")
        u = 1 if m.group(3) is None else int(m.group(3))
        if u == 0:
            raise ZeroExponent(f"factor {term!r} has exponent 0")
        exp[(i, k)] = exp.get((i, k), 0) + u
    return Monomial(n, exp)


def format_monomial(m: Monomial) -> str:
    """Canonical text: factors by decreasing k then increasing residue."""
    if m.is_one():
        return "1"
    terms = []
    for (i, k), u in m.factors():
        terms.append(f"Y({i},{k})" if u == 1 else f"Y({i},{k})^{u}")
    return "*".join(terms)


def mult_a(m: Monomial, i: int, k: int, sign: int = 1) -> Monomial:
    """Multiply by A(i,k)^sign with cancellation (sign is +1 or -1)."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    n = m.n
    i %= n
    factor = {
        (i, k - 1): sign,
        (i, k + 1): sign,
        ((i + 1) % n, k): -sign,
        ((i - 1) % n, k): -sign,
    }
    return m * Monomial(n, factor)


def weight(m: Monomial) -> dict[int, int]:
    """Coefficient of each fundamental weight: residue -> sum of exponents.

    Residues whose exponents sum to zero are omitted."""
    out: dict[int, int] = {}
    for (i, _), u in m.factors():
        out[i] = out.get(i, 0) + u
        if out[i] == 0:
            del out[i]
    return out


class MonomialStats(NamedTuple):
    """eps/phi and the extremal positions p/q (None when the count is 0)."""

    eps: int
    phi: int
    p: int | None
    q: int | None


def stats(m: Monomial, i: int) -> MonomialStats:
    """Running-sum statistics at residue i.

    eps maximizes -sum(u over l >= L) and p is the largest maximizing L;
    phi maximizes sum(u over l <= L) and q is the smallest maximizing L.
    Both partial sums are constant outside the support, so scanning the
    support points suffices: intervals of constancy close at a support
    point on the relevant side.
    """
    i %= m.n
    ks = m.support(i)
    eps, p = 0, None
    tail = 0
    for k in reversed(ks):
        tail += m.exponent(i, k)
        if -tail > eps:
            eps, p = -tail, k
    phi, q = 0, None
    head = 0
    for k in ks:
        head += m.exponent(i, k)
        if head > phi:
            phi, q = head, k
    return MonomialStats(eps, phi, p, q)


def monomial_bracket_string(m: Monomial, i: int) -> BracketString:
    """One '(' per positive unit and ')' per negative unit, decreasing k."""
    i %= m.n
    tokens = []
    for k in sorted(m.support(i), reverse=True):
        u = m.exponent(i, k)
        side = OPEN if u > 0 else CLOSE
        tokens.extend((side, (i, k)) for _ in range(abs(u)))
    return BracketString.build(tokens)


def _check_mode(mode: str) -> None:
    if mode not in ("analytic", "bracket"):
        raise ValueError(f"mode must be 'analytic' or 'bracket', got {mode!r}")


def e_m(m: Monomial, i: int, mode: str = "analytic") -> Monomial | None:
    """Raising operator: multiply by A(i, .), or None when eps is 0."""
    _check_mode(mode)
    if mode == "analytic":
        st = stats(m, i)
        if st.eps == 0:
            return None
        return mult_a(m, i, st.p - 1, +1)
    s = monomial_bracket_string(m, i)
    idx = s.rightmost_unmatched_close()
    if idx is None:
        return None
    _, k = s.payloads[idx]
    return mult_a(m, i, k - 1, +1)


def f_m(m: Monomial, i: int, mode: str = "analytic") -> Monomial | None:
    """Lowering operator: multiply by A(i, .)^-1, or None when phi is 0."""
    _check_mode(mode)
    if mode == "analytic":
        st = stats(m, i)
        if st.phi == 0:
            return None
        return mult_a(m, i, st.q + 1, -1)
    s = monomial_bracket_string(m, i)
    idx = s.leftmost_unmatched_open()
    if idx is None:
        return None
    _, k = s.payloads[idx]
    return mult_a(m, i, k + 1, -1)


def is_dominant(m: Monomial) -> bool:
    """All exponents nonnegative."""
    return all(u >= 0 for _, u in m.factors())


def is_compatible(m: Monomial) -> bool:
    """Support obeys k = i mod 2; only defined for even rank."""
    if m.n % 2 != 0:
        raise CompatibilityUndefinedForOddN(
            f"compatibility needs even rank, got n = {m.n}"
        )
    return all(k % 2 == i % 2 for (i, k), _ in m.factors())
