"""Arm sequences and the notion of an illegal box.

An arm sequence over rank ``n`` is an integer sequence ``A_1, A_2, ...``
subject to two conditions:

  (i)  t - 1 <= A_t <= (n - 1) t          for every t >= 1,
  (ii) A_(t+u) is A_t + A_u or A_t + A_u + 1   for every t, u >= 1.

A box ``b`` of a partition is illegal for ``A`` when ``hook(b) = n t`` for
some positive ``t`` and ``arm(b) = A_t``; a partition with no illegal box
is regular.  Sequences are either formula-backed (the "horizontal" choice
``A_t = ceil(n t / 2) - 1``) or table-backed; queries past a table's end
raise rather than extrapolate, since a silent guess could break (ii).
"""

from __future__ import annotations

import random
from typing import Iterable, NamedTuple, Sequence

from . import _backend
from .errors import (
    AxiomIIViolation,
    AxiomIViolation,
    BoxOutside,
    EmptyArmTable,
    HorizonExceedsTable,
    ParseError,
)
from .partitions import Box, Partition, arm, check_rank, hook

ARM_HORIZONTAL = 0
ARM_TABLE = 1


def horizontal_value(n: int, t: int) -> int:
    """A_t = ceil(n t / 2) - 1, the height-ordered arm sequence."""
    return (n * t + 1) // 2 - 1


class ArmSequence:
    """Rank ``n`` plus a provider for the values ``A_t``.

    ``values is None`` means the horizontal formula; otherwise a finite
    table defined for ``1 <= t <= len(values)``.  ``descriptor`` records
    how the sequence was obtained ("horizontal", "file:PATH",
    "random:SEED:T") and travels into exported graphs.
    """

    __slots__ = ("n", "values", "descriptor")

    def __init__(self, n: int, values: Sequence[int] | None = None,
                 descriptor: str | None = None):
        check_rank(n)
        self.n = n
        self.values = None if values is None else tuple(values)
        self.descriptor = descriptor

    @property
    def horizon(self) -> int | None:
        """Largest queryable t, or None when formula-backed."""
        return None if self.values is None else len(self.values)

    def value(self, t: int) -> int:
        if t < 1:
            raise ValueError(f"arm sequences start at t = 1, got {t}")
        if self.values is None:
            return horizontal_value(self.n, t)
        if t > len(self.values):
            raise HorizonExceedsTable(t, len(self.values))
        return self.values[t - 1]

    def __getitem__(self, t: int) -> int:
        return self.value(t)

    def kernel_spec(self) -> tuple[int, tuple[int, ...] | None]:
        if self.values is None:
            return ARM_HORIZONTAL, None
        return ARM_TABLE, self.values

    def __repr__(self):
        if self.descriptor:
            return f"ArmSequence(n={self.n}, {self.descriptor!r})"
        return f"ArmSequence(n={self.n}, table of length {self.horizon})"


class ArmViolation(NamedTuple):
    """One failed condition: axiom 1 at index t, or axiom 2 at (t, u)."""

    axiom: int
    t: int
    u: int | None = None


def horizontal_arm(n: int) -> ArmSequence:
    check_rank(n)
    return ArmSequence(n, None, "horizontal")


def unchecked_arm(n: int, values: Iterable[int],
                  descriptor: str | None = None) -> ArmSequence:
    """Table-backed sequence with no validation; feed to :func:`validate_arm`."""
    values = tuple(values)
    if not values:
        raise EmptyArmTable("arm table must be nonempty")
    return ArmSequence(n, values, descriptor)


def validate_arm(a: ArmSequence, horizon: int) -> list[ArmViolation]:
    """Every failed condition with t (and t + u) up to ``horizon``.

    Checks axiom (i) for all t, then axiom (ii) for all pairs t <= u with
    t + u <= horizon; the pairwise sweep is quadratic, which is fine at
    the scales these tables see.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if a.horizon is not None and horizon > a.horizon:
        raise HorizonExceedsTable(horizon, a.horizon)
    bad = []
    for t in range(1, horizon + 1):
        if not (t - 1 <= a.value(t) <= (a.n - 1) * t):
            bad.append(ArmViolation(1, t))
    for t in range(1, horizon):
        for u in range(t, horizon - t + 1):
            lo = a.value(t) + a.value(u)
            if a.value(t + u) not in (lo, lo + 1):
                bad.append(ArmViolation(2, t, u))
    bad.sort(key=lambda v: (v.axiom, v.t, v.u if v.u is not None else 0))
    return bad


def arm_from_values(n: int, values: Iterable[int],
                    descriptor: str | None = None) -> ArmSequence:
    """Table-backed sequence, validated on construction over its full length."""
    a = unchecked_arm(n, values, descriptor)
    bad = validate_arm(a, a.horizon)
    if bad:
        v = bad[0]
        if v.axiom == 1:
            raise AxiomIViolation(v.t, a.value(v.t), n)
        raise AxiomIIViolation(v.t, v.u, a.value(v.t + v.u),
                               a.value(v.t) + a.value(v.u))
    return a


def arm_from_file(n: int, path: str) -> ArmSequence:
    """Load whitespace-separated integers A_1 A_2 ... from a text file."""
    with open(path) as fh:
        tokens = fh.read().split()
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise ParseError(f"bad arm table in {path}: {exc}") from None
    return arm_from_values(n, values, f"file:{path}")


def random_arm(n: int, horizon: int, seed: int) -> ArmSequence:
    """A uniformly-extended valid table of length ``horizon``.

    Each A_t is drawn (reproducibly, from ``seed``) from the intersection
    of the axiom (i) range with every window [A_s + A_(t-s),
    A_s + A_(t-s) + 1]; that intersection is nonempty whenever the prefix
    is valid, so an empty range can only mean a bug and raises.
    """
    check_rank(n)
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    rng = random.Random(seed)
    values: list[int] = []
    for t in range(1, horizon + 1):
        lo, hi = t - 1, (n - 1) * t
        for s in range(1, t):
            base = values[s - 1] + values[t - s - 1]
            lo = max(lo, base)
            hi = min(hi, base + 1)
        if lo > hi:
            raise RuntimeError(
                f"empty choice set at t = {t}; prefix {values} should admit "
                "an extension"
            )
        values.append(rng.randint(lo, hi))
    return ArmSequence(n, values, f"random:{seed}:{horizon}")


def arm_from_descriptor(n: int, text: str) -> ArmSequence:
    """Build from CLI-style text: horizontal | file:PATH | random:SEED:T."""
    if text == "horizontal":
        return horizontal_arm(n)
    if text.startswith("file:"):
        return arm_from_file(n, text[len("file:"):])
    if text.startswith("random:"):
        fields = text.split(":")
        if len(fields) != 3:
            raise ParseError(f"expected random:SEED:T, got {text!r}")
        try:
            seed, horizon = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"expected random:SEED:T, got {text!r}") from None
        return random_arm(n, horizon, seed)
    raise ParseError(f"unknown arm sequence {text!r}")


def is_illegal_box(lam: Partition, b: Box, a: ArmSequence) -> bool:
    """True when hook(b) is a positive multiple n t of n and arm(b) = A_t."""
    if not lam.contains(b):
        raise BoxOutside(f"{b} not inside {lam}")
    h = hook(lam, b)
    if h % a.n != 0:
        return False
    return arm(lam, b) == a.value(h // a.n)


def is_regular(lam: Partition, a: ArmSequence) -> bool:
    """Membership test for the regular set: no box of ``lam`` is illegal."""
    kind, table = a.kernel_spec()
    return _backend.kernel.is_regular(lam.parts, a.n, kind, table)
