"""Integer arithmetic on the five-parameter family.

Every function here is exact (Python integers) and invariant under
permutation of the tuple entries. Index permutations reported as witnesses
are 0-based: a witness ``(i1, i2, i3, i4, i5)`` refers to the entries
``t[i1], ..., t[i5]``.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations
from typing import NamedTuple, Optional, Sequence

from .errors import NotAdmissibleError, ZeroSplitError

Tuple5 = tuple[int, int, int, int, int]

CONDITIONS = ("a", "b", "c", "d", "positivity")


def as_tuple5(t: Sequence[int]) -> Tuple5:
    """Validate and coerce to a 5-tuple of Python ints."""
    t = tuple(t)
    if len(t) != 5:
        raise ValueError(f"expected 5 integers, got {len(t)}")
    out = []
    for v in t:
        if isinstance(v, bool) or int(v) != v:
            raise ValueError(f"non-integer entry {v!r}")
        out.append(int(v))
    return tuple(out)


def canonical(t: Sequence[int]) -> Tuple5:
    return tuple(sorted(as_tuple5(t)))


@dataclass(frozen=True)
class SymmetricInvariants:
    sigma: tuple[int, int, int, int, int]
    r: int
    n: Optional[int]

    def to_dict(self):
        return {"sigma": list(self.sigma), "r": self.r, "n": self.n}


def elementary_symmetric(values: Sequence[int], k: int) -> int:
    return sum(math.prod(c) for c in combinations(values, k))


def symmetric_invariants(t: Sequence[int]) -> SymmetricInvariants:
    t = as_tuple5(t)
    sigma = tuple(elementary_symmetric(t, k) for k in range(1, 6))
    s1, s2, s3 = sigma[:3]
    r = abs(s1 ** 3 - 4 * s1 * s2 + 8 * s3)
    n = (1 - s1) // 2 if s1 % 2 else None
    return SymmetricInvariants(sigma, r, n)


def invariant_r(t: Sequence[int]) -> int:
    """Order of the two finite cohomology groups, ``|s1^3 - 4 s1 s2 + 8 s3|``."""
    return symmetric_invariants(t).r


def split_values(t: Sequence[int]) -> list[tuple[tuple[int, ...], int]]:
    """The 15 values ``t[i1] + t[i2] - t[i3] - t[i4]`` paired with ``t[i5]``.

    One representative per unordered split {i1,i2}|{i3,i4} for each choice of
    the excluded index i5; returned as ``((i1, i2, i3, i4, i5), value)``.
    """
    t = as_tuple5(t)
    out = []
    for e in range(5):
        a, b, c, d = (i for i in range(5) if i != e)
        for perm in ((a, b, c, d, e), (a, c, b, d, e), (a, d, b, c, e)):
            out.append((perm, t[perm[0]] + t[perm[1]] - t[perm[2]] - t[perm[3]]))
    return out


class Failure(NamedTuple):
    condition: str
    permutation: tuple[int, ...]
    value: int


@dataclass(frozen=True)
class AdmissibilityReport:
    tuple: Tuple5
    failures: list[Failure] = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return not self.failures

    def failed(self, condition: str) -> bool:
        return any(f.condition == condition for f in self.failures)

    def to_dict(self):
        return {
            "admissible": self.admissible,
            "failures": [
                {"condition": f.condition, "permutation": list(f.permutation),
                 "value": f.value}
                for f in self.failures
            ],
        }


def _sorted_indices(t):
    return sorted(range(5), key=lambda i: (t[i], i))


def freeness_failures(t: Sequence[int]) -> list[Failure]:
    """Splits violating condition a); the value is the common divisor.

    ``gcd(0, m) = |m|``, so a vanishing split passes only against ``+-1``.
    """
    t = as_tuple5(t)
    out = []
    for perm, v in split_values(t):
        d = math.gcd(v, t[perm[4]])
        if d != 1:
            out.append(Failure("a", perm, d))
    return out


def check_admissibility(t: Sequence[int]) -> AdmissibilityReport:
    """Conditions a)-d) over all permutations, plus positivity of entries.

    b)-d) are permutation-closed inequalities whose binding instance is the
    sorted arrangement, so only that instance is evaluated and reported.
    """
    t = as_tuple5(t)
    failures = freeness_failures(t)
    o = _sorted_indices(t)
    s = [t[i] for i in o]
    b = s[0] + s[1] + s[2] - s[3] - s[4]
    if b <= 0:
        failures.append(Failure("b", tuple(o), b))
    c = s[0] + s[1] + s[2] + s[3] - 3 * s[4]
    if c <= 0:
        failures.append(Failure("c", tuple(o), c))
    d = 3 * (s[0] + s[1]) - s[2] - s[3] - s[4]
    if d <= 0:
        failures.append(Failure("d", tuple(o), d))
    for i, v in enumerate(t):
        if v <= 0:
            failures.append(Failure("positivity", (i,), v))
    return AdmissibilityReport(t, failures)


def extremal_values(t: Sequence[int]) -> list[int]:
    """All values of the three linear families over the 120 orderings (sorted).

    The families are ``p1+p2+p3-p4-p5``, ``3(p1+p2)-p3-p4-p5`` and
    ``p1+p2+p3+p4-3p5``; their minimum is positive exactly when conditions
    b), d) and c) hold.
    """
    t = as_tuple5(t)
    out = []
    for q in permutations(t):
        out.append(q[0] + q[1] + q[2] - q[3] - q[4])
        out.append(3 * (q[0] + q[1]) - q[2] - q[3] - q[4])
        out.append(q[0] + q[1] + q[2] + q[3] - 3 * q[4])
    out.sort()
    return out


def fundamental_group_order(t: Sequence[int]) -> int:
    """``gcd(sigma_1, 2)``: the cokernel order of the pi_1 map ``Z^2 -> Z``."""
    return math.gcd(sum(as_tuple5(t)), 2)


def enumerate_admissible(max_entry: int) -> list[Tuple5]:
    """Sorted admissible tuples with entries in ``[1, max_entry]``."""
    if max_entry < 1:
        raise ValueError("max_entry must be >= 1")
    return [
        t for t in combinations_with_replacement(range(1, max_entry + 1), 5)
        if check_admissibility(t).admissible
    ]


def invariant_collisions(max_entry: int) -> dict[int, list[Tuple5]]:
    """Admissible tuples sharing the same r (groups of size >= 2 only)."""
    groups = defaultdict(list)
    for t in enumerate_admissible(max_entry):
        groups[invariant_r(t)].append(t)
    return {r: ts for r, ts in sorted(groups.items()) if len(ts) > 1}


def abresch_multiplier(t: Sequence[int]) -> int:
    """lcm of the 15 split magnitudes; raises if one of them vanishes."""
    vals = split_values(t)
    zero = [perm for perm, v in vals if v == 0]
    if zero:
        raise ZeroSplitError(f"split {zero[0]} of {as_tuple5(t)} vanishes")
    return math.lcm(*(abs(v) for _, v in vals))


def abresch_shift(t: Sequence[int], n: int) -> Tuple5:
    """Add ``n * lcm(|splits|)`` to every entry.

    Every split divides the shift, so ``gcd(split, p5 + shift) = gcd(split, p5)``
    and condition a) carries over from the input.
    """
    t = as_tuple5(t)
    if n < 1:
        raise ValueError("n must be a positive integer")
    lcm = abresch_multiplier(t)
    bad = freeness_failures(t)
    if bad:
        raise NotAdmissibleError(f"condition a) fails for {t} at split {bad[0].permutation}")
    a = n * lcm
    return tuple(v + a for v in t)
