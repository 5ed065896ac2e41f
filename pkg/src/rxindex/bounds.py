"""Ramsey-type constants for claw- and hairy-clique-free graphs.

All arithmetic is on Python integers, so the astronomically large constants
come out exact.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from rxindex.errors import InputDomainError


@dataclass(frozen=True)
class BoundParams:
    r: int
    s: int
    ell: int

    def __post_init__(self):
        if self.r < 3 or self.s < 3 or self.ell < 5:
            raise InputDomainError(
                f"need r >= 3, s >= 3, l >= 5; got r={self.r}, s={self.s}, l={self.ell}")


def ramsey_upper(a: int, b: int) -> int:
    """Erdős–Szekeres bound ``C(a+b-2, a-1) >= R(a, b)``."""
    if a < 1 or b < 1:
        raise InputDomainError(f"Ramsey arguments must be positive, got ({a}, {b})")
    return math.comb(a + b - 2, a - 1)


@functools.lru_cache(maxsize=None)
def alpha0_bound(r: int, s: int, i: int) -> int:
    """Strict upper bound on the independence number of the i-th distance sphere
    around any vertex of a connected (K1,r, Ks^h)-free graph."""
    if r < 3 or s < 3 or i < 1:
        raise InputDomainError(f"need r >= 3, s >= 3, i >= 1; got ({r}, {s}, {i})")
    if i == 1:
        return r
    return (r - 2) * ramsey_upper(s * (2 * r - 3), alpha0_bound(r, s, i - 1))


def ramsey_sum(r: int, s: int, ell: int) -> int:
    """Sum over spheres 2..l-2 of ``R(s(2r-3), alpha0(r, s, i-1))``; l-2 caps the radius of a Pl-free graph."""
    return sum(ramsey_upper(s * (2 * r - 3), alpha0_bound(r, s, i - 1)) for i in range(2, ell - 1))


def steiner_rainbow_constant(p: BoundParams | tuple[int, int, int]) -> int:
    """Additive constant C with rx3(G) <= sdiam3(G) + C for connected (K1,r, Ks^h, Pl)-free G."""
    if not isinstance(p, BoundParams):
        p = BoundParams(*p)
    return (p.r - 2) * (ramsey_sum(p.r, p.s, p.ell) + 1) + 2 * (p.ell - 1)


def layered_chain_bound(p: BoundParams | tuple[int, int, int]) -> int:
    """Colour count ``r + (r-2)*sum + 2(l-2)`` reached before the final relaxation; reported, not asserted."""
    if not isinstance(p, BoundParams):
        p = BoundParams(*p)
    return p.r + (p.r - 2) * ramsey_sum(p.r, p.s, p.ell) + 2 * (p.ell - 2)
