"""Antiunitary involution fixed points for bipartite upper bounds.

The involution acts on a Hermitian generator g as -(Q g^T Q) with
Q = Y...Y X...X (l Ys then m Xs).  A Pauli string is fixed exactly when its
transpose sign and its commutation sign with Q multiply to -1, so the fixed
subset of a string basis is computable without matrices.  Fixed points of a
closed basis are again closed; ``fixed_subset`` asserts that instead of
assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass

from dlagraph.classify import simple_dim
from dlagraph.closure import ClosureResult, ClosureStats, lie_closure
from dlagraph.pauli import PauliString, commutes, pauli_from_sites, transpose_sign


@dataclass(frozen=True)
class Involution:
    """g -> -(Q g^T Q) with Q the Y-block/X-block string for (l, m)."""

    l: int
    m: int
    q: PauliString

    @property
    def n(self) -> int:
        return self.l + self.m


def make_theta(l: int, m: int) -> Involution:
    """The (l, m) involution; the first l qubits are the Y block.

    >>> make_theta(2, 1).q.letters()
    'YYX'
    """
    if l < 1 or m < 1:
        raise ValueError("both blocks need at least one qubit")
    q = pauli_from_sites(l + m, [(i, "Y") for i in range(l)] + [(l + j, "X") for j in range(m)])
    return Involution(l, m, q)


def is_fixed(theta: Involution, p: PauliString) -> bool:
    """Whether the string (times i, as a Hermitian basis element) is fixed.

    theta(p) = -(t c) p where t is the transpose sign and c is +1/-1 as p
    commutes/anticommutes with Q; fixed means t*c == -1.
    """
    if p.n != theta.n:
        raise ValueError(f"string has {p.n} sites, involution acts on {theta.n}")
    c = 1 if commutes(theta.q, p) else -1
    return transpose_sign(p) * c == -1


def fixed_subset(theta: Involution, result: ClosureResult) -> ClosureResult:
    """The fixed points of a closure basis, re-verified to be bracket-closed."""
    if result.n != theta.n:
        raise ValueError(f"closure has {result.n} sites, involution acts on {theta.n}")
    kept = tuple(p.key for p in result.strings() if is_fixed(theta, p))
    sub = ClosureResult(result.n, kept, ClosureStats(0, 0))
    if kept:
        verified = lie_closure(sub.strings())
        if verified.keys != sub.keys:
            raise AssertionError("fixed-point subset failed to close")
    return sub


def upper_bound_dim(label: str, l: int, m: int) -> int:
    """Fixed-subalgebra dimension formula for a4 or a14 at block sizes (l, m).

    Valid as a statement about complete bipartite graphs once K_{l,m} has a
    vertex of degree > 2 (max(l, m) >= 3); smaller shapes are out of
    hypothesis and the number is only a conjecture to compare against.
    """
    if l < 1 or m < 1:
        raise ValueError("block sizes must be positive")
    n = l + m
    both_odd = l % 2 == 1 and m % 2 == 1
    both_even = l % 2 == 0 and m % 2 == 0
    if label == "a14":
        if both_odd:
            return 2 * simple_dim("sp", 1 << (n - 2))
        if both_even:
            return 2 * simple_dim("so", 1 << (n - 1))
        return simple_dim("su", 1 << (n - 1))
    if label == "a4":
        if both_odd:
            return 2 * simple_dim("su", 1 << (n - 2))
        if both_even:
            return 4 * simple_dim("so", 1 << (n - 2))
        return simple_dim("so", 1 << (n - 1))
    raise ValueError(f"fixed-point bounds are recorded for a4 and a14, not {label!r}")
