"""Brute-force Lie closure over canonical Pauli strings.

The closure of a Pauli generator set under commutators is again spanned by
Pauli strings, so the whole computation lives on phase-free packed keys
(x_bits << n) | z_bits.  A worklist processes each basis element exactly once
against the basis as it stood at pop time; every unordered pair is therefore
evaluated by the time the later element pops, and a final sweep re-checks
closedness outright.

The pair sweep is vectorized with numpy (bitwise ops + popcount on the whole
basis at once).  For n up to 13 a dense bytemap over all 4^n keys handles
dedup; beyond that a plain set takes over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from dlagraph.catalog import GeneratorSet
from dlagraph.pauli import PauliString

DEFAULT_LIMIT = 4**10

_BYTEMAP_MAX_KEYS = 1 << 26


class ClosureLimitError(RuntimeError):
    """Basis grew past the requested limit; carries the partial size."""

    def __init__(self, limit: int, partial_dimension: int):
        super().__init__(
            f"closure exceeded limit {limit} (partial basis size {partial_dimension})"
        )
        self.limit = limit
        self.partial_dimension = partial_dimension


@dataclass(frozen=True)
class ClosureStats:
    pops: int
    pair_evaluations: int


@dataclass(frozen=True)
class ClosureResult:
    """Closure basis as canonical packed keys, in deterministic insertion order."""

    n: int
    order: tuple[int, ...]
    stats: ClosureStats

    @cached_property
    def keys(self) -> frozenset[int]:
        return frozenset(self.order)

    @property
    def dimension(self) -> int:
        return len(self.order)

    @cached_property
    def basis(self) -> frozenset[PauliString]:
        return frozenset(self.strings())

    def strings(self) -> tuple[PauliString, ...]:
        mask = (1 << self.n) - 1
        return tuple(
            PauliString(self.n, k >> self.n, k & mask) for k in self.order
        )

    def __contains__(self, p: PauliString) -> bool:
        return contains(self, p)


def _member_list(generators) -> list[PauliString]:
    if isinstance(generators, GeneratorSet):
        return list(generators.members)
    return list(generators)


def _initial_keys(members: list[PauliString]) -> tuple[int, list[int]]:
    if not members:
        raise ValueError("need at least one generator")
    n = members[0].n
    seen = set()
    order = []
    for p in members:
        if p.n != n:
            raise ValueError(f"mixed site counts in generators: {p.n} vs {n}")
        if p.is_identity:
            raise ValueError("identity is not a valid generator")
        if p.key not in seen:
            seen.add(p.key)
            order.append(p.key)
    return n, order


def lie_closure(generators, limit: int = DEFAULT_LIMIT, verify: bool = True) -> ClosureResult:
    """Smallest commutator-closed set of canonical strings containing the generators.

    ``generators`` is a GeneratorSet or any iterable of PauliString.  Raises
    ClosureLimitError when the basis grows past ``limit``.  The result only
    depends on the generator set; the basis ordering only on its ordering.

    >>> r = lie_closure([parse_pauli("XY"), parse_pauli("YX")])
    >>> r.dimension
    2
    """
    n, initial = _initial_keys(_member_list(generators))
    use_bytemap = (1 << (2 * n)) <= _BYTEMAP_MAX_KEYS

    capacity = 1024
    xs = np.zeros(capacity, dtype=np.uint64)
    zs = np.zeros(capacity, dtype=np.uint64)
    size = 0
    if use_bytemap:
        seen_map = np.zeros(1 << (2 * n), dtype=bool)
    else:
        seen_set: set[int] = set()

    def grow(needed: int):
        nonlocal capacity, xs, zs
        while capacity < needed:
            capacity *= 2
        if xs.shape[0] < capacity:
            xs = np.resize(xs, capacity)
            zs = np.resize(zs, capacity)

    def append_keys(keys: np.ndarray):
        nonlocal size
        grow(size + keys.shape[0])
        xs[size : size + keys.shape[0]] = keys >> n
        zs[size : size + keys.shape[0]] = keys & ((1 << n) - 1)
        size += keys.shape[0]

    init = np.asarray(initial, dtype=np.int64)
    if use_bytemap:
        seen_map[init] = True
    else:
        seen_set.update(initial)
    append_keys(init.astype(np.uint64))

    pops = 0
    pair_evals = 0
    i = 0
    while i < size:
        x, z = xs[i], zs[i]
        cx = xs[:size]
        cz = zs[:size]
        anti = (np.bitwise_count((x & cz) ^ (z & cx)) & np.uint64(1)).astype(bool)
        pair_evals += size
        pops += 1
        if anti.any():
            keys = (((cx[anti] ^ x).astype(np.int64)) << n) | (cz[anti] ^ z).astype(np.int64)
            if use_bytemap:
                fresh = keys[~seen_map[keys]]
                if fresh.size:
                    fresh = np.unique(fresh)
                    seen_map[fresh] = True
                    append_keys(fresh.astype(np.uint64))
            else:
                fresh = sorted({int(k) for k in keys.tolist()} - seen_set)
                if fresh:
                    seen_set.update(fresh)
                    append_keys(np.asarray(fresh, dtype=np.uint64))
            if size > limit:
                raise ClosureLimitError(limit, size)
        i += 1

    order = tuple((xs[:size].astype(np.int64) << n | zs[:size].astype(np.int64)).tolist())
    if verify:
        _assert_closed(xs[:size], zs[:size], n, use_bytemap, seen_map if use_bytemap else seen_set)
    return ClosureResult(n, order, ClosureStats(pops, pair_evals))


def _assert_closed(xs, zs, n, use_bytemap, seen):
    for i in range(xs.shape[0]):
        x, z = xs[i], zs[i]
        anti = (np.bitwise_count((x & zs) ^ (z & xs)) & np.uint64(1)).astype(bool)
        keys = (((xs[anti] ^ x).astype(np.int64)) << n) | (zs[anti] ^ z).astype(np.int64)
        if use_bytemap:
            ok = bool(seen[keys].all()) if keys.size else True
        else:
            ok = all(int(k) in seen for k in keys.tolist())
        if not ok:
            raise AssertionError("closure verification sweep found a missing bracket")


def contains(result: ClosureResult, p: PauliString) -> bool:
    """Canonical membership; the identity is never a member."""
    if p.n != result.n or p.is_identity:
        return False
    return p.key in result.keys


def closure_equal(a: ClosureResult, b: ClosureResult) -> bool:
    return a.n == b.n and a.keys == b.keys
