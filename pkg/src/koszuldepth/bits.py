"""Bitmask mirrors of the matching maps, memoised for exhaustive sweeps.

Bit e-1 encodes element e, so on a fixed cardinality level the squashed
order is plain integer order on masks.  The tables are built by evaluating
the subset-level maps once per mask; they are caches, not re-implementations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from . import matching
from .subsets import Subset


def bit_elements(mask: int) -> tuple[int, ...]:
    return tuple(e + 1 for e in range(mask.bit_length()) if (mask >> e) & 1)


def mask_of(elements) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


@dataclass(frozen=True)
class MatchTables:
    n: int
    psi: tuple[int | None, ...]
    phi: tuple[int | None, ...]
    psi_tilde: tuple[int | None, ...]


@lru_cache(maxsize=None)
def match_tables(n: int) -> MatchTables:
    psi_t: list[int | None] = []
    phi_t: list[int | None] = []
    tilde_t: list[int | None] = []
    for mask in range(1 << n):
        s = Subset.from_mask(n, mask)
        r = matching.psi(s)
        psi_t.append(r.value.mask if r.defined else None)
        r = matching.phi(s)
        phi_t.append(r.value.mask if r.defined else None)
        tilde_t.append(matching.psi_tilde(s).value.mask if mask else None)
    return MatchTables(n, tuple(psi_t), tuple(phi_t), tuple(tilde_t))


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask`` as masks, in decreasing order, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def sized_submasks(mask: int, k: int) -> list[int]:
    """The k-element subsets of ``mask``, ascending (= squashed order)."""
    out = [mask_of(c) for c in combinations(bit_elements(mask), k)]
    out.sort()
    return out


def phi_index(tables: MatchTables, g: int, m: int) -> int:
    """Index of g in m via the upward table walk."""
    i = 0
    cur = g
    phi_t = tables.phi
    while True:
        nxt = phi_t[cur]
        if nxt is None or nxt & ~m:
            return i
        cur = nxt
        i += 1


def psi_index_table(tables: MatchTables, m: int) -> dict[int, int]:
    """Index of every subset of m at once, by walking all downward chains."""
    psi_t = tables.psi
    ind: dict[int, int] = {}
    for start in submasks(m):
        cur: int | None = start
        i = 0
        while cur is not None:
            if ind.get(cur, -1) < i:
                ind[cur] = i
            cur = psi_t[cur]
            i += 1
    return ind
