"""Subsets of {1..n}, their lattice paths, and the two linear orders.

A subset G of {1..n} is read as a walk: position g steps up if g lies in G
and down otherwise.  The resulting height profile drives every matching map
in :mod:`koszuldepth.matching`, so a subset carries its ground set size n
explicitly and refuses to interact with subsets over a different ground set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Hard cap on the ground set size.  Exhaustive sweeps stay well below it;
# it only guards against accidentally requesting 2^n-sized work.
MAX_N = 20


def check_ground(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"ground set size must be an integer, got {n!r}")
    if not 1 <= n <= MAX_N:
        raise ValueError(f"ground set size must lie in 1..{MAX_N}, got {n}")


@dataclass(frozen=True)
class Subset:
    """An immutable subset of {1..n} that remembers n."""

    n: int
    elements: frozenset[int]

    def __init__(self, n: int, elements: Iterable[int] = ()) -> None:
        check_ground(n)
        elems = frozenset(elements)
        for e in elems:
            if not isinstance(e, int) or isinstance(e, bool) or not 1 <= e <= n:
                raise ValueError(f"element {e!r} outside ground set 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "elements", elems)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Subset:
        """Bit e-1 of ``mask`` encodes membership of element e."""
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} does not fit ground set 1..{n}")
        return cls(n, (e for e in range(1, n + 1) if (mask >> (e - 1)) & 1))

    @classmethod
    def full(cls, n: int) -> Subset:
        return cls(n, range(1, n + 1))

    @property
    def mask(self) -> int:
        m = 0
        for e in self.elements:
            m |= 1 << (e - 1)
        return m

    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: int) -> bool:
        return e in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_elements())

    def __str__(self) -> str:
        return format_subset(self)

    def issubset(self, other: Subset) -> bool:
        same_ground(self, other)
        return self.elements <= other.elements

    def with_element(self, e: int) -> Subset:
        return Subset(self.n, self.elements | {e})

    def without_element(self, e: int) -> Subset:
        if e not in self.elements:
            raise ValueError(f"{e} not in {self}")
        return Subset(self.n, self.elements - {e})

    def complement(self) -> Subset:
        return Subset(self.n, set(range(1, self.n + 1)) - self.elements)


def same_ground(a: Subset, b: Subset) -> None:
    if a.n != b.n:
        raise ValueError(f"mixed ground sets: n={a.n} vs n={b.n}")


def chi(G: Subset, j: int) -> int:
    """Incidence step of G at position j: 0 at the origin, +1 on members, -1 off."""
    if not 0 <= j <= G.n:
        raise ValueError(f"position {j} outside 0..{G.n}")
    if j == 0:
        return 0
    return 1 if j in G.elements else -1


@dataclass(frozen=True)
class LatticePath:
    """Height profile of a subset, with its peak positions.

    ``heights[g]`` is the running sum of the incidence steps up to position g,
    so ``heights[0] == 0`` and consecutive heights differ by exactly one.
    ``peaks`` lists the positions in G together with the origin where the
    height attains its maximum ``alpha``; ``nu`` and ``mu`` are the first and
    last of these.
    """

    heights: tuple[int, ...]
    peaks: tuple[int, ...]
    alpha: int
    nu: int
    mu: int


def lattice_path(G: Subset) -> LatticePath:
    heights = [0]
    for g in range(1, G.n + 1):
        heights.append(heights[-1] + (1 if g in G.elements else -1))
    candidates = (0, *G.sorted_elements())
    alpha = max(heights[g] for g in candidates)
    peaks = tuple(g for g in candidates if heights[g] == alpha)
    return LatticePath(tuple(heights), peaks, alpha, peaks[0], peaks[-1])


def squashed_less(G: Subset, H: Subset) -> bool:
    """True iff G strictly precedes H in squashed (colex) order.

    For equal-size sets this holds exactly when the largest element of the
    symmetric difference lies in H.  Equivalent to comparing bitmasks.
    """
    same_ground(G, H)
    if len(G) != len(H):
        raise ValueError(f"squashed order compares equal sizes, got {len(G)} and {len(H)}")
    diff = G.elements ^ H.elements
    if not diff:
        return False
    return max(diff) in H.elements


def lex_less(G: Subset, H: Subset) -> bool:
    """Lexicographic comparison of the sorted element sequences."""
    if len(G) != len(H):
        raise ValueError(f"lex order compares equal sizes, got {len(G)} and {len(H)}")
    return G.sorted_elements() < H.sorted_elements()


def level_key(G: Subset) -> tuple[int, int]:
    """Sort key realising (cardinality, squashed) order."""
    return (len(G), G.mask)


def format_subset(G: Subset) -> str:
    return "{" + ",".join(str(e) for e in G.sorted_elements()) + "}"


def parse_subset(n: int, text: str) -> Subset:
    """Parse the canonical brace form, or compact digits for n <= 9.

    Accepted: ``{1,4,7}`` (spaces tolerated), ``{}`` for the empty set, and
    ``147`` when n <= 9.
    """
    check_ground(n)
    s = text.strip()
    if s.startswith("{") and s.endswith("}"):
        inner = s[1:-1].strip()
        if not inner:
            return Subset(n)
        parts = [p.strip() for p in inner.split(",")]
        try:
            elems = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"cannot parse subset from {text!r}") from None
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate elements in {text!r}")
        return Subset(n, elems)
    if s.isdigit():
        if n > 9:
            raise ValueError(f"compact digit form needs n <= 9 (n={n}); use braces")
        elems = [int(c) for c in s]
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate elements in {text!r}")
        return Subset(n, elems)
    raise ValueError(f"cannot parse subset from {text!r}")
