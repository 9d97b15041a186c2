"""The up/down matching on the Boolean lattice and the index function.

``psi`` deletes the first position at which the lattice path of G attains
its maximum over G and the origin; ``phi`` inserts the successor of the last
such position.  On their respective domains the two maps are mutually
inverse, so the index of G inside M (the number of upward steps that stay
inside M) is computable by iterating ``phi``, while the defining downward
formulation is kept as an exhaustive oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .subsets import MAX_N, Subset, lattice_path, same_ground


@dataclass(frozen=True)
class MatchResult:
    """Outcome of a partial matching map; undefined is a result, not an error."""

    defined: bool
    value: Subset | None = None
    pivot: int | None = None

    def __bool__(self) -> bool:
        return self.defined


_UNDEFINED = MatchResult(False)


def psi(G: Subset) -> MatchResult:
    """Delete the first peak of G's lattice path; undefined iff the peak is the origin."""
    path = lattice_path(G)
    if path.nu == 0:
        return _UNDEFINED
    return MatchResult(True, G.without_element(path.nu), path.nu)


def phi(G: Subset) -> MatchResult:
    """Insert the successor of the last peak; undefined iff that peak is at n."""
    path = lattice_path(G)
    if path.mu == G.n:
        return _UNDEFINED
    return MatchResult(True, G.with_element(path.mu + 1), path.mu + 1)


def psi_tilde(G: Subset) -> MatchResult:
    """Like ``psi`` but the peak is taken over G only (origin excluded).

    Always defined for non-empty G, at the cost of injectivity.  Coincides
    with ``psi`` whenever the unrestricted maximum is positive.
    """
    if not G.elements:
        raise ValueError("psi_tilde needs a non-empty subset")
    heights = lattice_path(G).heights
    alpha = max(heights[g] for g in G.elements)
    pivot = min(g for g in G.sorted_elements() if heights[g] == alpha)
    return MatchResult(True, G.without_element(pivot), pivot)


def index(G: Subset, M: Subset) -> int:
    """Largest i such that the i-th upward iterate of G is defined and inside M.

    Since ``phi`` only adds elements, the admissible iterates form an initial
    segment and a simple loop suffices.
    """
    same_ground(G, M)
    if not G.elements <= M.elements:
        raise ValueError(f"{G} is not contained in {M}")
    i = 0
    cur = G
    while True:
        step = phi(cur)
        if not step.defined or not step.value.elements <= M.elements:
            return i
        cur = step.value
        i += 1


def index_by_psi(G: Subset, M: Subset) -> int:
    """Index of G in M by exhaustive search over downward chains.

    Enumerates every subset of M and checks whether iterating ``psi`` from it
    reaches G.  Exponential in |M|; kept as the independent oracle for
    :func:`index`.
    """
    same_ground(G, M)
    if not G.elements <= M.elements:
        raise ValueError(f"{G} is not contained in {M}")
    best = 0
    members = M.sorted_elements()
    for size in range(len(G), len(M) + 1):
        steps = size - len(G)
        if steps <= best:
            continue
        for start in combinations(members, size):
            cur = Subset(M.n, start)
            ok = True
            for _ in range(steps):
                r = psi(cur)
                if not r.defined:
                    ok = False
                    break
                cur = r.value
            if ok and cur == G:
                best = steps
                break
    return best


def greedy_lex_matching(n: int, l: int) -> dict[Subset, Subset]:
    """Greedy level matching: each (l+1)-set takes its lex-smallest unused l-subset.

    Processes the (l+1)-sets in lexicographic order and leaves a set unmatched
    when all of its l-subsets are already taken.  This replays the original
    definition of the matching and serves as the oracle for ``psi``.
    """
    if not 0 <= l < n:
        raise ValueError(f"level must satisfy 0 <= l < n, got l={l}, n={n}")
    if n > MAX_N:
        raise ValueError(f"ground set size must lie in 1..{MAX_N}, got {n}")
    used: set[tuple[int, ...]] = set()
    out: dict[Subset, Subset] = {}
    for big in combinations(range(1, n + 1), l + 1):
        for small in combinations(big, l):
            if small not in used:
                used.add(small)
                out[Subset(n, big)] = Subset(n, small)
                break
    return out
