"""Construction and verification of the depth-(n-1) decomposition.

For floor(n/2) <= k < n the k-th syzygy module of the residue field splits,
as a graded vector space, into one summand per subset S of even distance
above cardinality k.  Each summand is a polynomial subring (all variables,
or all but the one the matching would delete) times a fixed generator of
multidegree S.  This module builds that family and checks everything it
claims: the dimension count per multidegree, the agreement of the two
descriptions of the contributing generators, the squashed-order triangle
condition, exact linear independence, and the per-pair index increment the
triangle argument rests on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb

from . import matching
from .bits import MatchTables, bit_elements, match_tables, phi_index, sized_submasks, submasks
from .koszul import KoszulChain, Multidegree, boundary_sign, dim_oracle, generator_m, indicator
from .report import Report
from .subsets import Subset, lattice_path, same_ground


def require_upper_half(n: int, k: int) -> None:
    """The construction covers only floor(n/2) <= k < n; fail fast outside it."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError(f"k must be an integer, got {k!r}")
    if not (1 <= k and n // 2 <= k < n):
        raise ValueError(
            f"out of range: the construction needs floor(n/2) <= k < n "
            f"(and k >= 1), got n={n}, k={k}; the lower half is not covered"
        )


@dataclass(frozen=True)
class Summand:
    """One Stanley space: the variables Z acting on the generator m of degree S."""

    S: Subset
    Z: Subset
    removed: int | None
    G: Subset
    m: KoszulChain


@dataclass(frozen=True)
class Decomposition:
    n: int
    k: int
    summands: tuple[Summand, ...]


@dataclass(frozen=True)
class FamilyMember:
    G: Subset
    index: int


@dataclass(frozen=True)
class ContributionFamily:
    """The k-subsets of M contributing at any multidegree with support M,
    with their indices, ascending in squashed order."""

    M: Subset
    k: int
    members: tuple[FamilyMember, ...]


@dataclass(frozen=True)
class TriangleReport:
    passed: bool
    violation: tuple[Subset, Subset] | None = None


@dataclass(frozen=True)
class StepCheck:
    """Outcome of the index-increment check on one (M, G, H) triple."""

    status: str  # "pass" | "fail" | "skip"
    case: int | None = None
    index_G: int | None = None
    index_H: int | None = None
    expected_H: int | None = None


def summand_index_sets(n: int, k: int) -> list[Subset]:
    """All subsets of [n] of size k, k+2, k+4, ... in (level, squashed) order."""
    require_upper_half(n, k)
    out = []
    for size in range(k, n + 1, 2):
        level = [m for m in range(1 << n) if m.bit_count() == size]
        level.sort()
        out.extend(Subset.from_mask(n, m) for m in level)
    return out


def compute_Z(S: Subset) -> tuple[Subset, int | None]:
    """Allowed variables for the summand at S.

    S is hit by the downward matching from exactly one superset iff the
    upward map is defined on S, in which case the inserted element is the
    variable to remove.  Otherwise every variable is allowed.
    """
    up = matching.phi(S)
    if up.defined:
        removed = up.pivot
        return Subset(S.n, set(range(1, S.n + 1)) - {removed}), removed
    return Subset.full(S.n), None


def compute_Z_by_search(S: Subset) -> tuple[Subset, int | None]:
    """Same as :func:`compute_Z` but by trying every insertion; test oracle."""
    hits = []
    for s in range(1, S.n + 1):
        if s in S.elements:
            continue
        r = matching.psi(S.with_element(s))
        if r.defined and r.value == S:
            hits.append(s)
    if len(hits) > 1:
        raise RuntimeError(f"matching not injective at {S}: preimages add {hits}")
    if hits:
        return Subset(S.n, set(range(1, S.n + 1)) - {hits[0]}), hits[0]
    return Subset.full(S.n), None


def build_decomposition(n: int, k: int) -> Decomposition:
    require_upper_half(n, k)
    summands = []
    for S in summand_index_sets(n, k):
        Z, removed = compute_Z(S)
        G = S
        for _ in range(len(S) - k):
            r = matching.psi(G)
            if not r.defined:
                # impossible in range: intermediate sizes exceed the totality
                # threshold; if it ever trips, the construction is broken
                raise RuntimeError(f"downward matching undefined at {G} below S={S}")
            G = r.value
        summands.append(Summand(S, Z, removed, G, generator_m(S, G)))
    return Decomposition(n, k, tuple(summands))


def contributes(summand: Summand, m: Multidegree) -> bool:
    """Whether the summand has a non-zero component in multidegree m."""
    if summand.S.n != m.n:
        raise ValueError(f"multidegree over n={m.n}, summand over n={summand.S.n}")
    rest = m.minus_or_none(indicator(summand.S))
    if rest is None:
        return False
    return rest.support().elements <= summand.Z.elements


@lru_cache(maxsize=None)
def _script(n: int, k: int) -> tuple[tuple[int, int | None, int], ...]:
    """(S mask, removed element, G mask) per summand, in (level, squashed) order."""
    tables = match_tables(n)
    out = []
    for size in range(k, n + 1, 2):
        for s_mask in range(1 << n):
            if s_mask.bit_count() != size:
                continue
            up = tables.phi[s_mask]
            removed = None if up is None else (up ^ s_mask).bit_length()
            g_mask = s_mask
            for _ in range(size - k):
                nxt = tables.psi[g_mask]
                if nxt is None:
                    raise RuntimeError(f"downward matching undefined below mask {s_mask:#x}")
                g_mask = nxt
            out.append((s_mask, removed, g_mask))
    return tuple(out)


def _family_members(n: int, k: int, m_mask: int, tables: MatchTables) -> list[tuple[int, int]]:
    """Members of the contribution family for support mask ``m_mask``.

    Builds the family twice: from the qualifying summands, and as the
    k-subsets of even index.  A mismatch (or a repeated generator) would
    break the dimension count, so either raises.
    """
    from_summands = []
    for s_mask, removed, g_mask in _script(n, k):
        if s_mask & ~m_mask:
            continue
        if removed is not None and (m_mask >> (removed - 1)) & 1:
            continue
        from_summands.append(g_mask)
    by_parity = []
    for g in sized_submasks(m_mask, k):
        ind = phi_index(tables, g, m_mask)
        if ind % 2 == 0:
            by_parity.append((g, ind))
    if len(from_summands) != len(set(from_summands)):
        raise RuntimeError(
            f"distinct summands share a generator on support mask {m_mask:#x}"
        )
    if sorted(from_summands) != [g for g, _ in by_parity]:
        raise RuntimeError(
            f"summand-based and parity-based families disagree on mask {m_mask:#x}"
        )
    return by_parity


def contribution_family(n: int, k: int, M: Subset) -> ContributionFamily:
    require_upper_half(n, k)
    if M.n != n:
        raise ValueError(f"support over n={M.n}, expected {n}")
    if len(M) < k:
        raise ValueError(f"support {M} has fewer than k={k} elements")
    members = _family_members(n, k, M.mask, match_tables(n))
    return ContributionFamily(
        M,
        k,
        tuple(FamilyMember(Subset.from_mask(n, g), ind) for g, ind in members),
    )


def distinguished_subset(G: Subset) -> Subset:
    """The facet a family member claims for itself in the triangle condition."""
    return matching.psi_tilde(G).value


def triangle_check(family: ContributionFamily) -> TriangleReport:
    """Each member's distinguished facet must avoid all earlier members.

    Members are taken in the order given (canonical families are already
    ascending in squashed order); the first offending pair is reported.
    """
    earlier: list[Subset] = []
    for member in family.members:
        t = distinguished_subset(member.G)
        for h in earlier:
            if t.elements <= h.elements:
                return TriangleReport(False, (member.G, h))
        earlier.append(member.G)
    return TriangleReport(True)


def sign_matrix(family: ContributionFamily) -> list[list[int]]:
    """Rows: members in the given order.  Columns: all (k-1)-subsets of M,
    ascending in squashed order.  Entries: boundary signs, 0 off the facets."""
    n = family.M.n
    cols = {t: j for j, t in enumerate(sized_submasks(family.M.mask, family.k - 1))}
    rows = []
    for member in family.members:
        row = [0] * len(cols)
        for t_mask in sized_submasks(member.G.mask, family.k - 1):
            entry = boundary_sign(member.G, Subset.from_mask(n, t_mask))
            assert entry is not None
            row[cols[t_mask]] = entry.sign
        rows.append(row)
    return rows


def rank_full(matrix: list[list[int]]) -> bool:
    """Exact full-row-rank test by fraction-free elimination.

    Entries must be -1, 0 or +1; intermediate values are exact integer
    minors, which Python integers hold without overflow.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return True
    ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        if any(e not in (-1, 0, 1) for e in r):
            raise ValueError("entries must be -1, 0 or +1")
    nrows = len(rows)
    prev = 1
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        pivot_row = next((i for i in range(rank, nrows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        piv = rows[rank][c]
        for i in range(rank + 1, nrows):
            factor = rows[i][c]
            if factor or piv != prev:
                row_i = rows[i]
                row_r = rows[rank]
                for j in range(c + 1, ncols):
                    row_i[j] = (piv * row_i[j] - factor * row_r[j]) // prev
                row_i[c] = 0
        prev = piv
        rank += 1
    return rank == nrows


def _indicator_of_mask(n: int, m_mask: int) -> Multidegree:
    return Multidegree(n, (1 if (m_mask >> i) & 1 else 0 for i in range(n)))


def verify_hilbert(decomp: Decomposition, mode: str = "squarefree", box_depth: int = 2) -> Report:
    """Check that the summands account for every graded dimension.

    squarefree mode: for every support M the number of contributing summands
    must equal the dimension oracle at the indicator multidegree.  box mode:
    the same equality at every multidegree with entries up to ``box_depth``.
    """
    n, k = decomp.n, decomp.k
    rep = Report(f"hilbert identity n={n} k={k} ({mode})")
    if mode == "squarefree":
        full = (1 << n) - 1
        counts = [0] * (1 << n)
        for sm in decomp.summands:
            s_mask = sm.S.mask
            free = full & ~s_mask
            if sm.removed is not None:
                free &= ~(1 << (sm.removed - 1))
            for extra in submasks(free):
                counts[s_mask | extra] += 1
        checked = 0
        for m_mask in range(1, 1 << n):
            expect = dim_oracle(n, k, _indicator_of_mask(n, m_mask))
            checked += 1
            if counts[m_mask] != expect:
                rep.fail(
                    f"support {Subset.from_mask(n, m_mask)}: "
                    f"{counts[m_mask]} summands vs dimension {expect}"
                )
        rep.counts["supports_checked"] = checked
    elif mode == "box":
        checked = 0
        for exps in product(range(box_depth + 1), repeat=n):
            m = Multidegree(n, exps)
            got = sum(1 for sm in decomp.summands if contributes(sm, m))
            expect = dim_oracle(n, k, m)
            checked += 1
            if got != expect:
                rep.fail(f"multidegree {m}: {got} summands vs dimension {expect}")
        rep.counts["multidegrees_checked"] = checked
        rep.counts["box_depth"] = box_depth
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rep.counts["failures"] = len(rep.failures)
    rep.lines.append(
        f"hilbert identity ({mode}): "
        f"{rep.counts.get('supports_checked', rep.counts.get('multidegrees_checked'))} "
        f"degrees checked, {len(rep.failures)} failures"
    )
    return rep


def index_step_check(M: Subset, G: Subset, H: Subset) -> StepCheck:
    """Check the index increment along one admissible squashed-order pair.

    Admissible means: G and H are equal-size subsets of M with at least
    floor(n/2) elements, H precedes G in squashed order, and H contains the
    distinguished facet of G.  The claim under test: if the restricted peak
    height of G is non-negative then the index of H exceeds that of G by
    one, and otherwise the index of H equals 1.  Inadmissible triples are
    skipped, not failed.
    """
    same_ground(M, G)
    same_ground(M, H)
    n = M.n
    if not (G.elements <= M.elements and H.elements <= M.elements):
        return StepCheck("skip")
    if len(G) != len(H) or len(G) < n // 2 or not G.elements:
        return StepCheck("skip")
    diff = G.elements ^ H.elements
    if not diff or max(diff) not in G.elements:
        return StepCheck("skip")
    t = distinguished_subset(G)
    if not t.elements < H.elements:
        return StepCheck("skip")
    heights = lattice_path(G).heights
    alpha_tilde = max(heights[g] for g in G.elements)
    ind_g = matching.index(G, M)
    ind_h = matching.index(H, M)
    if alpha_tilde >= 0:
        case, expected = 1, ind_g + 1
    else:
        case, expected = 2, 1
    status = "pass" if ind_h == expected else "fail"
    return StepCheck(status, case, ind_g, ind_h, expected)


def index_step_sweep(n: int) -> Report:
    """Exhaustively check the index increment over all admissible triples.

    For fixed G the admissible partners H are exactly the sets obtained from
    the distinguished facet of G by adding an element of M below the deleted
    pivot, so the sweep enumerates those directly.
    """
    rep = Report(f"index increment n={n}")
    tables = match_tables(n)
    by_case = {1: 0, 2: 0}
    checked = 0
    for m_mask in range(1, 1 << n):
        m_set = Subset.from_mask(n, m_mask)
        for size in range(max(n // 2, 1), m_mask.bit_count() + 1):
            for g_mask in sized_submasks(m_mask, size):
                g_set = Subset.from_mask(n, g_mask)
                pivot = matching.psi_tilde(g_set).pivot
                t_mask = tables.psi_tilde[g_mask]
                for x in bit_elements(m_mask & ~g_mask):
                    if x >= pivot:
                        continue
                    h_mask = t_mask | (1 << (x - 1))
                    result = index_step_check(M=m_set, G=g_set, H=Subset.from_mask(n, h_mask))
                    assert result.status != "skip"
                    checked += 1
                    by_case[result.case] += 1
                    if result.status == "fail":
                        rep.fail(
                            f"M={m_set} G={g_set} H={Subset.from_mask(n, h_mask)}: "
                            f"case {result.case}, index {result.index_H} != "
                            f"expected {result.expected_H} (index of G: {result.index_G})"
                        )
    rep.counts["triples_checked"] = checked
    rep.counts["case1"] = by_case[1]
    rep.counts["case2"] = by_case[2]
    rep.counts["failures"] = len(rep.failures)
    rep.lines.append(
        f"index increment: {checked} admissible triples "
        f"({by_case[1]} with non-negative restricted peak, {by_case[2]} below), "
        f"{len(rep.failures)} failures"
    )
    return rep


def verify_stanley(n: int, k: int, check_rank: bool | None = None) -> Report:
    """Full verification of the decomposition for one (n, k).

    Runs the squarefree Hilbert identity, then for every support of size at
    least k: the two-form family construction, the expected family size, the
    triangle condition, and (by default for n <= 9, where it is affordable)
    exact linear independence of the sign matrix.  The depth conclusion is
    reported with the upper bound cited, not verified.
    """
    require_upper_half(n, k)
    if check_rank is None:
        check_rank = n <= 9
    decomp = build_decomposition(n, k)
    rep = Report(f"stanley decomposition n={n} k={k}")
    rep.lines.append(f"stanley decomposition of M({n},{k}): {len(decomp.summands)} summands")

    hilbert = verify_hilbert(decomp, "squarefree")
    rep.lines.extend(hilbert.lines)
    rep.failures.extend(hilbert.failures)
    rep.passed &= hilbert.passed
    rep.counts["hilbert_supports"] = hilbert.counts["supports_checked"]
    rep.counts["hilbert_failures"] = len(hilbert.failures)

    tables = match_tables(n)
    supports = 0
    size_mismatches = 0
    triangle_violations = 0
    rank_checked = 0
    rank_failures = 0
    for m_mask in range(1, 1 << n):
        if m_mask.bit_count() < k:
            continue
        supports += 1
        members = _family_members(n, k, m_mask, tables)
        expect = comb(m_mask.bit_count() - 1, k - 1)
        if len(members) != expect:
            size_mismatches += 1
            rep.fail(
                f"support {Subset.from_mask(n, m_mask)}: family size {len(members)} "
                f"!= C(|M|-1,k-1) = {expect}"
            )
        family = ContributionFamily(
            Subset.from_mask(n, m_mask),
            k,
            tuple(FamilyMember(Subset.from_mask(n, g), ind) for g, ind in members),
        )
        tri = triangle_check(family)
        if not tri.passed:
            triangle_violations += 1
            g_bad, h_bad = tri.violation
            rep.fail(
                f"support {Subset.from_mask(n, m_mask)}: distinguished facet of "
                f"{g_bad} lies inside earlier {h_bad}"
            )
        if check_rank:
            rank_checked += 1
            if not rank_full(sign_matrix(family)):
                rank_failures += 1
                rep.fail(f"support {Subset.from_mask(n, m_mask)}: sign matrix rank deficient")

    rep.counts["summands"] = len(decomp.summands)
    rep.counts["supports"] = supports
    rep.counts["triangle_violations"] = triangle_violations
    rep.counts["family_size_mismatches"] = size_mismatches
    rep.counts["rank_checked"] = rank_checked
    rep.counts["rank_failures"] = rank_failures

    rep.lines.append(
        f"families: {supports} supports, sizes {'ok' if not size_mismatches else 'MISMATCHED'}, "
        f"two-form agreement held"
    )
    rep.lines.append(f"triangle condition (squashed order): {triangle_violations} violations")
    if check_rank:
        rep.lines.append(f"exact rank: {rank_checked} sign matrices, {rank_failures} rank deficient")
    else:
        rep.lines.append("exact rank: skipped at this size (rerun with rank checking forced)")

    z_sizes = sorted({len(sm.Z) for sm in decomp.summands})
    slim = sum(1 for sm in decomp.summands if len(sm.Z) == n - 1)
    min_z = min(z_sizes)
    rep.counts["min_Z"] = min_z
    if min_z != n - 1 or slim == 0:
        rep.fail(f"depth bookkeeping broken: |Z| sizes {z_sizes}, {slim} slim summands")
    rep.lines.append(
        f"depth: |Z| sizes {z_sizes}, minimum {min_z} = n-1 attained by {slim} summands"
    )
    if rep.passed:
        rep.lines.append(
            f"conclusion: sdepth M({n},{k}) >= {n - 1} verified by this decomposition; "
            f"equality with {n - 1} = n-1 follows from the known Hilbert depth upper bound "
            f"(Bruns, Krattenthaler & Uliczka 2010), which is cited here, not verified."
        )
    return rep


def decomposition_to_dict(decomp: Decomposition) -> dict:
    """Stable machine-readable form of a decomposition."""
    return {
        "n": decomp.n,
        "k": decomp.k,
        "summands": [
            {
                "S": list(sm.S.sorted_elements()),
                "Z": list(sm.Z.sorted_elements()),
                "removed": sm.removed,
                "G": list(sm.G.sorted_elements()),
                "m": sm.m.text(),
            }
            for sm in decomp.summands
        ],
    }
