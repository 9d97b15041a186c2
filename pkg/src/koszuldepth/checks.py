"""Exhaustive verification sweeps for the matching laws."""

from __future__ import annotations

from . import matching
from .bits import match_tables, phi_index, psi_index_table, submasks
from .report import Report
from .subsets import Subset


def check_inverse_law(n: int) -> Report:
    """Over all 2^n subsets: the two maps invert each other, the image of the
    downward map is the domain of the upward one, and the downward map is
    total above the halfway threshold."""
    rep = Report(f"inverse law n={n}")
    threshold = (n + 1 + 1) // 2  # ceil((n+1)/2)
    image: set[Subset] = set()
    phi_domain: set[Subset] = set()
    psi_defined = 0
    for mask in range(1 << n):
        g = Subset.from_mask(n, mask)
        down = matching.psi(g)
        up = matching.phi(g)
        if down.defined:
            psi_defined += 1
            image.add(down.value)
            back = matching.phi(down.value)
            if not back.defined or back.value != g:
                rep.fail(f"phi(psi({g})) != {g}")
        elif len(g) >= threshold:
            rep.fail(f"psi undefined on {g} despite |G| >= {threshold}")
        if up.defined:
            phi_domain.add(g)
            back = matching.psi(up.value)
            if not back.defined or back.value != g:
                rep.fail(f"psi(phi({g})) != {g}")
    for g in sorted(image ^ phi_domain, key=lambda s: (len(s), s.mask)):
        side = "image only" if g in image else "phi-domain only"
        rep.fail(f"image/domain mismatch at {g} ({side})")
    rep.counts["subsets"] = 1 << n
    rep.counts["psi_defined"] = psi_defined
    rep.counts["failures"] = len(rep.failures)
    rep.lines.append(
        f"inverse law: {1 << n} subsets, psi defined on {psi_defined}, "
        f"image(psi) == domain(phi): {'yes' if not (image ^ phi_domain) else 'NO'}, "
        f"{len(rep.failures)} counterexamples"
    )
    return rep


def check_index_equivalence(n: int) -> Report:
    """For every pair G inside M: the upward-walk index equals the index from
    exhaustive downward chains."""
    rep = Report(f"index equivalence n={n}")
    tables = match_tables(n)
    pairs = 0
    for m_mask in range(1 << n):
        downward = psi_index_table(tables, m_mask)
        for g_mask in submasks(m_mask):
            pairs += 1
            via_phi = phi_index(tables, g_mask, m_mask)
            via_psi = downward.get(g_mask, 0)
            if via_phi != via_psi:
                rep.fail(
                    f"M={Subset.from_mask(n, m_mask)} G={Subset.from_mask(n, g_mask)}: "
                    f"upward index {via_phi} != downward index {via_psi}"
                )
    rep.counts["pairs"] = pairs
    rep.counts["failures"] = len(rep.failures)
    rep.lines.append(f"index equivalence: {pairs} (G, M) pairs, {len(rep.failures)} disagreements")
    return rep


def check_greedy_agreement(n: int) -> Report:
    """Compare the greedy lexicographic matching against the closed formula.

    Agreement is asserted on the levels where the closed formula is total
    (sets of size at least ceil((n+1)/2)); lower levels are compared as well
    and any mismatch there is reported informationally, never as a failure.
    """
    rep = Report(f"greedy agreement n={n}")
    threshold = (n + 2) // 2  # ceil((n+1)/2)
    low_mismatches = 0
    upper_sets = 0
    for l in range(n):
        greedy = matching.greedy_lex_matching(n, l)
        upper = l + 1 >= threshold
        for mask in range(1 << n):
            if mask.bit_count() != l + 1:
                continue
            g = Subset.from_mask(n, mask)
            closed = matching.psi(g)
            expected = closed.value if closed.defined else None
            got = greedy.get(g)
            if upper:
                upper_sets += 1
                if got != expected:
                    rep.fail(f"level {l + 1}: greedy gives {got} but formula gives {expected} at {g}")
            elif got != expected:
                low_mismatches += 1
    rep.counts["upper_level_sets"] = upper_sets
    rep.counts["upper_mismatches"] = len(rep.failures)
    rep.counts["low_level_mismatches"] = low_mismatches
    rep.lines.append(
        f"greedy agreement: {upper_sets} sets on total levels (size >= {threshold}), "
        f"{len(rep.failures)} mismatches; below threshold: {low_mismatches} mismatches "
        f"(informational)"
    )
    return rep
