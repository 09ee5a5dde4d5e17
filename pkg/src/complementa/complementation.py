"""Complement search and the derived predicates: supercomplemented,
completely factorizable, C-separating, and transport to quotients.

T complements H when G = HT and H∩T = 1; for finite groups this is
equivalent to |H|·|T| = |G| with trivial intersection, which is what the
scans test, with the product-set equality asserted on every hit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import CapExceededError, FiniteGroup, PreconditionError, quotient
from .subgroups import (LATTICE_CAP, Subgroup, _small_gens,
                        _subgroups_order_dividing, bit_indices,
                        overgroups, product_bits, trivial_subgroup)


@dataclass(frozen=True)
class ComplementResult:
    """Outcome of a complement scan for one subgroup."""

    subject: Subgroup
    complements: tuple
    exhaustive: bool


def complements(g: FiniteGroup, h: Subgroup, mode: str = "all",
                cap: int = LATTICE_CAP) -> ComplementResult:
    """Scan subgroups of order |G|/|H| for complements of h, in canonical order.

    Every hit is re-verified against the explicit product set.
    """
    if mode not in ("first", "all"):
        raise PreconditionError(f"unknown mode {mode!r}")
    if g.order > cap:
        raise CapExceededError("lattice", cap, g.order)
    target = g.order // h.order
    hits = []
    for t in _subgroups_order_dividing(g, target):
        if t.order != target:
            continue
        if t.members & h.members == 1:
            if product_bits(g, h, t).bit_count() != g.order:
                raise AssertionError(
                    "order criterion and product set disagree: engine inconsistency")
            hits.append(t)
            if mode == "first":
                return ComplementResult(h, tuple(hits), False)
    return ComplementResult(h, tuple(hits), True)


def is_complemented(g: FiniteGroup, h: Subgroup, cap: int = LATTICE_CAP) -> bool:
    return g.cached(("complemented", h.members),
                    lambda: bool(complements(g, h, "first", cap).complements))


def is_supercomplemented(g: FiniteGroup, h: Subgroup, cap: int = LATTICE_CAP):
    """Whether every subgroup containing h is complemented in G.

    Returns (ok, witness); the witness is the first uncomplemented overgroup
    in canonical order when the answer is False.
    """
    for k in overgroups(g, h):
        if not is_complemented(g, k, cap):
            return False, k
    return True, None


def is_completely_factorizable(g: FiniteGroup, cap: int = LATTICE_CAP):
    """Whether every subgroup of G is complemented; (ok, witness).

    Asserted equivalent to the trivial subgroup being supercomplemented.
    """
    witness = None
    for k in _subgroups_order_dividing(g, g.order):
        if not is_complemented(g, k, cap):
            witness = k
            break
    via_trivial, trivial_witness = is_supercomplemented(g, trivial_subgroup(g), cap)
    if via_trivial != (witness is None) or (witness is None) != (trivial_witness is None):
        raise AssertionError(
            "completely-factorizable and supercomplemented(trivial) disagree")
    return witness is None, witness


def uncomplemented_subgroups(g: FiniteGroup, cap: int = LATTICE_CAP) -> tuple[Subgroup, ...]:
    return tuple(k for k in _subgroups_order_dividing(g, g.order)
                 if not is_complemented(g, k, cap))


def c_separating_subgroups(g: FiniteGroup, cap: int = LATTICE_CAP,
                           max_index: int | None = None) -> tuple[Subgroup, ...]:
    """All proper H such that every subgroup not contained in H is complemented.

    Equivalently: every uncomplemented subgroup lies inside H.  The result is
    upward closed among proper subgroups, which is asserted as an internal
    property.  ``max_index`` restricts the scan to subgroups of small index
    (the index-2-only scan used alongside the full scan in reports).
    """
    if g.order == 1:
        raise PreconditionError("C-separating subgroups are defined for nontrivial groups")
    if g.order > cap:
        raise CapExceededError("lattice", cap, g.order)
    bad = uncomplemented_subgroups(g, cap)
    out = []
    for h in _subgroups_order_dividing(g, g.order):
        if h.order == g.order:
            continue
        if max_index is not None and g.order // h.order > max_index:
            continue
        if all(h.contains(k) for k in bad):
            out.append(h)
    if max_index is None:
        found = {h.members for h in out}
        for h in out:
            for k in overgroups(g, h):
                if k.order < g.order and k.members not in found:
                    raise AssertionError("C-separating set is not upward closed")
    return tuple(out)


def has_c_separating(g: FiniteGroup, cap: int = LATTICE_CAP) -> bool:
    return bool(c_separating_subgroups(g, cap))


def is_c_separating(g: FiniteGroup, h: Subgroup, cap: int = LATTICE_CAP) -> bool:
    if h.order == g.order:
        return False
    return all(h.contains(k) for k in uncomplemented_subgroups(g, cap))


# -- transport to quotients of intermediate subgroups -------------------------


def subgroup_as_group(g: FiniteGroup, k: Subgroup):
    """Reindex a subgroup as a standalone group.

    Returns (group, to_local, from_local); elements are renumbered by
    ascending parent index, so the identity stays at 0.  The full subgroup
    returns the parent itself.
    """
    if k.order == g.order:
        ident = {e: e for e in g.elements()}
        return g, ident, tuple(g.elements())

    def build():
        elems = k.elements()
        to_local = {e: i for i, e in enumerate(elems)}
        mult = [[to_local[g.mult[a][b]] for b in elems] for a in elems]
        gens = [to_local[e] for e in (k.gens or ()) if e != 0]
        if closure_bits_local(mult, gens) != (1 << len(elems)) - 1:
            gens = [to_local[e] for e in _small_gens(g, k.members)]
        labels = [g.labels[e] for e in elems]
        grp = FiniteGroup(mult, gens, labels, name=f"{g.name}|sub{k.order}")
        return grp, to_local, elems

    return g.cached(("as_group", k.members), build)


def closure_bits_local(mult, seed) -> int:
    members = 1
    gens = [s for s in seed if s]
    for s in gens:
        members |= 1 << s
    frontier = [0] + gens
    while frontier:
        nxt = []
        for e in frontier:
            row = mult[e]
            for s in gens:
                p = row[s]
                if not members >> p & 1:
                    members |= 1 << p
                    nxt.append(p)
        frontier = nxt
    return members


def quotient_transport_check(g: FiniteGroup, h: Subgroup, k: Subgroup,
                             n: Subgroup, cap: int = LATTICE_CAP) -> bool:
    """Supercomplementedness transports to quotients: with H <= K <= G,
    N normal in K and H supercomplemented in K, the image of H must be
    supercomplemented in K/N.  Returns that final check's outcome."""
    if not k.contains(h):
        raise PreconditionError("H must be contained in K")
    if not k.contains(n):
        raise PreconditionError("N must be contained in K")
    k_grp, to_local, from_local = subgroup_as_group(g, k)
    n_local = 0
    for e in n.elements():
        n_local |= 1 << to_local[e]
    h_local_bits = 0
    for e in h.elements():
        h_local_bits |= 1 << to_local[e]
    h_local = Subgroup(k_grp, h_local_bits, _small_gens(k_grp, h_local_bits))
    ok, _ = is_supercomplemented(k_grp, h_local, cap)
    if not ok:
        raise PreconditionError("H is not supercomplemented in K")
    quo, proj = quotient(k_grp, n_local)
    img_bits = 0
    for e in bit_indices(h_local_bits):
        img_bits |= 1 << proj[e]
    img = Subgroup(quo, img_bits, _small_gens(quo, img_bits))
    ok_q, _ = is_supercomplemented(quo, img, cap)
    return ok_q
