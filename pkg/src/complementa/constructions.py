"""Distinguished group constructions and the small-group catalog driving the
property suites.

The two first-class builders are ``holomorph8`` (the holomorph of the cyclic
group of order 8, with its non-normal factorization handles) and
``split_p5_group(p)`` (an order-p^5 group factorizing as <x>·B with B
elementary abelian and neither factor normal).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cache

from ._primes import is_prime
from .groups import (ActionSpec, CapExceededError, FiniteGroup,
                     PreconditionError, cyclic, direct_product,
                     from_generators, semidirect_product)
from .subgroups import Subgroup, generated_subgroup

SPLIT_P5_CAP = 243


@dataclass(frozen=True)
class NamedGroup:
    """A group together with named element and subgroup handles."""

    group: FiniteGroup
    elements: dict = field(default_factory=dict)
    subgroups: dict = field(default_factory=dict)

    def subgroup(self, name: str) -> Subgroup:
        return self.subgroups[name]


def _named(group: FiniteGroup, elements=None, subgroup_gens=None) -> NamedGroup:
    elements = dict(elements or {})
    subgroups = {}
    for name, gens in (subgroup_gens or {}).items():
        subgroups[name] = generated_subgroup(group, gens)
    return NamedGroup(group, elements, subgroups)


# -- families ------------------------------------------------------------


@cache
def cyclic_named(n: int) -> NamedGroup:
    g = cyclic(n)
    if n == 1:
        return _named(g)
    return _named(g, {"x": 1}, {"x": (1,)})


@cache
def dihedral(n: int) -> NamedGroup:
    """Dihedral group of order 2n: rotations by s-inversion."""
    rot = cyclic(n, "r")
    flip = cyclic(2, "s")
    action = ActionSpec(flip, rot, {1: tuple((-i) % n for i in range(n))})
    g = semidirect_product(rot, flip, action)
    if n == 1:
        return _named(g, {"s": 1}, {"s": (1,)})
    r, s = 2, 1
    return _named(g, {"r": r, "s": s}, {"r": (r,), "s": (s,)})


@cache
def elementary_abelian(p: int, rank: int) -> NamedGroup:
    if not is_prime(p) or rank < 1:
        raise PreconditionError("need a prime p and rank >= 1")
    names = ["a", "b", "c", "d", "e5", "e6"]
    g = cyclic(p, names[0])
    for i in range(1, rank):
        g = direct_product(g, cyclic(p, names[i]))
    handles = {names[i]: p ** (rank - 1 - i) for i in range(rank)}
    return _named(g, handles, {k: (v,) for k, v in handles.items()})


@cache
def symmetric3() -> NamedGroup:
    g = from_generators([(1, 0, 2), (1, 2, 0)], names=["s", "r"], name="S3")
    return _named(g, {"s": 1, "r": 2}, {"s": (1,), "r": (2,)})


@cache
def alternating4() -> NamedGroup:
    g = from_generators([(1, 2, 0, 3), (1, 0, 3, 2)], names=["r", "s"], name="A4")
    return _named(g, {"r": 1, "s": 2}, {"r": (1,), "s": (2,)})


@cache
def dicyclic12() -> NamedGroup:
    """Order-12 dicyclic group as C3 : C4 with the order-4 part inverting."""
    a = cyclic(3, "a")
    b = cyclic(4, "b")
    action = ActionSpec(b, a, {1: (0, 2, 1)})
    g = semidirect_product(a, b, action)
    return _named(g, {"a": 4, "b": 1}, {"a": (4,), "b": (1,)})


def _unit_group(n: int) -> tuple[FiniteGroup, list[int]]:
    """Multiplicative group of units mod n as a table group; returns it with
    the unit value of each element index."""
    units = [u for u in range(1, max(n, 2)) if math.gcd(u, n) == 1] or [1]
    index = {u: i for i, u in enumerate(units)}
    mult = [[index[(a * b) % n] if n > 1 else 0 for b in units] for a in units]
    # greedy generating set, ascending unit values
    gens: list[int] = []
    have = {0}
    for i in range(1, len(units)):
        if i not in have:
            gens.append(i)
            have = set(_table_closure(mult, gens))
    labels = ["e"] + [f"u{u}" for u in units[1:]]
    return FiniteGroup(mult, gens, labels, name=f"U{n}"), units


def _table_closure(mult, gens):
    seen = {0}
    frontier = [0] + [g for g in gens if g]
    seen.update(frontier)
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                p = mult[e][s]
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return seen


@cache
def holomorph_cyclic(n: int, cap: int = 4096) -> NamedGroup:
    """Holomorph of the cyclic group of order n: C_n extended by its full
    automorphism group (units mod n acting by exponentiation)."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    aut, units = _unit_group(n)
    if n * aut.order > cap:
        raise CapExceededError("construction", cap, n * aut.order)
    base = cyclic(n, "x")
    images = {gi: tuple((units[gi] * i) % n for i in range(n)) for gi in aut.generators}
    g = semidirect_product(base, aut, ActionSpec(aut, base, images), cap=cap)
    if n == 1:
        return _named(g)
    x = aut.order
    return _named(g, {"x": x}, {"x": (x,)})


@cache
def holomorph8() -> NamedGroup:
    """The holomorph of C8 presented by its splitting: <x> of order 8 extended
    by two commuting involutions with x^a = x^-1 and x^b = x^5."""
    base = cyclic(8, "x")
    klein = direct_product(cyclic(2, "a"), cyclic(2, "b"))
    inv8 = tuple((-i) % 8 for i in range(8))
    pow5 = tuple((5 * i) % 8 for i in range(8))
    a_idx, b_idx = klein.generators
    action = ActionSpec(klein, base, {a_idx: inv8, b_idx: pow5})
    g = semidirect_product(base, klein, action)
    x, a, b = 4, a_idx, b_idx
    return _named(
        g,
        {"x": x, "a": a, "b": b},
        {"x": (x,), "a": (a,), "b": (b,), "V": (a, b)},
    )


@cache
def split_p5_group(p: int, cap: int = SPLIT_P5_CAP) -> NamedGroup:
    """Order-p^5 group G = A:F with A = <b> x <c>, F = <x>:<a>, |x| = p^2,
    x^a = x^(p+1), b^x = bc, c^x = c, and a acting trivially on A.

    G factorizes as <x>·B with B = <a> x <b> x <c> elementary abelian and
    neither <x> nor B normal.  For p = 2 the relation x^a = x^(p+1) = x^3
    coincides with inversion since |x| = 4.
    """
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if p ** 5 > cap:
        raise CapExceededError("construction", cap, p ** 5)
    xs = cyclic(p * p, "x")
    As = cyclic(p, "a")
    f_action = ActionSpec(As, xs, {1: tuple(((p + 1) * i) % (p * p) for i in range(p * p))})
    f_grp = semidirect_product(xs, As, f_action)

    a_part = direct_product(cyclic(p, "b"), cyclic(p, "c"))
    x_in_f, a_in_f = p, 1
    shear = tuple((i // p) * p + (i // p + i % p) % p for i in range(p * p))
    g_action = ActionSpec(f_grp, a_part,
                          {x_in_f: shear, a_in_f: tuple(range(p * p))})
    g = semidirect_product(a_part, f_grp, g_action)

    f_order = p ** 3
    x, a = x_in_f, a_in_f
    b, c = p * f_order, f_order
    return _named(
        g,
        {"x": x, "a": a, "b": b, "c": c},
        {"x": (x,), "a": (a,), "b": (b,), "c": (c,),
         "A": (b, c), "F": (x, a), "B": (a, b, c)},
    )


# -- catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """Recipe plus the expected fingerprint it must rebuild to."""

    name: str
    recipe: tuple
    order: int
    abelian: bool
    exponent: int

    def build(self) -> NamedGroup:
        return build_recipe(self.recipe)


RECIPES = {
    "cyclic": cyclic_named,
    "dihedral": dihedral,
    "elementary": elementary_abelian,
    "s3": symmetric3,
    "a4": alternating4,
    "dicyclic12": dicyclic12,
    "holomorph": holomorph_cyclic,
    "holomorph8": holomorph8,
    "split-p5": split_p5_group,
}


def build_recipe(recipe: tuple) -> NamedGroup:
    kind, params = recipe
    if kind == "direct":
        parts = [build_recipe(r) for r in params["factors"]]
        g = parts[0].group
        for part in parts[1:]:
            g = direct_product(g, part.group)
        return NamedGroup(g)
    if kind not in RECIPES:
        raise PreconditionError(f"unknown recipe kind {kind!r}")
    return RECIPES[kind](**params)


def _entry(name, recipe, order, abelian, exponent):
    return CatalogEntry(name, recipe, order, abelian, exponent)


@cache
def catalog() -> tuple[CatalogEntry, ...]:
    """Deterministic test corpus: cyclic and elementary abelian families,
    dihedral groups, the small nonabelian constructions, both order-p^5
    builders, the C8 holomorph, and a few direct products, all within the
    lattice cap."""
    entries = []
    for n in range(1, 33):
        entries.append(_entry(f"c{n}", ("cyclic", {"n": n}), n, True, n))
    for p, ranks in ((2, (2, 3, 4)), (3, (2, 3, 4)), (5, (2, 3))):
        for r in ranks:
            entries.append(_entry(f"ea{p}r{r}", ("elementary", {"p": p, "rank": r}),
                                  p ** r, True, p))
    for n in range(3, 17):
        entries.append(_entry(f"dih{2 * n}", ("dihedral", {"n": n}),
                              2 * n, False, math.lcm(n, 2)))
    entries.append(_entry("s3", ("s3", {}), 6, False, 6))
    entries.append(_entry("a4", ("a4", {}), 12, False, 6))
    entries.append(_entry("dicyclic12", ("dicyclic12", {}), 12, False, 12))
    entries.append(_entry("holomorph8", ("holomorph8", {}), 32, False, 8))
    entries.append(_entry("split-p5-2", ("split-p5", {"p": 2}), 32, False, 4))
    entries.append(_entry("split-p5-3", ("split-p5", {"p": 3}), 243, False, 9))
    entries.append(_entry("c4xc2",
                          ("direct", {"factors": (("cyclic", {"n": 4}), ("cyclic", {"n": 2}))}),
                          8, True, 4))
    entries.append(_entry("dih8xc2",
                          ("direct", {"factors": (("dihedral", {"n": 4}), ("cyclic", {"n": 2}))}),
                          16, False, 4))
    entries.append(_entry("s3xc3",
                          ("direct", {"factors": (("s3", {}), ("cyclic", {"n": 3}))}),
                          18, False, 6))
    entries.append(_entry("s3xs3",
                          ("direct", {"factors": (("s3", {}), ("s3", {}))}),
                          36, False, 6))
    entries.append(_entry("c2xa4",
                          ("direct", {"factors": (("cyclic", {"n": 2}), ("a4", {}))}),
                          24, False, 6))
    return tuple(entries)


def catalog_entry(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise PreconditionError(f"no catalog entry named {name!r}")
