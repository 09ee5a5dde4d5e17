"""Structural series and distinguished subgroups: derived/lower-central/chief
series, centre, Frattini and Sylow subgroups, minimal normal subgroups."""

from __future__ import annotations

from dataclasses import dataclass

from ._primes import is_prime, lcm, p_part, prime_factors
from .groups import FiniteGroup, PreconditionError, cached_quotient
from .subgroups import (Subgroup, all_subgroups, closure_bits,
                        full_subgroup, is_abelian, is_elementary_abelian,
                        normal_closure, _small_gens, trivial_subgroup)


@dataclass(frozen=True)
class FactorInfo:
    order: int
    abelian: bool
    elementary_abelian: bool
    prime: int | None


@dataclass(frozen=True)
class SeriesReport:
    """A descending subgroup series with per-step factor structure.

    ``length`` is the derived length or nilpotency class when the series
    reaches the trivial subgroup, None otherwise.
    """

    kind: str
    terms: tuple
    length: int | None
    factors: tuple

    def reached_trivial(self) -> bool:
        return self.terms[-1].order == 1


def as_subgroup(x) -> Subgroup:
    if isinstance(x, Subgroup):
        return x
    return x.cached("full_subgroup", lambda: full_subgroup(x))


def commutator_subgroup(g: FiniteGroup, a: Subgroup, b: Subgroup) -> Subgroup:
    """⟨[a,b] : a in A, b in B⟩."""
    comms = set()
    for x in a.elements():
        for y in b.elements():
            comms.add(g.commutator(x, y))
    comms.discard(0)
    seed = sorted(comms)
    bits = closure_bits(g, seed)
    return Subgroup(g, bits, _small_gens(g, bits))


def derived_subgroup(x) -> Subgroup:
    sub = as_subgroup(x)
    g = sub.parent
    return g.cached(("derived", sub.members),
                    lambda: commutator_subgroup(g, sub, sub))


def _section_exponent(g: FiniteGroup, a: Subgroup, b_bits: int) -> int:
    """Exponent of the section A/B: lcm over a in A of min k with a^k in B."""
    orders = []
    for e in a.elements():
        k, cur = 1, e
        while not b_bits >> cur & 1:
            cur = g.mult[cur][e]
            k += 1
        orders.append(k)
    return lcm(orders)


def section_info(g: FiniteGroup, a: Subgroup, b: Subgroup) -> FactorInfo:
    """Structure of the factor A/B for B normal in A."""
    order = a.order // b.order
    abelian = all(b.members >> g.commutator(x, y) & 1
                  for x in a.elements() for y in a.elements())
    exp = _section_exponent(g, a, b.members) if abelian else 0
    elementary = order == 1 or (abelian and is_prime(exp))
    primes = prime_factors(order)
    return FactorInfo(order, abelian, elementary,
                      primes[0] if len(primes) == 1 else None)


def derived_series(x) -> SeriesReport:
    sub = as_subgroup(x)
    g = sub.parent
    terms = [sub]
    while True:
        nxt = derived_subgroup(terms[-1])
        if nxt.members == terms[-1].members:
            break
        terms.append(nxt)
    solvable = terms[-1].order == 1
    factors = tuple(section_info(g, terms[i], terms[i + 1])
                    for i in range(len(terms) - 1))
    return SeriesReport("derived", tuple(terms),
                        len(terms) - 1 if solvable else None, factors)


def derived_length(x) -> int | None:
    """Derived length, or None when the derived series does not reach 1."""
    sub = as_subgroup(x)
    return sub.parent.cached(("derived_len", sub.members),
                             lambda: derived_series(sub).length)


def center(g: FiniteGroup) -> Subgroup:
    members = 0
    for z in g.elements():
        row = g.mult[z]
        if all(row[gen] == g.mult[gen][z] for gen in g.generators):
            members |= 1 << z
    return Subgroup(g, members, _small_gens(g, members))


def lower_central_series(x) -> SeriesReport:
    sub = as_subgroup(x)
    g = sub.parent
    terms = [sub]
    while True:
        nxt = commutator_subgroup(g, terms[-1], sub)
        if nxt.members == terms[-1].members:
            break
        terms.append(nxt)
    nilpotent = terms[-1].order == 1
    factors = tuple(section_info(g, terms[i], terms[i + 1])
                    for i in range(len(terms) - 1))
    return SeriesReport("lower-central", tuple(terms),
                        len(terms) - 1 if nilpotent else None, factors)


def is_nilpotent(x) -> bool:
    sub = as_subgroup(x)
    return sub.parent.cached(
        ("nilpotent", sub.members),
        lambda: lower_central_series(sub).reached_trivial())


def frattini(g: FiniteGroup) -> Subgroup:
    """Intersection of all maximal subgroups (G itself if none exist)."""
    lat = all_subgroups(g)
    maximal = lat.maximal_subgroups()
    if not maximal:
        return as_subgroup(g)
    bits = (1 << g.order) - 1
    for m in maximal:
        bits &= m.members
    return Subgroup(g, bits, _small_gens(g, bits))


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroup(g: FiniteGroup, p: int, containing: Subgroup | None = None) -> Subgroup:
    """A Sylow p-subgroup, canonical-first; optionally one containing a given p-subgroup."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    target = p_part(g.order, p)
    lat = all_subgroups(g)
    candidates = lat.by_order(target)
    if containing is not None:
        if not _is_p_power(containing.order, p):
            raise PreconditionError("given subgroup is not a p-subgroup")
        for s in candidates:
            if s.contains(containing):
                return s
        raise AssertionError("Sylow theorem violated: no Sylow subgroup contains the p-subgroup")
    return candidates[0]


def p_subgroups(g: FiniteGroup, p: int) -> tuple[Subgroup, ...]:
    """All subgroups of p-power order (including the trivial subgroup)."""
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    lat = all_subgroups(g)
    return tuple(s for s in lat.subgroups if _is_p_power(s.order, p))


def minimal_normal_subgroups(g: FiniteGroup) -> tuple[Subgroup, ...]:
    """Minimal nontrivial normal subgroups, via normal closures of single elements.

    Every  minimal normal subgroup is the normal closure of any of its
    nonidentity elements, so the minimal elements among those closures are
    exactly the minimal normal subgroups.  Avoids needing the full lattice.
    """

    def build():
        closures: dict[int, Subgroup] = {}
        for e in range(1, g.order):
            sub = normal_closure(g, Subgroup(g, closure_bits(g, (e,)), (e,)))
            closures.setdefault(sub.members, sub)
        subs = list(closures.values())
        minimal = [s for s in subs
                   if not any(t.members != s.members and s.contains(t) for t in subs)]
        return tuple(sorted(minimal, key=Subgroup.sort_key))

    return g.cached("min_normals", build)


def chief_series(g: FiniteGroup) -> SeriesReport:
    """A chief series, refined by canonical-first minimal normal subgroups
    of the successive quotients, pulled back to G."""
    ascending = [trivial_subgroup(g)]
    factors_up = []
    while ascending[-1].order < g.order:
        current = ascending[-1]
        quo, proj = cached_quotient(g, current.members)
        m = minimal_normal_subgroups(quo)[0]
        pre_bits = 0
        for e in g.elements():
            if m.members >> proj[e] & 1:
                pre_bits |= 1 << e
        ascending.append(Subgroup(g, pre_bits, _small_gens(g, pre_bits)))
        primes = prime_factors(m.order)
        factors_up.append(FactorInfo(m.order, is_abelian(m),
                                     is_elementary_abelian(m),
                                     primes[0] if len(primes) == 1 else None))
    terms = tuple(reversed(ascending))
    return SeriesReport("chief", terms, len(terms) - 1,
                        tuple(reversed(factors_up)))
