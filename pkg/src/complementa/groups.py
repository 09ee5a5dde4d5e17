"""Finite groups as validated multiplication tables over dense indices 0..n-1.

The identity is always index 0.  Groups are immutable after construction;
every constructor validates the table (Latin square, identity, inverses,
generation) and, for orders up to ``ASSOC_AUDIT_CAP``, audits associativity
exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._primes import lcm, prime_factors

CONSTRUCTION_CAP = 4096
ASSOC_AUDIT_CAP = 512


class GroupError(Exception):
    """Base error for group construction and operations."""


class CapExceededError(GroupError):
    """A configured size cap was exceeded; carries the cap's name."""

    def __init__(self, cap_name: str, cap: int, requested: int):
        self.cap_name = cap_name
        self.cap = cap
        self.requested = requested
        super().__init__(f"{cap_name} cap exceeded: {requested} > {cap}")


class ActionError(GroupError):
    """An action specification is not a consistent automorphism action."""


class PreconditionError(GroupError):
    """An operation's stated precondition does not hold for the arguments."""


def _format_word(word: tuple[str, ...]) -> str:
    """Render a generator word, collapsing runs: (x,x,x,a) -> 'x^3·a'."""
    if not word:
        return "e"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        parts.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "·".join(parts)


def _join_labels(*parts: str) -> str:
    nontrivial = [p for p in parts if p != "e"]
    return "·".join(nontrivial) if nontrivial else "e"


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Attributes:
        order: number of elements.
        mult: tuple of row tuples; ``mult[a][b]`` is the index of a*b.
        inv: tuple of inverse indices.
        generators: element indices that generate the group.
        labels: display word for each element in the generators.
    """

    identity = 0

    def __init__(self, mult, generators, labels, name="G"):
        self.order = len(mult)
        self.mult = tuple(tuple(row) for row in mult)
        self.generators = tuple(generators)
        self.labels = tuple(labels)
        self.name = name
        self.inv = self._compute_inverses()
        self._cache: dict = {}
        self._validate()

    def _compute_inverses(self) -> tuple[int, ...]:
        inv = [0] * self.order
        for g, row in enumerate(self.mult):
            try:
                inv[g] = row.index(0)
            except ValueError:
                raise GroupError(f"row {g} has no inverse entry") from None
        return tuple(inv)

    def _validate(self):
        n = self.order
        if n == 0:
            raise GroupError("empty multiplication table")
        if len(self.labels) != n:
            raise GroupError("labels length does not match order")
        table = np.array(self.mult, dtype=np.int32)
        if table.shape != (n, n) or table.min() < 0 or table.max() >= n:
            raise GroupError("table entries out of range")
        ident = np.arange(n, dtype=np.int32)
        if not (np.array_equal(table[0], ident) and np.array_equal(table[:, 0], ident)):
            raise GroupError("index 0 is not a two-sided identity")
        if not (np.array_equal(np.sort(table, axis=1), np.tile(ident, (n, 1)))
                and np.array_equal(np.sort(table, axis=0), np.tile(ident[:, None], (1, n)))):
            raise GroupError("table is not a Latin square")
        inv = np.array(self.inv, dtype=np.int32)
        if not np.array_equal(table[ident, inv], np.zeros(n, dtype=np.int32)):
            raise GroupError("inverse table inconsistent")
        if n <= ASSOC_AUDIT_CAP:
            self._audit_associativity(table)
        # generators must reach every element under left multiplication
        reached = closure_indices(self.mult, self.generators)
        if len(reached) != n:
            raise GroupError("declared generators do not generate the group")

    def _audit_associativity(self, table: np.ndarray):
        n = self.order
        chunk = max(1, (1 << 22) // max(1, n * n))
        for start in range(0, n, chunk):
            rows = table[start:start + chunk]
            left = table[rows]            # [a,b,c] -> (a*b)*c
            right = rows[:, table]        # [a,b,c] -> a*(b*c)
            if not np.array_equal(left, right):
                raise GroupError("multiplication table is not associative")

    # -- element arithmetic ------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv_of(self, a: int) -> int:
        return self.inv[a]

    def conj(self, h: int, g: int) -> int:
        """h^g = g^-1 h g."""
        return self.mult[self.mult[self.inv[g]][h]][g]

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        return self.mult[self.mult[self.mult[self.inv[a]][self.inv[b]]][a]][b]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        out = 0
        for _ in range(k):
            out = self.mult[out][g]
        return out

    def elements(self) -> range:
        return range(self.order)

    def cached(self, key, builder):
        """Memoize a derived, immutable computation on this group."""
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    def __repr__(self):
        return f"<FiniteGroup {self.name} of order {self.order}>"


def closure_indices(mult, seed) -> list[int]:
    """BFS closure of element indices under the table, identity first."""
    seen = {0}
    order_found = [0]
    frontier = [0]
    gens = list(seed)
    while frontier:
        nxt = []
        for e in frontier:
            row = mult[e]
            for g in gens:
                p = row[g]
                if p not in seen:
                    seen.add(p)
                    order_found.append(p)
                    nxt.append(p)
        frontier = nxt
    return order_found


# -- constructors ---------------------------------------------------------


def from_generators(perms, names=None, cap: int = CONSTRUCTION_CAP,
                    name: str = "G") -> FiniteGroup:
    """Group generated by permutations, closed by BFS from the identity.

    Permutations are sequences over the same point set; enumeration order is
    deterministic in the given generator order, so equal inputs produce the
    identical table.
    """
    perms = [tuple(p) for p in perms]
    if not perms:
        return trivial_group()
    degree = len(perms[0])
    for p in perms:
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise GroupError(f"not a permutation of 0..{degree - 1}: {p}")
    if names is None:
        names = [f"g{i}" for i in range(len(perms))]
    identity = tuple(range(degree))
    elems = [identity]
    index = {identity: 0}
    words: list[tuple[str, ...]] = [()]
    pos = 0
    while pos < len(elems):
        e = elems[pos]
        for pname, p in zip(names, perms):
            composed = tuple(p[e[i]] for i in range(degree))
            if composed not in index:
                if len(elems) >= cap:
                    raise CapExceededError("construction", cap, len(elems) + 1)
                index[composed] = len(elems)
                elems.append(composed)
                words.append(words[pos] + (pname,))
        pos += 1
    n = len(elems)
    mult = [[index[tuple(b[a[i]] for i in range(degree))] for b in elems] for a in elems]
    gens = []
    for p in perms:
        gi = index[p]
        if gi != 0 and gi not in gens:
            gens.append(gi)
    labels = [_format_word(w) for w in words]
    return FiniteGroup(mult, gens, labels, name=name)


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], [], ["e"], name="1")


def cyclic(n: int, gen_name: str = "x") -> FiniteGroup:
    """Cyclic group of order n; generator is index 1 (none if n == 1)."""
    if n < 1:
        raise GroupError(f"cyclic order must be positive, got {n}")
    if n == 1:
        return trivial_group()
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + [gen_name if k == 1 else f"{gen_name}^{k}" for k in range(1, n)]
    return FiniteGroup(mult, [1], labels, name=f"C{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup,
                   cap: int = CONSTRUCTION_CAP) -> FiniteGroup:
    """Direct product on pairs, encoded as index = a * |H| + b."""
    n = g.order * h.order
    if n > cap:
        raise CapExceededError("construction", cap, n)
    ho = h.order
    mult = [[0] * n for _ in range(n)]
    for a1 in range(g.order):
        for b1 in range(ho):
            row = mult[a1 * ho + b1]
            grow, hrow = g.mult[a1], h.mult[b1]
            for a2 in range(g.order):
                ga = grow[a2] * ho
                for b2 in range(ho):
                    row[a2 * ho + b2] = ga + hrow[b2]
    gens = [a * ho for a in g.generators] + list(h.generators)
    labels = [_join_labels(g.labels[i // ho], h.labels[i % ho]) for i in range(n)]
    return FiniteGroup(mult, gens, labels, name=f"{g.name}x{h.name}")


@dataclass(frozen=True)
class ActionSpec:
    """Action of ``acting`` on ``acted`` by automorphisms.

    ``images`` maps each generator h of the acting group to the permutation
    n -> n^h of the acted group's indices.  The assignment must extend
    consistently to the whole acting group; this is checked during product
    construction by walking every edge of the acting group's Cayley graph.
    """

    acting: FiniteGroup
    acted: FiniteGroup
    images: dict = field(default_factory=dict)

    def validate_images(self):
        n = self.acted.order
        for gen in self.acting.generators:
            if gen not in self.images:
                raise ActionError(f"no image for generator {gen}")
        for gen, img in self.images.items():
            perm = tuple(img)
            if sorted(perm) != list(range(n)) or perm[0] != 0:
                raise ActionError(f"image of {gen} is not an identity-fixing permutation")
            mt = self.acted.mult
            for a in range(n):
                pa = perm[a]
                row, prow = mt[a], mt[pa]
                for b in range(n):
                    if perm[row[b]] != prow[perm[b]]:
                        raise ActionError(f"image of {gen} is not an automorphism")

    def full_action(self) -> list[tuple[int, ...]]:
        """Permutation n -> n^h for every h, or raise if inconsistent."""
        self.validate_images()
        h_grp = self.acting
        n = self.acted.order
        ident = tuple(range(n))
        alpha: list = [None] * h_grp.order
        alpha[0] = ident
        frontier = [0]
        gen_imgs = [(g, tuple(self.images[g])) for g in h_grp.generators]
        while frontier:
            nxt = []
            for h in frontier:
                ah = alpha[h]
                for g, ag in gen_imgs:
                    h2 = h_grp.mult[h][g]
                    # right action: n^(hg) = (n^h)^g
                    cand = tuple(ag[ah[i]] for i in range(n))
                    if alpha[h2] is None:
                        alpha[h2] = cand
                        nxt.append(h2)
                    elif alpha[h2] != cand:
                        raise ActionError(
                            "images are inconsistent with the acting group's relations")
            frontier = nxt
        return alpha


def semidirect_product(n_grp: FiniteGroup, h_grp: FiniteGroup, action: ActionSpec,
                       cap: int = CONSTRUCTION_CAP) -> FiniteGroup:
    """Split extension of ``n_grp`` (normal) by ``h_grp``.

    Elements are pairs (n, h) encoded as n * |H| + h and written n·h.  The
    acting group acts by conjugation exponents, n^h, so
    (n1, h1)(n2, h2) = (n1 · n2^(h1^-1), h1 h2); with the trivial action the
    table equals direct_product's.
    """
    if action.acting is not h_grp or action.acted is not n_grp:
        raise ActionError("action endpoints do not match the product factors")
    total = n_grp.order * h_grp.order
    if total > cap:
        raise CapExceededError("construction", cap, total)
    alpha = action.full_action()
    alpha_inv = [alpha[h_grp.inv[h]] for h in range(h_grp.order)]
    ho = h_grp.order
    mult = [[0] * total for _ in range(total)]
    for n1 in range(n_grp.order):
        nrow = n_grp.mult[n1]
        for h1 in range(ho):
            row = mult[n1 * ho + h1]
            act = alpha_inv[h1]
            hrow = h_grp.mult[h1]
            for n2 in range(n_grp.order):
                nn = nrow[act[n2]] * ho
                for h2 in range(ho):
                    row[n2 * ho + h2] = nn + hrow[h2]
    gens = [a * ho for a in n_grp.generators] + list(h_grp.generators)
    labels = [_join_labels(n_grp.labels[i // ho], h_grp.labels[i % ho])
              for i in range(total)]
    return FiniteGroup(mult, gens, labels, name=f"{n_grp.name}:{h_grp.name}")


def trivial_action(n_grp: FiniteGroup, h_grp: FiniteGroup) -> ActionSpec:
    ident = tuple(range(n_grp.order))
    return ActionSpec(h_grp, n_grp, {g: ident for g in h_grp.generators})


def quotient(g: FiniteGroup, normal_members: int):
    """Quotient by a normal subgroup given as a membership bitset.

    Cosets are numbered by ascending minimal element; returns the quotient
    group and the projection list (element index -> coset index).  The
    projection is verified to be a homomorphism.
    """
    n = g.order
    coset_of = [-1] * n
    reps = []
    nm_elems = [e for e in range(n) if normal_members >> e & 1]
    for e in range(n):
        if coset_of[e] >= 0:
            continue
        ci = len(reps)
        reps.append(e)
        for m in nm_elems:
            coset_of[g.mult[m][e]] = ci
    if not _is_normal_bits(g, normal_members):
        raise PreconditionError("subgroup is not normal; quotient undefined")
    q = len(reps)
    mult = [[coset_of[g.mult[reps[i]][reps[j]]] for j in range(q)] for i in range(q)]
    gens = []
    for gen in g.generators:
        gi = coset_of[gen]
        if gi != 0 and gi not in gens:
            gens.append(gi)
    labels = [g.labels[r] for r in reps]
    quo = FiniteGroup(mult, gens, labels, name=f"{g.name}/N")
    for a in range(n):
        ca = coset_of[a]
        for b in range(n):
            if coset_of[g.mult[a][b]] != quo.mult[ca][coset_of[b]]:
                raise GroupError("projection failed homomorphism audit")
    return quo, coset_of


def cached_quotient(g: FiniteGroup, normal_members: int):
    """Memoized quotient; safe because groups and bitsets are immutable."""
    return g.cached(("quotient", normal_members),
                    lambda: quotient(g, normal_members))


def _is_normal_bits(g: FiniteGroup, members: int) -> bool:
    for e in range(g.order):
        if members >> e & 1:
            for gen in g.generators:
                if not members >> g.conj(e, gen) & 1:
                    return False
    return True


# -- elementwise invariants ------------------------------------------------


def element_order(g: FiniteGroup, e: int) -> int:
    k, cur = 1, e
    while cur != 0:
        cur = g.mult[cur][e]
        k += 1
    return k


def element_orders(g: FiniteGroup) -> tuple[int, ...]:
    return g.cached("element_orders",
                    lambda: tuple(element_order(g, e) for e in g.elements()))


def exponent(g: FiniteGroup) -> int:
    return lcm(element_orders(g))


def primes_of(g: FiniteGroup) -> set[int]:
    out: set[int] = set()
    for k in element_orders(g):
        out.update(prime_factors(k))
    return out


# -- cayley-v1 serialization ------------------------------------------------

CAYLEY_FORMAT = "cayley-v1"


def group_to_dict(g: FiniteGroup) -> dict:
    """Serializable form: version tag, order, row-major table, generators, labels."""
    flat = [v for row in g.mult for v in row]
    return {
        "version": CAYLEY_FORMAT,
        "order": g.order,
        "mult": flat,
        "generators": list(g.generators),
        "labels": list(g.labels),
    }


def group_from_dict(data: dict) -> FiniteGroup:
    if data.get("version") != CAYLEY_FORMAT:
        raise GroupError(f"unsupported format version: {data.get('version')!r}")
    n = int(data["order"])
    flat = data["mult"]
    if len(flat) != n * n:
        raise GroupError("mult length does not match order^2")
    mult = [flat[i * n:(i + 1) * n] for i in range(n)]
    labels = data.get("labels") or [str(i) for i in range(n)]
    return FiniteGroup(mult, data.get("generators", []), labels)
