"""Ring constructions: products, quotients, trivial extensions, localizations.

Each construction attaches a descriptor object to the produced ring so that
expansions and the verifier can recover the ingredients. Labels double as
provenance strings: for catalog-shaped inputs they re-parse to a ring with
identical tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .errors import ConstructionError, RingMismatchError, TableError
from .ideals import Ideal, generator_list, is_ideal_mask
from .rings import Element, FiniteRing, RingHom


# ----------------------------------------------------------------------
# products


@dataclass
class ProductOf:
    """Descriptor for a product ring, with row-major pair encoding."""

    left: FiniteRing
    right: FiniteRing

    def encode(self, a: int, b: int) -> int:
        return a * self.right.order + b

    def decode(self, i: int) -> tuple[int, int]:
        return divmod(i, self.right.order)

    def pair_mask(self, m1: int, m2: int) -> int:
        n2 = self.right.order
        out = 0
        for a in range(self.left.order):
            if (m1 >> a) & 1:
                base = a * n2
                for b in range(n2):
                    if (m2 >> b) & 1:
                        out |= 1 << (base + b)
        return out

    def decompose_mask(self, mask: int) -> tuple[int, int]:
        """Split an ideal mask into its two component ideal masks."""
        m1 = m2 = 0
        n2 = self.right.order
        i = mask
        while i:
            low = i & -i
            a, b = divmod(low.bit_length() - 1, n2)
            m1 |= 1 << a
            m2 |= 1 << b
            i ^= low
        assert self.pair_mask(m1, m2) == mask, "mask is not a product ideal"
        return m1, m2


def make_product(R1: FiniteRing, R2: FiniteRing) -> FiniteRing:
    """The componentwise product ring R1 x R2."""
    info = ProductOf(R1, R2)
    n1, n2 = R1.order, R2.order
    n = n1 * n2
    add = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for a1 in range(n1):
        for b1 in range(n2):
            i = a1 * n2 + b1
            arow1, mrow1 = R1.add_table[a1], R1.mul_table[a1]
            arow2, mrow2 = R2.add_table[b1], R2.mul_table[b1]
            for a2 in range(n1):
                base_a = arow1[a2] * n2
                base_m = mrow1[a2] * n2
                for b2 in range(n2):
                    j = a2 * n2 + b2
                    add[i][j] = base_a + arow2[b2]
                    mul[i][j] = base_m + mrow2[b2]
    names = tuple(
        f"({R1.element_name(a)},{R2.element_name(b)})"
        for a in range(n1)
        for b in range(n2)
    )
    return FiniteRing(add, mul, f"{R1.label}x{R2.label}", construction=info, element_names=names)


# ----------------------------------------------------------------------
# quotients


@dataclass
class QuotientOf:
    """Descriptor for a quotient ring R/I."""

    parent: FiniteRing
    ideal_mask: int
    projection: RingHom = field(repr=False)


def _coset_partition(R: FiniteRing, imask: int) -> tuple[list[int], list[int]]:
    """Map each element to the smallest member of its coset, plus the reps."""
    rep = [-1] * R.order
    add = R.add_table
    members = [a for a in range(R.order) if (imask >> a) & 1]
    for a in range(R.order):
        if rep[a] >= 0:
            continue
        coset = sorted(add[a][i] for i in members)
        lead = coset[0]
        for c in coset:
            rep[c] = lead
    reps = sorted(set(rep))
    return rep, reps


def make_quotient(R: FiniteRing, I: Ideal) -> FiniteRing:
    """The quotient ring R/I, elements indexed by sorted coset leaders."""
    if I.ring is not R:
        raise RingMismatchError("ideal belongs to a different ring")
    if not I.is_proper:
        raise ConstructionError("cannot quotient by the unit ideal, the zero ring is excluded")
    rep, reps = _coset_partition(R, I.mask)
    index = {r: k for k, r in enumerate(reps)}
    m = len(reps)
    add = [[index[rep[R.add_table[reps[i]][reps[j]]]] for j in range(m)] for i in range(m)]
    mul = [[index[rep[R.mul_table[reps[i]][reps[j]]]] for j in range(m)] for i in range(m)]
    gens = ",".join(str(g) for g in generator_list(I))
    label = f"{R.label}/({gens})"
    names = tuple(R.element_name(r) for r in reps)
    Q = FiniteRing(add, mul, label, element_names=names)
    proj = RingHom(R, Q, tuple(index[rep[a]] for a in range(R.order)))
    Q.construction = QuotientOf(R, I.mask, proj)
    return Q


def quotient_projection(Q: FiniteRing) -> RingHom:
    info = Q.construction
    if not isinstance(info, QuotientOf):
        raise RingMismatchError(f"{Q.label} was not built as a quotient")
    return info.projection


# ----------------------------------------------------------------------
# finite modules and trivial extensions


class FiniteModule:
    """A finite module over a finite ring, as dense add and action tables.

    spec_label is the module part of a trivial-extension provenance string
    ("reg", "quot:(gens)"), or a free-form tag for hand-built modules.
    """

    def __init__(
        self,
        ring: FiniteRing,
        add_table: Sequence[Sequence[int]],
        action: Sequence[Sequence[int]],
        spec_label: str,
        element_names: Optional[Sequence[str]] = None,
    ):
        self.ring = ring
        self.order = len(add_table)
        if self.order < 1:
            raise ConstructionError("module must be nonempty")
        self.add_table = tuple(tuple(row) for row in add_table)
        self.action = tuple(tuple(row) for row in action)
        self.spec_label = spec_label
        if element_names is not None:
            self.element_names = tuple(element_names)
        else:
            self.element_names = tuple(str(i) for i in range(self.order))
        self._validate()
        self.cache: dict = {}

    def _validate(self) -> None:
        m, n = self.order, self.ring.order
        for row in self.add_table:
            if len(row) != m or any(not (0 <= v < m) for v in row):
                raise TableError("module addition table is malformed")
        if len(self.action) != n:
            raise TableError("module action table must have one row per ring element")
        for row in self.action:
            if len(row) != m or any(not (0 <= v < m) for v in row):
                raise TableError("module action table is malformed")
        add = self.add_table
        if add != tuple(zip(*add)):
            raise TableError("module addition is not commutative")
        zero = None
        ident = tuple(range(m))
        for e in range(m):
            if add[e] == ident:
                zero = e
                break
        if zero is None:
            raise TableError("module addition has no identity")
        self.zero = zero
        for e in range(m):
            if zero not in add[e]:
                raise TableError(f"module element {e} has no additive inverse")
        for a in range(m):
            arow = add[a]
            for b in range(m):
                ab = arow[b]
                brow = add[b]
                for c in range(m):
                    if add[ab][c] != arow[brow[c]]:
                        raise TableError(f"module addition not associative at ({a},{b},{c})")
        act = self.action
        radd, rmul = self.ring.add_table, self.ring.mul_table
        if act[self.ring.one] != ident:
            raise TableError("module action of one is not the identity")
        for r in range(n):
            arow = act[r]
            for e in range(m):
                # r(e+f) = re + rf
                for f_ in range(m):
                    if arow[add[e][f_]] != add[arow[e]][arow[f_]]:
                        raise TableError(f"action not additive at ({r},{e},{f_})")
            for s in range(n):
                srow = act[s]
                # (r+s)e = re + se and (rs)e = r(se)
                plus = act[radd[r][s]]
                times = act[rmul[r][s]]
                for e in range(m):
                    if plus[e] != add[arow[e]][srow[e]]:
                        raise TableError(f"action not linear in the ring at ({r},{s},{e})")
                    if times[e] != arow[srow[e]]:
                        raise TableError(f"action not associative at ({r},{s},{e})")

    def add(self, e: int, f: int) -> int:
        return self.add_table[e][f]

    def act(self, r: int, e: int) -> int:
        return self.action[r][e]

    def element_name(self, e: int) -> str:
        return self.element_names[e]

    def span(self, generators: Sequence[int]) -> int:
        """Bitmask of the submodule generated by the given elements."""
        mask = 1 << self.zero
        members = [self.zero]
        stack = list(generators)
        while stack:
            e = stack.pop()
            if (mask >> e) & 1:
                continue
            mask |= 1 << e
            for r in range(self.ring.order):
                v = self.action[r][e]
                if not (mask >> v) & 1:
                    stack.append(v)
            arow = self.add_table[e]
            for mmb in members:
                v = arow[mmb]
                if not (mask >> v) & 1:
                    stack.append(v)
            members.append(e)
        return mask

    def submodules(self) -> tuple[int, ...]:
        """All submodule bitmasks, ordered by cardinality then bitset value."""
        got = self.cache.get("submodules")
        if got is not None:
            return got
        cyclic = sorted({self.span((e,)) for e in range(self.order)})
        masks = set(cyclic)
        queue = list(cyclic)
        while queue:
            mask = queue.pop()
            elems = [e for e in range(self.order) if (mask >> e) & 1]
            for c in cyclic:
                if not (c & ~mask):
                    continue
                out = 0
                for b in range(self.order):
                    if (c >> b) & 1:
                        row = self.add_table[b]
                        for a in elems:
                            out |= 1 << row[a]
                if out not in masks:
                    masks.add(out)
                    queue.append(out)
        val = tuple(sorted(masks, key=lambda v: (v.bit_count(), v)))
        self.cache["submodules"] = val
        return val

    def module_colon(self, fmask: int, c: Union[int, Element]) -> int:
        """Bitmask of (F : c) = {e : c e lies in F}."""
        if isinstance(c, Element):
            if c.ring is not self.ring:
                raise RingMismatchError("element belongs to a different ring")
            c = c.index
        row = self.action[c]
        return sum(1 << e for e in range(self.order) if (fmask >> row[e]) & 1)

    def __repr__(self) -> str:
        return f"FiniteModule({self.spec_label!r} over {self.ring.label}, order={self.order})"


def regular_module(A: FiniteRing) -> FiniteModule:
    """A as a module over itself."""
    return FiniteModule(A, A.add_table, A.mul_table, "reg", element_names=A.element_names)


def quotient_module(A: FiniteRing, J: Ideal) -> FiniteModule:
    """The module A/J with the induced action."""
    if J.ring is not A:
        raise RingMismatchError("ideal belongs to a different ring")
    rep, reps = _coset_partition(A, J.mask)
    index = {r: k for k, r in enumerate(reps)}
    m = len(reps)
    add = [[index[rep[A.add_table[reps[i]][reps[j]]]] for j in range(m)] for i in range(m)]
    action = [[index[rep[A.mul_table[r][reps[j]]]] for j in range(m)] for r in range(A.order)]
    gens = ",".join(str(g) for g in generator_list(J))
    names = tuple(A.element_name(r) for r in reps)
    return FiniteModule(A, add, action, f"quot:({gens})", element_names=names)


def module_product(E1: FiniteModule, E2: FiniteModule) -> FiniteModule:
    """The direct product of two modules over the same ring."""
    if E1.ring is not E2.ring:
        raise RingMismatchError("modules live over different rings")
    m1, m2 = E1.order, E2.order
    add = [
        [E1.add_table[a1][a2] * m2 + E2.add_table[b1][b2] for a2 in range(m1) for b2 in range(m2)]
        for a1 in range(m1)
        for b1 in range(m2)
    ]
    action = [
        [E1.action[r][a] * m2 + E2.action[r][b] for a in range(m1) for b in range(m2)]
        for r in range(E1.ring.order)
    ]
    names = tuple(
        f"({E1.element_name(a)},{E2.element_name(b)})" for a in range(m1) for b in range(m2)
    )
    return FiniteModule(
        E1.ring, add, action, f"({E1.spec_label}x{E2.spec_label})", element_names=names
    )


@dataclass
class TrivialExtensionOf:
    """Descriptor for A extended by the module E, row-major pair encoding."""

    base: FiniteRing
    module: FiniteModule

    def encode(self, a: int, e: int) -> int:
        return a * self.module.order + e

    def decode(self, i: int) -> tuple[int, int]:
        return divmod(i, self.module.order)

    def pair_mask(self, imask: int, fmask: int) -> int:
        m = self.module.order
        out = 0
        for a in range(self.base.order):
            if (imask >> a) & 1:
                base = a * m
                for e in range(m):
                    if (fmask >> e) & 1:
                        out |= 1 << (base + e)
        return out

    def split_pair_mask(self, mask: int) -> Optional[tuple[int, int]]:
        """Recover (I, F) masks when the mask has pair form, else None."""
        m = self.module.order
        imask = 0
        for a in range(self.base.order):
            if (mask >> (a * m + self.module.zero)) & 1:
                imask |= 1 << a
        fmask = 0
        for e in range(m):
            if (mask >> (self.base.zero * m + e)) & 1:
                fmask |= 1 << e
        if self.pair_mask(imask, fmask) == mask:
            return imask, fmask
        return None

    def pair_envelope(self, mask: int) -> tuple[int, int]:
        """The smallest enveloping pair (I, F) with I E inside F."""
        m = self.module.order
        imask = 0
        emask = 0
        i = mask
        while i:
            low = i & -i
            a, e = divmod(low.bit_length() - 1, m)
            imask |= 1 << a
            emask |= 1 << e
            i ^= low
        gens = [e for e in range(m) if (emask >> e) & 1]
        for a in range(self.base.order):
            if (imask >> a) & 1:
                row = self.module.action[a]
                gens.extend(row[e] for e in range(m))
        fmask = self.module.span(gens)
        return imask, fmask

    def is_ideal_pair(self, I: Ideal, fmask: int) -> bool:
        """Whether I E lies inside F, making I with F an ideal pair."""
        if I.ring is not self.base:
            raise RingMismatchError("ideal belongs to a different ring")
        for a in I.members_sorted:
            row = self.module.action[a]
            for e in range(self.module.order):
                if not (fmask >> row[e]) & 1:
                    return False
        return True

    def pair_ideals(self) -> tuple[tuple[Ideal, int], ...]:
        """All (I, F) pairs that form ideals of the extension."""
        out = []
        for I in self.base.ideals():
            for fmask in self.module.submodules():
                if self.is_ideal_pair(I, fmask):
                    out.append((I, fmask))
        return tuple(out)


def make_trivial_extension(A: FiniteRing, E: FiniteModule) -> FiniteRing:
    """The trivial extension of A by E: (a,e)(b,f) = (ab, af + be)."""
    if E.ring is not A:
        raise RingMismatchError("module lives over a different ring")
    info = TrivialExtensionOf(A, E)
    n, m = A.order, E.order
    order = n * m
    add = [[0] * order for _ in range(order)]
    mul = [[0] * order for _ in range(order)]
    for a in range(n):
        for e in range(m):
            i = a * m + e
            arowA, mrowA = A.add_table[a], A.mul_table[a]
            act_a = E.action[a]
            for b in range(n):
                act_b = E.action[b]
                base_a = arowA[b] * m
                base_m = mrowA[b] * m
                for f_ in range(m):
                    j = b * m + f_
                    add[i][j] = base_a + E.add_table[e][f_]
                    mul[i][j] = base_m + E.add_table[act_a[f_]][act_b[e]]
    names = tuple(
        f"({A.element_name(a)}|{E.element_name(e)})" for a in range(n) for e in range(m)
    )
    label = f"triv({A.label},{E.spec_label})"
    return FiniteRing(add, mul, label, construction=info, element_names=names)


# ----------------------------------------------------------------------
# multiplicative sets and localization


class MultiplicativeSet:
    """A multiplicatively closed subset containing one and excluding zero."""

    def __init__(self, ring: FiniteRing, members, generators: Optional[Sequence[int]] = None):
        self.ring = ring
        self.members = frozenset(members)
        if ring.one not in self.members:
            raise ConstructionError("multiplicative set must contain one")
        if ring.zero in self.members:
            raise ConstructionError("multiplicative set contains zero, localization would be the zero ring")
        mul = ring.mul_table
        for a in self.members:
            row = mul[a]
            for b in self.members:
                if row[b] not in self.members:
                    raise ConstructionError(
                        f"set is not multiplicatively closed, witness ({a}, {b})"
                    )
        if generators is None:
            self.generators = tuple(sorted(self.members))
        else:
            self.generators = tuple(generators)

    @classmethod
    def from_generators(cls, R: FiniteRing, gens: Sequence[int]) -> MultiplicativeSet:
        members = {R.one}
        stack = [g for g in gens]
        mul = R.mul_table
        while stack:
            s = stack.pop()
            if s in members:
                continue
            members.add(s)
            for t in list(members):
                stack.append(mul[s][t])
        return cls(R, members, generators=tuple(sorted(set(gens))))

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __repr__(self) -> str:
        return f"MultiplicativeSet({self.ring.label}, {sorted(self.members)})"


@dataclass
class LocalizationOf:
    """Descriptor for a localization, realized as a quotient."""

    parent: FiniteRing
    set_members: tuple[int, ...]
    set_generators: tuple[int, ...]
    projection: RingHom = field(repr=False)
    kernel_mask: int = 0


@dataclass
class Localization:
    """The localized ring together with the canonical map and its kernel."""

    ring: FiniteRing
    projection: RingHom
    kernel: Ideal
    sset: MultiplicativeSet

    def extend_ideal(self, I: Ideal) -> Ideal:
        return self.projection.image_ideal(I)

    def misses_set(self, I: Ideal) -> bool:
        return not any(s in I for s in self.sset.members)


def localize(R: FiniteRing, S: MultiplicativeSet) -> Localization:
    """Localization of a finite ring at S, as R modulo the S-torsion.

    In a finite ring every element of S becomes invertible in R/ker, where
    ker collects the elements killed by some member of S, and the quotient
    satisfies the universal property of the localization.
    """
    if S.ring is not R:
        raise RingMismatchError("multiplicative set belongs to a different ring")
    mul = R.mul_table
    zero = R.zero
    kmask = 0
    smembers = sorted(S.members)
    for r in range(R.order):
        for s in smembers:
            if mul[s][r] == zero:
                kmask |= 1 << r
                break
    assert is_ideal_mask(R, kmask), "S-torsion failed the ideal scan"
    K = Ideal(R, kmask)
    rep, reps = _coset_partition(R, kmask)
    index = {r: k for k, r in enumerate(reps)}
    m = len(reps)
    add = [[index[rep[R.add_table[reps[i]][reps[j]]]] for j in range(m)] for i in range(m)]
    mtab = [[index[rep[mul[reps[i]][reps[j]]]] for j in range(m)] for i in range(m)]
    gens = ",".join(str(g) for g in S.generators)
    label = f"loc({R.label},{gens})"
    names = tuple(R.element_name(r) for r in reps)
    L = FiniteRing(add, mtab, label, element_names=names)
    proj = RingHom(R, L, tuple(index[rep[a]] for a in range(R.order)))
    L.construction = LocalizationOf(R, tuple(smembers), tuple(S.generators), proj, kmask)
    for s in smembers:
        if not L.is_unit(proj(s)):
            raise AssertionError("localized image of the multiplicative set is not a unit")
    return Localization(L, proj, K, S)
