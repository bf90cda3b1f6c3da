"""Ideals of a finite ring as bitmask subsets, plus the full ideal lattice.

An ideal is identified by its ring and a bitmask over element indices.
The lattice of all ideals is enumerated once per ring and kept in a
canonical order: by cardinality, then by bitset value. Witnesses reported
by the predicates are lexicographically minimal in element-index order.
"""

from __future__ import annotations

from typing import Iterable, Optional, Union

from .errors import ProperIdealError, RingMismatchError
from .rings import Element, FiniteRing


class Ideal:
    """An ideal of a finite ring, stored as a bitmask of member indices."""

    __slots__ = ("ring", "mask", "_card")

    def __init__(self, ring: FiniteRing, mask: int):
        self.ring = ring
        self.mask = mask
        self._card = mask.bit_count()

    @property
    def members(self) -> frozenset[int]:
        m = self.mask
        return frozenset(a for a in range(self.ring.order) if (m >> a) & 1)

    @property
    def members_sorted(self) -> tuple[int, ...]:
        m = self.mask
        return tuple(a for a in range(self.ring.order) if (m >> a) & 1)

    @property
    def num_elements(self) -> int:
        return self._card

    @property
    def is_proper(self) -> bool:
        return self._card < self.ring.order

    @property
    def is_zero(self) -> bool:
        return self._card == 1

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self._card, self.mask)

    def __contains__(self, a: Union[int, Element]) -> bool:
        if isinstance(a, Element):
            if a.ring is not self.ring:
                raise RingMismatchError("element belongs to a different ring")
            a = a.index
        return bool((self.mask >> a) & 1)

    def _same_ring(self, other: Ideal) -> None:
        if not isinstance(other, Ideal):
            raise TypeError(f"expected an Ideal, got {other!r}")
        if other.ring is not self.ring:
            raise RingMismatchError("ideals belong to different rings")

    def __le__(self, other: Ideal) -> bool:
        self._same_ring(other)
        return not (self.mask & ~other.mask)

    def __lt__(self, other: Ideal) -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ideal)
            and other.ring is self.ring
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask))

    def __add__(self, other: Ideal) -> Ideal:
        self._same_ring(other)
        return Ideal(self.ring, _sum_masks(self.ring, self.mask, other.mask))

    def __mul__(self, other: Ideal) -> Ideal:
        self._same_ring(other)
        return ideal_product(self, other)

    def __and__(self, other: Ideal) -> Ideal:
        self._same_ring(other)
        return Ideal(self.ring, self.mask & other.mask)

    @property
    def label(self) -> str:
        """Render as (g) for principal ideals, else as the member set."""
        g = principal_generator(self)
        if g is not None:
            return f"({self.ring.element_name(g)})"
        names = ",".join(self.ring.element_name(a) for a in self.members_sorted)
        return "{" + names + "}"

    def __repr__(self) -> str:
        return f"Ideal({self.ring.label}, {self.label})"


# ----------------------------------------------------------------------
# construction and enumeration


def span(R: FiniteRing, generators: Iterable[Union[int, Element]]) -> Ideal:
    """The smallest ideal containing the given elements."""
    gens = []
    for g in generators:
        if isinstance(g, Element):
            if g.ring is not R:
                raise RingMismatchError("generator belongs to a different ring")
            g = g.index
        if not (0 <= g < R.order):
            raise ValueError(f"generator {g} out of range for {R.label}")
        gens.append(g)
    n = R.order
    add, mul = R.add_table, R.mul_table
    mask = 1 << R.zero
    members = [R.zero]
    stack = gens
    while stack:
        e = stack.pop()
        if (mask >> e) & 1:
            continue
        mask |= 1 << e
        row = mul[e]
        for r in range(n):
            v = row[r]
            if not (mask >> v) & 1:
                stack.append(v)
        arow = add[e]
        for m in members:
            v = arow[m]
            if not (mask >> v) & 1:
                stack.append(v)
        members.append(e)
    return Ideal(R, mask)


def _sum_masks(R: FiniteRing, m1: int, m2: int) -> int:
    if m1 == m2 or not (m2 & ~m1):
        return m1
    if not (m1 & ~m2):
        return m2
    add = R.add_table
    left = [a for a in range(R.order) if (m1 >> a) & 1]
    out = 0
    for b in range(R.order):
        if (m2 >> b) & 1:
            for a in left:
                out |= 1 << add[a][b]
    return out


def is_ideal_mask(R: FiniteRing, mask: int) -> bool:
    """Definitional scan: contains zero, closed under addition and multiples."""
    if not (mask >> R.zero) & 1:
        return False
    elems = [a for a in range(R.order) if (mask >> a) & 1]
    add, mul = R.add_table, R.mul_table
    for a in elems:
        row = add[a]
        for b in elems:
            if not (mask >> row[b]) & 1:
                return False
        mrow = mul[a]
        for r in range(R.order):
            if not (mask >> mrow[r]) & 1:
                return False
    return True


def all_ideals(R: FiniteRing) -> tuple[Ideal, ...]:
    """Every ideal of R, in canonical order (cardinality, then bitset value).

    Principal ideals are spanned directly and the rest are produced by
    closing under pairwise sums, which reaches every ideal because each one
    is a finite sum of principal ideals.
    """
    principal: dict[int, int] = {}
    for x in range(R.order):
        m = span(R, (x,)).mask
        if m not in principal:
            principal[m] = x
    R.cache.setdefault("principal_gen", dict(principal))
    masks = set(principal)
    queue = list(principal)
    pr = list(principal)
    while queue:
        m = queue.pop()
        for p in pr:
            s = _sum_masks(R, m, p)
            if s not in masks:
                masks.add(s)
                queue.append(s)
    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    return tuple(Ideal(R, m) for m in ordered)


def principal_generator(I: Ideal) -> Optional[int]:
    """The smallest x with (x) = I, or None when I is not principal."""
    R = I.ring
    table = R.cache.get("principal_gen")
    if table is None:
        R.ideals()
        table = R.cache.get("principal_gen")
        if table is None:
            table = {}
            for x in range(R.order):
                m = span(R, (x,)).mask
                table.setdefault(m, x)
            R.cache["principal_gen"] = table
    return table.get(I.mask)


def is_principal(I: Ideal) -> bool:
    return principal_generator(I) is not None


def generator_list(I: Ideal) -> tuple[int, ...]:
    """A small generating set, chosen greedily over ascending indices.

    Principal ideals come back as their single smallest generator, and the
    zero ideal as (zero,), so the result is never empty and always re-spans
    the ideal.
    """
    g = principal_generator(I)
    if g is not None:
        return (g,)
    R = I.ring
    gens: list[int] = []
    current = 1 << R.zero
    for x in I.members_sorted:
        if (current >> x) & 1:
            continue
        gens.append(x)
        current = span(R, gens).mask
        if current == I.mask:
            break
    return tuple(gens) if gens else (R.zero,)


# ----------------------------------------------------------------------
# lattice arithmetic


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return I + J


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    """The ideal generated by pairwise products, via additive closure."""
    if J.ring is not I.ring:
        raise RingMismatchError("ideals belong to different rings")
    R = I.ring
    mul, add = R.mul_table, R.add_table
    amembers = I.members_sorted
    prods = 0
    for a in amembers:
        row = mul[a]
        for b in range(R.order):
            if (J.mask >> b) & 1:
                prods |= 1 << row[b]
    mask = 1 << R.zero
    members = [R.zero]
    stack = [v for v in range(R.order) if (prods >> v) & 1]
    while stack:
        e = stack.pop()
        if (mask >> e) & 1:
            continue
        mask |= 1 << e
        arow = add[e]
        for m in members:
            v = arow[m]
            if not (mask >> v) & 1:
                stack.append(v)
        members.append(e)
    return Ideal(R, mask)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    return I & J


def colon(I: Ideal, d: Union[int, Element]) -> Ideal:
    """The element colon (I : d) = {x : d*x lies in I}."""
    if isinstance(d, Element):
        if d.ring is not I.ring:
            raise RingMismatchError("element belongs to a different ring")
        d = d.index
    return Ideal(I.ring, I.ring.colon_masks(I.mask)[d])


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """The ideal colon (I : J) = {x : x*J lies in I}."""
    if J.ring is not I.ring:
        raise RingMismatchError("ideals belong to different rings")
    rows = I.ring.colon_masks(I.mask)
    mask = (1 << I.ring.order) - 1
    for g in J.members_sorted:
        mask &= rows[g]
    return Ideal(I.ring, mask)


def radical(I: Ideal) -> Ideal:
    """The radical, by scanning powers with exponent up to the ring order."""
    R = I.ring
    cache = R.cache.setdefault("radical", {})
    got = cache.get(I.mask)
    if got is not None:
        return Ideal(R, got)
    n = R.order
    mul = R.mul_table
    im = I.mask
    mask = 0
    for x in range(n):
        p = x
        for _ in range(n):
            if (im >> p) & 1:
                mask |= 1 << x
                break
            p = mul[p][x]
    assert is_ideal_mask(R, mask), "radical failed the ideal scan"
    cache[I.mask] = mask
    return Ideal(R, mask)


def scale(x: Union[int, Element], I: Ideal) -> Ideal:
    """The ideal x*I = {x*i : i in I}."""
    R = I.ring
    if isinstance(x, Element):
        if x.ring is not R:
            raise RingMismatchError("element belongs to a different ring")
        x = x.index
    row = R.mul_table[x]
    mask = 0
    m = I.mask
    for a in range(R.order):
        if (m >> a) & 1:
            mask |= 1 << row[a]
    return Ideal(R, mask)


# ----------------------------------------------------------------------
# classical predicates, each with a lexicographically minimal witness


def _require_proper(I: Ideal, what: str) -> None:
    if not I.is_proper:
        raise ProperIdealError(f"{what} needs a proper ideal")


def prime_check(I: Ideal) -> tuple[bool, Optional[tuple[int, int]]]:
    """Definitional scan: a*b in I forces a in I or b in I."""
    _require_proper(I, "is_prime")
    R = I.ring
    im = I.mask
    mul = R.mul_table
    for a in range(R.order):
        if (im >> a) & 1:
            continue
        row = mul[a]
        for b in range(R.order):
            if (im >> row[b]) & 1 and not (im >> b) & 1:
                return False, (a, b)
    return True, None


def is_prime(I: Ideal) -> bool:
    return prime_check(I)[0]


def maximal_check(I: Ideal) -> tuple[bool, Optional[Ideal]]:
    """Lattice scan: no proper ideal strictly between I and the ring."""
    _require_proper(I, "is_maximal")
    for J in I.ring.ideals():
        if J.num_elements <= I.num_elements or not J.is_proper:
            continue
        if not (I.mask & ~J.mask) and J.mask != I.mask:
            return False, J
    return True, None


def is_maximal(I: Ideal) -> bool:
    return maximal_check(I)[0]


def primary_check(I: Ideal) -> tuple[bool, Optional[tuple[int, int]]]:
    """Definitional scan: a*b in I forces a in I or b in the radical."""
    _require_proper(I, "is_primary")
    R = I.ring
    im = I.mask
    rm = radical(I).mask
    mul = R.mul_table
    for a in range(R.order):
        if (im >> a) & 1:
            continue
        row = mul[a]
        for b in range(R.order):
            if (im >> row[b]) & 1 and not (rm >> b) & 1:
                return False, (a, b)
    return True, None


def is_primary(I: Ideal) -> bool:
    return primary_check(I)[0]


def is_radical_ideal(I: Ideal) -> bool:
    return radical(I).mask == I.mask


def is_prime_element(R: FiniteRing, x: Union[int, Element]) -> bool:
    """Nonzero x whose principal ideal is proper and prime."""
    if isinstance(x, Element):
        if x.ring is not R:
            raise RingMismatchError("element belongs to a different ring")
        x = x.index
    if x == R.zero:
        return False
    P = span(R, (x,))
    return P.is_proper and is_prime(P)
