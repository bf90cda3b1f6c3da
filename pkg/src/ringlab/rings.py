"""Finite commutative rings with identity, given by dense operation tables.

Elements are the indices 0..order-1. A ring owns two order x order tables
(addition and multiplication), a zero and a one index, and a human readable
label. Everything downstream (ideals, expansions, predicates, the verifier)
works on these indices, so rings built by different constructions are never
considered equal even when isomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ConstructionError, RingMismatchError, TableError

Table = tuple[tuple[int, ...], ...]


def _normalize_table(table: Sequence[Sequence[int]], n: int, what: str) -> Table:
    rows = tuple(tuple(row) for row in table)
    if len(rows) != n:
        raise TableError(f"{what} table must have {n} rows, got {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise TableError(f"{what} table row {i} has length {len(row)}, expected {n}")
        for v in row:
            if not (0 <= v < n):
                raise TableError(f"{what} table entry [{i}][{row.index(v)}] = {v} out of range")
    return rows


def _find_identity(table: Table, n: int) -> Optional[int]:
    ident = tuple(range(n))
    for e in range(n):
        if table[e] == ident:
            return e
    return None


class FiniteRing:
    """A finite commutative ring with identity, order at least 2.

    Construction validates every axiom by a full table scan (commutativity,
    associativity of both operations, identities, additive inverses, and
    distributivity) and reports a violating element triple on failure.
    """

    def __init__(
        self,
        add_table: Sequence[Sequence[int]],
        mul_table: Sequence[Sequence[int]],
        label: str,
        construction: object = None,
        element_names: Optional[Sequence[str]] = None,
    ):
        n = len(add_table)
        if n < 2:
            raise ConstructionError("ring order must be at least 2, the zero ring is excluded")
        self.order = n
        self.add_table = _normalize_table(add_table, n, "addition")
        self.mul_table = _normalize_table(mul_table, n, "multiplication")
        self.label = label
        self.construction = construction
        if element_names is not None:
            names = tuple(element_names)
            if len(names) != n:
                raise ConstructionError("element_names length must equal the ring order")
            self.element_names = names
        else:
            self.element_names = tuple(str(i) for i in range(n))
        self._validate()
        self.cache: dict = {}

    # ------------------------------------------------------------------
    # validation

    def _validate(self) -> None:
        n = self.order
        add, mul = self.add_table, self.mul_table
        if add != tuple(zip(*add)):
            a, b = _first_asym(add)
            raise TableError(f"addition is not commutative, witness ({a}, {b})")
        if mul != tuple(zip(*mul)):
            a, b = _first_asym(mul)
            raise TableError(f"multiplication is not commutative, witness ({a}, {b})")
        zero = _find_identity(add, n)
        if zero is None:
            raise TableError("addition has no identity element")
        one = _find_identity(mul, n)
        if one is None:
            raise TableError("multiplication has no identity element")
        if zero == one:
            raise TableError("zero and one coincide, the zero ring is excluded")
        self.zero, self.one = zero, one
        for a in range(n):
            if zero not in add[a]:
                raise TableError(f"element {a} has no additive inverse")
        if n <= 256:
            # translate() composes whole rows at C speed; tables are padded
            # to the 256 bytes translate requires, rows keep length n
            pad = bytes(256 - n)
            addb = [bytes(row) for row in add]
            mulb = [bytes(row) for row in mul]
            addt = [row + pad for row in addb]
            mult = [row + pad for row in mulb]
            for a in range(n):
                ra, ma = addt[a], mult[a]
                arow, mrow = add[a], mul[a]
                for b in range(n):
                    if addb[arow[b]] != addb[b].translate(ra):
                        c = _first_diff(addb[arow[b]], addb[b].translate(ra))
                        raise TableError(f"addition is not associative, witness ({a}, {b}, {c})")
                    if mulb[mrow[b]] != mulb[b].translate(ma):
                        c = _first_diff(mulb[mrow[b]], mulb[b].translate(ma))
                        raise TableError(f"multiplication is not associative, witness ({a}, {b}, {c})")
                    if addb[b].translate(ma) != mulb[a].translate(addt[mrow[b]]):
                        c = _first_diff(addb[b].translate(ma), mulb[a].translate(addt[mrow[b]]))
                        raise TableError(f"multiplication does not distribute, witness ({a}, {b}, {c})")
        else:
            for a in range(n):
                arow, mrow = add[a], mul[a]
                for b in range(n):
                    ab_a, ab_m = arow[b], mrow[b]
                    brow_a, brow_m = add[b], mul[b]
                    for c in range(n):
                        if add[ab_a][c] != arow[brow_a[c]]:
                            raise TableError(f"addition is not associative, witness ({a}, {b}, {c})")
                        if mul[ab_m][c] != mrow[brow_m[c]]:
                            raise TableError(f"multiplication is not associative, witness ({a}, {b}, {c})")
                        if mrow[brow_a[c]] != add[ab_m][mrow[c]]:
                            raise TableError(f"multiplication does not distribute, witness ({a}, {b}, {c})")

    # ------------------------------------------------------------------
    # element arithmetic on indices

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative exponents are not defined in a ring")
        acc = self.one
        for _ in range(k):
            acc = self.mul_table[acc][a]
        return acc

    @property
    def neg_table(self) -> tuple[int, ...]:
        tab = self.cache.get("neg")
        if tab is None:
            zero = self.zero
            tab = tuple(row.index(zero) for row in self.add_table)
            self.cache["neg"] = tab
        return tab

    def element(self, index: int) -> Element:
        if not (0 <= index < self.order):
            raise ValueError(f"index {index} out of range for {self.label}")
        return Element(self, index)

    def elements(self) -> list[Element]:
        return [Element(self, i) for i in range(self.order)]

    def element_name(self, index: int) -> str:
        return self.element_names[index]

    # ------------------------------------------------------------------
    # units and structural queries

    def units(self) -> frozenset[int]:
        """The set of invertible elements."""
        val = self.cache.get("units")
        if val is None:
            one = self.one
            val = frozenset(a for a in range(self.order) if one in self.mul_table[a])
            self.cache["units"] = val
        return val

    def nonunits(self) -> frozenset[int]:
        val = self.cache.get("nonunits")
        if val is None:
            val = frozenset(range(self.order)) - self.units()
            self.cache["nonunits"] = val
        return val

    def is_unit(self, a: int) -> bool:
        return a in self.units()

    @property
    def nonunit_list(self) -> tuple[int, ...]:
        val = self.cache.get("nonunit_list")
        if val is None:
            val = tuple(sorted(self.nonunits()))
            self.cache["nonunit_list"] = val
        return val

    @property
    def nonunits_mask(self) -> int:
        val = self.cache.get("nonunits_mask")
        if val is None:
            val = sum(1 << a for a in self.nonunits())
            self.cache["nonunits_mask"] = val
        return val

    def nonunits_form_ideal(self) -> bool:
        """Whether the nonunits are closed under addition and ring multiples.

        This is an independent route to locality, kept separate from the
        maximal-ideal count so the two can be cross-checked.
        """
        nus = self.nonunit_list
        numask = self.nonunits_mask
        add, mul = self.add_table, self.mul_table
        for a in nus:
            arow = add[a]
            for b in nus:
                if not (numask >> arow[b]) & 1:
                    return False
        for a in nus:
            mrow = mul[a]
            for r in range(self.order):
                if not (numask >> mrow[r]) & 1:
                    return False
        return True

    def ideals(self):
        """All ideals in canonical order (cardinality, then bitset value)."""
        val = self.cache.get("lattice")
        if val is None:
            from . import ideals as _ideals

            val = _ideals.all_ideals(self)
            self.cache["lattice"] = val
        return val

    def proper_ideals(self):
        return tuple(I for I in self.ideals() if I.num_elements < self.order)

    def lattice_position(self, mask: int) -> int:
        pos = self.cache.get("lattice_pos")
        if pos is None:
            pos = {I.mask: k for k, I in enumerate(self.ideals())}
            self.cache["lattice_pos"] = pos
        return pos[mask]

    def span(self, generators: Iterable[int]):
        from . import ideals as _ideals

        return _ideals.span(self, generators)

    def zero_ideal(self):
        return self.span(())

    def unit_ideal(self):
        return self.span((self.one,))

    def maximal_ideals(self):
        val = self.cache.get("maximals")
        if val is None:
            from . import ideals as _ideals

            val = tuple(I for I in self.proper_ideals() if _ideals.is_maximal(I))
            self.cache["maximals"] = val
        return val

    def spectrum(self):
        """All prime ideals, in canonical lattice order."""
        val = self.cache.get("spectrum")
        if val is None:
            from . import ideals as _ideals

            val = tuple(I for I in self.proper_ideals() if _ideals.is_prime(I))
            self.cache["spectrum"] = val
        return val

    def jacobson_radical(self):
        val = self.cache.get("jacobson")
        if val is None:
            mask = (1 << self.order) - 1
            for M in self.maximal_ideals():
                mask &= M.mask
            from .ideals import Ideal

            val = Ideal(self, mask)
            self.cache["jacobson"] = val
        return val

    def is_local(self) -> bool:
        return len(self.maximal_ideals()) == 1

    def is_field(self) -> bool:
        return len(self.units()) == self.order - 1

    def is_chained(self) -> bool:
        """Whether the ideal lattice is totally ordered by inclusion."""
        val = self.cache.get("chained")
        if val is None:
            val = True
            lat = self.ideals()
            for i in range(len(lat) - 1):
                a, b = lat[i].mask, lat[i + 1].mask
                if a & ~b:
                    val = False
                    break
            self.cache["chained"] = val
        return val

    def is_arithmetical(self) -> bool:
        """Whether the localization at every maximal ideal is chained."""
        val = self.cache.get("arithmetical")
        if val is None:
            from .constructions import MultiplicativeSet, localize

            val = True
            for M in self.maximal_ideals():
                comp = frozenset(range(self.order)) - M.members
                loc = localize(self, MultiplicativeSet(self, comp))
                if not loc.ring.is_chained():
                    val = False
                    break
            self.cache["arithmetical"] = val
        return val

    # ------------------------------------------------------------------
    # bitmask helpers shared by the predicate kernels

    def colon_masks(self, imask: int) -> tuple[int, ...]:
        """For each d, the bitmask of {x : d*x lands in the ideal mask}."""
        table = self.cache.setdefault("colon", {})
        val = table.get(imask)
        if val is None:
            n = self.order
            mul = self.mul_table
            val = tuple(
                sum(1 << x for x in range(n) if (imask >> row[x]) & 1)
                for row in mul
            )
            table[imask] = val
        return val

    @property
    def nonunit_product_mask(self) -> int:
        """Bitmask of every product of two nonunits."""
        val = self.cache.get("nu2mask")
        if val is None:
            val = 0
            mul = self.mul_table
            nus = self.nonunit_list
            for a in nus:
                row = mul[a]
                for b in nus:
                    val |= 1 << row[b]
            self.cache["nu2mask"] = val
        return val

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"


def _first_asym(table: Table) -> tuple[int, int]:
    for a, row in enumerate(table):
        for b, v in enumerate(row):
            if table[b][a] != v:
                return a, b
    raise AssertionError("no asymmetry found")


def _first_diff(x: bytes, y: bytes) -> int:
    for i, (u, v) in enumerate(zip(x, y)):
        if u != v:
            return i
    raise AssertionError("byte strings do not differ")


@dataclass(frozen=True)
class Element:
    """An element of a specific ring. Cross-ring arithmetic is rejected."""

    ring: FiniteRing
    index: int

    def _same_ring(self, other: Element) -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {other!r}")
        if other.ring is not self.ring:
            raise RingMismatchError(
                f"element of {other.ring.label} used in {self.ring.label}"
            )

    def __add__(self, other: Element) -> Element:
        self._same_ring(other)
        return Element(self.ring, self.ring.add_table[self.index][other.index])

    def __mul__(self, other: Element) -> Element:
        self._same_ring(other)
        return Element(self.ring, self.ring.mul_table[self.index][other.index])

    def __neg__(self) -> Element:
        return Element(self.ring, self.ring.neg_table[self.index])

    def __sub__(self, other: Element) -> Element:
        self._same_ring(other)
        return self + (-other)

    def __pow__(self, k: int) -> Element:
        return Element(self.ring, self.ring.pow(self.index, k))

    @property
    def is_unit(self) -> bool:
        return self.ring.is_unit(self.index)

    def __repr__(self) -> str:
        return f"<{self.ring.element_name(self.index)} in {self.ring.label}>"


class RingHom:
    """A unital ring homomorphism given by its value table.

    Validation checks f(1) = 1 and compatibility with both operations,
    reporting the first violating pair on failure.
    """

    def __init__(self, domain: FiniteRing, codomain: FiniteRing, mapping: Sequence[int]):
        self.domain = domain
        self.codomain = codomain
        self.mapping = tuple(mapping)
        if len(self.mapping) != domain.order:
            raise TableError("homomorphism table length must equal the domain order")
        for v in self.mapping:
            if not (0 <= v < codomain.order):
                raise TableError(f"homomorphism value {v} out of range for {codomain.label}")
        self._validate()

    def _validate(self) -> None:
        f = self.mapping
        if f[self.domain.one] != self.codomain.one:
            raise TableError("homomorphism does not send one to one")
        addD, mulD = self.domain.add_table, self.domain.mul_table
        addC, mulC = self.codomain.add_table, self.codomain.mul_table
        for a in range(self.domain.order):
            fa = f[a]
            rowA, rowM = addD[a], mulD[a]
            caddr, cmulr = addC[fa], mulC[fa]
            for b in range(self.domain.order):
                if f[rowA[b]] != caddr[f[b]]:
                    raise TableError(f"homomorphism is not additive, witness ({a}, {b})")
                if f[rowM[b]] != cmulr[f[b]]:
                    raise TableError(f"homomorphism is not multiplicative, witness ({a}, {b})")

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.codomain.order

    def kernel(self):
        from .ideals import Ideal

        zero = self.codomain.zero
        mask = sum(1 << a for a, v in enumerate(self.mapping) if v == zero)
        return Ideal(self.domain, mask)

    def image_ideal(self, I):
        """The image of an ideal, spanned in the codomain.

        For a surjective homomorphism the raw image already is an ideal and
        the span changes nothing.
        """
        if I.ring is not self.domain:
            raise RingMismatchError("ideal does not live in the homomorphism domain")
        return self.codomain.span({self.mapping[a] for a in I.members})

    def preimage_ideal(self, J):
        from .ideals import Ideal

        if J.ring is not self.codomain:
            raise RingMismatchError("ideal does not live in the homomorphism codomain")
        jm = J.mask
        mask = sum(1 << a for a, v in enumerate(self.mapping) if (jm >> v) & 1)
        return Ideal(self.domain, mask)

    def is_nonunit_preserving(self) -> tuple[bool, Optional[int]]:
        """Whether nonunits map to nonunits, with the first failing element."""
        for a in self.domain.nonunit_list:
            if self.codomain.is_unit(self.mapping[a]):
                return False, a
        return True, None

    def __repr__(self) -> str:
        return f"RingHom({self.domain.label} -> {self.codomain.label})"


def identity_hom(R: FiniteRing) -> RingHom:
    return RingHom(R, R, tuple(range(R.order)))


# ----------------------------------------------------------------------
# basic constructors


def make_zn(n: int) -> FiniteRing:
    """The ring of integers modulo n, for n at least 2."""
    if n < 2:
        raise ConstructionError(f"make_zn needs a modulus of at least 2, got {n}")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(add, mul, f"Z{n}")


def _is_prime_int(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def format_poly(coeffs: Sequence[int]) -> str:
    """Render a polynomial, low-to-high coefficients, in descending order."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            lead = "" if c == 1 else str(c)
            xpow = "x" if k == 1 else f"x^{k}"
            terms.append(lead + xpow)
    return "+".join(terms) if terms else "0"


def make_poly_quotient(p: int, coeffs: Sequence[int]) -> FiniteRing:
    """The quotient Z_p[x]/(f) for a monic f of degree at least 1.

    Coefficients are given low to high. Elements are residue polynomials of
    degree below deg(f), indexed by base-p digit encoding, so the constants
    occupy indices 0..p-1.
    """
    if not _is_prime_int(p):
        raise ConstructionError(f"polynomial quotient needs a prime modulus, got {p}")
    f = [c % p for c in coeffs]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    k = len(f) - 1
    if k < 1:
        raise ConstructionError("polynomial modulus must have degree at least 1")
    if f[k] != 1:
        raise ConstructionError(f"polynomial modulus must be monic, got {format_poly(f)}")
    n = p**k

    def decode(i: int) -> list[int]:
        out = []
        for _ in range(k):
            out.append(i % p)
            i //= p
        return out

    def encode(cs: Sequence[int]) -> int:
        i = 0
        for c in reversed(cs[:k]):
            i = i * p + (c % p)
        return i

    def reduce(cs: list[int]) -> list[int]:
        cs = [c % p for c in cs]
        for d in range(len(cs) - 1, k - 1, -1):
            lead = cs[d]
            if lead:
                for j in range(k + 1):
                    cs[d - k + j] = (cs[d - k + j] - lead * f[j]) % p
        return cs[:k] + [0] * (k - len(cs))

    polys = [decode(i) for i in range(n)]
    add = [
        [encode([(x + y) % p for x, y in zip(polys[i], polys[j])]) for j in range(n)]
        for i in range(n)
    ]
    mul = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = [0] * (2 * k - 1)
            for d1, c1 in enumerate(polys[i]):
                if c1 == 0:
                    continue
                for d2, c2 in enumerate(polys[j]):
                    prod[d1 + d2] = (prod[d1 + d2] + c1 * c2) % p
            row.append(encode(reduce(prod)))
        mul.append(row)
    label = f"Z{p}[x]/({format_poly(f)})"
    names = tuple(format_poly(polys[i]) for i in range(n))
    return FiniteRing(add, mul, label, element_names=names)


def _poly_is_irreducible(p: int, coeffs: tuple[int, ...]) -> bool:
    k = len(coeffs) - 1
    if any(sum(c * pow(a, d, p) for d, c in enumerate(coeffs)) % p == 0 for a in range(p)):
        return False
    if k < 4:
        return True
    for d in range(2, k // 2 + 1):
        for m in range(p**d):
            g = []
            i = m
            for _ in range(d):
                g.append(i % p)
                i //= p
            g.append(1)
            if _poly_divides(p, g, list(coeffs)):
                return False
    return True


def _poly_divides(p: int, g: list[int], f: list[int]) -> bool:
    r = list(f)
    dg = len(g) - 1
    while len(r) - 1 >= dg:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - dg
            for j in range(dg + 1):
                r[shift + j] = (r[shift + j] - lead * g[j]) % p
        r.pop()
    return all(c % p == 0 for c in r)


def irreducible_poly(p: int, k: int) -> tuple[int, ...]:
    """The monic irreducible of degree k over Z_p with smallest digit encoding."""
    if not _is_prime_int(p):
        raise ConstructionError(f"irreducible_poly needs a prime modulus, got {p}")
    if k < 1:
        raise ConstructionError("irreducible_poly needs degree at least 1")
    for m in range(p**k):
        cs = []
        i = m
        for _ in range(k):
            cs.append(i % p)
            i //= p
        cs.append(1)
        if _poly_is_irreducible(p, tuple(cs)):
            return tuple(cs)
    raise AssertionError("no irreducible polynomial found")


def make_galois_field(p: int, k: int) -> FiniteRing:
    """The field of order p^k, as Z_p[x] modulo the canonical irreducible."""
    if k == 1:
        return make_zn(p)
    return make_poly_quotient(p, irreducible_poly(p, k))
