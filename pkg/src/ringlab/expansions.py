"""Expansion functions on the ideal lattice of a finite ring.

An expansion assigns to each ideal I an ideal delta(I) with I contained in
delta(I), monotonely in I. It is stored as a table over the canonical
lattice and validated on construction. The whole ring is included in the
domain with delta(R) = R.

Families: the identity, the radical, translation by a fixed ideal, and the
constant-ring map. Expansions also transfer along the standard
constructions (products, quotients, localizations, trivial extensions).
"""

from __future__ import annotations

from typing import Callable, Optional, Sequence

from .errors import ExpansionAxiomError, RingMismatchError
from .ideals import Ideal, generator_list, radical, scale
from .rings import FiniteRing, RingHom


class ExpansionFunction:
    """A validated expansion of ideals, as a table over the lattice."""

    def __init__(self, ring: FiniteRing, table: Sequence[int], label: str):
        self.ring = ring
        self.table = tuple(table)
        self.label = label
        lattice = ring.ideals()
        if len(self.table) != len(lattice):
            raise ExpansionAxiomError(
                f"table length {len(self.table)} does not match lattice size {len(lattice)}"
            )
        for p, q in enumerate(self.table):
            if lattice[p].mask & ~lattice[q].mask:
                raise ExpansionAxiomError(
                    f"not extensive at {lattice[p].label}: image {lattice[q].label}"
                )
        for p in range(len(lattice)):
            pm = lattice[p].mask
            dp = lattice[self.table[p]].mask
            for q in range(len(lattice)):
                if not (pm & ~lattice[q].mask):
                    if dp & ~lattice[self.table[q]].mask:
                        raise ExpansionAxiomError(
                            f"not monotone at pair ({lattice[p].label}, {lattice[q].label})"
                        )

    def __call__(self, I: Ideal) -> Ideal:
        if I.ring is not self.ring:
            raise RingMismatchError("ideal belongs to a different ring")
        lattice = self.ring.ideals()
        return lattice[self.table[self.ring.lattice_position(I.mask)]]

    @property
    def key(self) -> tuple:
        return (id(self.ring), self.table)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExpansionFunction)
            and other.ring is self.ring
            and other.table == self.table
        )

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"ExpansionFunction({self.label!r} on {self.ring.label})"


def from_rule(R: FiniteRing, rule: Callable[[Ideal], Ideal], label: str) -> ExpansionFunction:
    """Build and validate an expansion from an ideal-to-ideal callable."""
    lattice = R.ideals()
    table = []
    for I in lattice:
        J = rule(I)
        table.append(R.lattice_position(J.mask))
    return ExpansionFunction(R, table, label)


# ----------------------------------------------------------------------
# the four stock families


def identity_expansion(R: FiniteRing) -> ExpansionFunction:
    return ExpansionFunction(R, range(len(R.ideals())), "id")


def radical_expansion(R: FiniteRing) -> ExpansionFunction:
    return from_rule(R, radical, "rad")


def plus_fixed(R: FiniteRing, J: Ideal) -> ExpansionFunction:
    """The translation I maps to I + J."""
    if J.ring is not R:
        raise RingMismatchError("fixed ideal belongs to a different ring")
    gens = ",".join(str(g) for g in generator_list(J))
    return from_rule(R, lambda I: I + J, f"plus:({gens})")


def constant_ring(R: FiniteRing) -> ExpansionFunction:
    """Every ideal, proper or not, maps to the whole ring."""
    top = len(R.ideals()) - 1
    return ExpansionFunction(R, [top] * (top + 1), "full")


def standard_expansions(R: FiniteRing) -> tuple[ExpansionFunction, ...]:
    """The stock families on R, deduplicated by table, first label wins."""
    got = R.cache.get("std_expansions")
    if got is not None:
        return got
    out: list[ExpansionFunction] = []
    seen: set[tuple] = set()
    candidates = [identity_expansion(R), radical_expansion(R)]
    candidates.extend(plus_fixed(R, J) for J in R.proper_ideals())
    candidates.append(constant_ring(R))
    for d in candidates:
        if d.table not in seen:
            seen.add(d.table)
            out.append(d)
    val = tuple(out)
    R.cache["std_expansions"] = val
    return val


# ----------------------------------------------------------------------
# side conditions


def satisfies_star(delta: ExpansionFunction) -> bool:
    """Condition (*): proper ideals keep proper images."""
    lattice = delta.ring.ideals()
    top = len(lattice) - 1
    return all(
        delta.table[p] != top for p in range(len(lattice)) if lattice[p].is_proper
    )


def preserves_jacobson(delta: ExpansionFunction) -> bool:
    jac = delta.ring.jacobson_radical()
    return delta(jac).mask == jac.mask


def scaling_check(
    delta: ExpansionFunction,
) -> tuple[bool, Optional[tuple[int, Ideal]]]:
    """Whether delta(x*I) = x*delta(I) wherever x*I is nonzero.

    Pairs whose scaled ideal collapses to the zero ideal are vacuous for
    the characterization results and are skipped. The witness is the first
    failing pair, x ascending and I in canonical lattice order.
    """
    R = delta.ring
    zero_mask = 1 << R.zero
    for x in range(R.order):
        for I in R.proper_ideals():
            xI = scale(x, I)
            if xI.mask == zero_mask:
                continue
            if delta(xI).mask != scale(x, delta(I)).mask:
                return False, (x, I)
    return True, None


def commutes_with_scaling(delta: ExpansionFunction) -> bool:
    return scaling_check(delta)[0]


def is_intersection_preserving(delta: ExpansionFunction) -> bool:
    """Whether delta(I & J) = delta(I) & delta(J) for every pair."""
    R = delta.ring
    lattice = R.ideals()
    pos = {I.mask: p for p, I in enumerate(lattice)}
    for p in range(len(lattice)):
        dp = lattice[delta.table[p]].mask
        for q in range(p, len(lattice)):
            meet = lattice[pos[lattice[p].mask & lattice[q].mask]]
            lhs = lattice[delta.table[pos[meet.mask]]].mask
            if lhs != dp & lattice[delta.table[q]].mask:
                return False
    return True


def is_idempotent_at(delta: ExpansionFunction, I: Ideal) -> bool:
    return delta(delta(I)).mask == delta(I).mask


def is_prime_expansion(delta: ExpansionFunction) -> bool:
    """Whether delta sends every 1-absorbing delta-primary ideal to a prime.

    An image equal to the whole ring counts as not prime.
    """
    from .predicates import is_one_absorbing_delta_primary

    R = delta.ring
    from .ideals import is_prime

    for I in R.proper_ideals():
        if is_one_absorbing_delta_primary(I, delta):
            D = delta(I)
            if not D.is_proper or not is_prime(D):
                return False
    return True


def delta_gamma_hom_check(
    f: RingHom, delta: ExpansionFunction, gamma: ExpansionFunction
) -> tuple[bool, Optional[Ideal]]:
    """Whether delta(preimage(J)) = preimage(gamma(J)) for every ideal J.

    The witness is the first failing ideal of the codomain in canonical
    order.
    """
    if delta.ring is not f.domain or gamma.ring is not f.codomain:
        raise RingMismatchError("expansions do not match the homomorphism")
    for J in f.codomain.ideals():
        lhs = delta(f.preimage_ideal(J))
        rhs = f.preimage_ideal(gamma(J))
        if lhs.mask != rhs.mask:
            return False, J
    return True, None


def is_delta_gamma_hom(
    f: RingHom, delta: ExpansionFunction, gamma: ExpansionFunction
) -> bool:
    return delta_gamma_hom_check(f, delta, gamma)[0]


# ----------------------------------------------------------------------
# transfer along constructions


def induced_product(
    P: FiniteRing, d1: ExpansionFunction, d2: ExpansionFunction
) -> ExpansionFunction:
    """The componentwise expansion on a product ring."""
    from .constructions import ProductOf

    info = P.construction
    if not isinstance(info, ProductOf):
        raise RingMismatchError(f"{P.label} was not built as a product")
    if d1.ring is not info.left or d2.ring is not info.right:
        raise RingMismatchError("component expansions do not match the factors")

    def rule(I: Ideal) -> Ideal:
        m1, m2 = info.decompose_mask(I.mask)
        D1 = d1(Ideal(info.left, m1))
        D2 = d2(Ideal(info.right, m2))
        return Ideal(P, info.pair_mask(D1.mask, D2.mask))

    return from_rule(P, rule, f"prod({d1.label},{d2.label})")


def induced_quotient(Q: FiniteRing, delta: ExpansionFunction) -> ExpansionFunction:
    """The expansion J/I maps to delta(J)/I on a quotient ring."""
    from .constructions import QuotientOf

    info = Q.construction
    if not isinstance(info, QuotientOf):
        raise RingMismatchError(f"{Q.label} was not built as a quotient")
    if delta.ring is not info.parent:
        raise RingMismatchError("expansion does not live on the quotient parent")
    f = info.projection
    gens = ",".join(str(g) for g in generator_list(Ideal(info.parent, info.ideal_mask)))

    def rule(Jbar: Ideal) -> Ideal:
        return f.image_ideal(delta(f.preimage_ideal(Jbar)))

    return from_rule(Q, rule, f"bar({delta.label},({gens}))")


def induced_localization(L: FiniteRing, delta: ExpansionFunction) -> ExpansionFunction:
    """Contraction followed by expansion followed by extension."""
    from .constructions import LocalizationOf

    info = L.construction
    if not isinstance(info, LocalizationOf):
        raise RingMismatchError(f"{L.label} was not built as a localization")
    if delta.ring is not info.parent:
        raise RingMismatchError("expansion does not live on the localization parent")
    f = info.projection
    gens = ",".join(str(g) for g in info.set_generators)

    def rule(J: Ideal) -> Ideal:
        return f.image_ideal(delta(f.preimage_ideal(J)))

    return from_rule(L, rule, f"loc({delta.label},{gens})")


def induced_trivial_extension(T: FiniteRing, delta: ExpansionFunction) -> ExpansionFunction:
    """Pair ideals expand componentwise to delta(I) paired with the module.

    Ideals that are not of pair form are first enlarged to their smallest
    enveloping pair ideal.
    """
    from .constructions import TrivialExtensionOf

    info = T.construction
    if not isinstance(info, TrivialExtensionOf):
        raise RingMismatchError(f"{T.label} was not built as a trivial extension")
    if delta.ring is not info.base:
        raise RingMismatchError("expansion does not live on the extension base")

    def rule(J: Ideal) -> Ideal:
        imask, _ = info.pair_envelope(J.mask)
        D = delta(Ideal(info.base, imask))
        return Ideal(T, info.pair_mask(D.mask, (1 << info.module.order) - 1))

    return from_rule(T, rule, f"triv({delta.label})")


def localization_compatibility(L: FiniteRing, delta: ExpansionFunction) -> bool:
    """Whether extension of delta(I) matches the induced expansion on the
    extension of I, for every parent ideal I missing the multiplicative set."""
    from .constructions import LocalizationOf

    info = L.construction
    if not isinstance(info, LocalizationOf):
        raise RingMismatchError(f"{L.label} was not built as a localization")
    f = info.projection
    smask = sum(1 << s for s in info.set_members)
    ds = induced_localization(L, delta)
    for I in info.parent.ideals():
        if I.mask & smask:
            continue
        if ds(f.image_ideal(I)).mask != f.image_ideal(delta(I)).mask:
            return False
    return True
