"""Deterministic corpus of small rings, each paired with validated expansions.

The catalog is the sweep domain for the statement suite: base rings Z_n,
Galois fields, chained polynomial quotients, then products, quotients,
trivial extensions and localizations built from the bases. Every entry
carries a provenance string that re-parses to a ring with identical tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .constructions import (
    LocalizationOf,
    MultiplicativeSet,
    ProductOf,
    QuotientOf,
    TrivialExtensionOf,
    localize,
    make_product,
    make_quotient,
    make_trivial_extension,
    quotient_module,
    regular_module,
)
from .errors import ConstructionError
from .expansions import (
    ExpansionFunction,
    induced_localization,
    induced_product,
    induced_quotient,
    induced_trivial_extension,
    standard_expansions,
)
from .rings import FiniteRing, make_galois_field, make_poly_quotient, make_zn

_PRIME_POWERS = ((2, 2), (2, 3), (3, 2), (2, 4))  # (p, k) with k >= 2, ordered by p**k


@dataclass(frozen=True)
class CatalogConfig:
    """Generation knobs. The defaults keep the full suite under a minute."""

    max_order: int = 16
    families: tuple[str, ...] = ("zn", "galois", "chained")
    include_products: bool = True
    include_quotients: bool = True
    include_trivial_extensions: bool = True
    include_localizations: bool = True
    product_order_limit: int = 36
    trivial_extension_limit: int = 64
    max_entries: Optional[int] = None


@dataclass(frozen=True)
class CatalogEntry:
    """One ring with its provenance string and attached expansions."""

    ring: FiniteRing
    provenance: str
    expansions: tuple[ExpansionFunction, ...]


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]
    notices: tuple[str, ...] = field(default_factory=tuple)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def base_rings(config: CatalogConfig) -> tuple[FiniteRing, ...]:
    """The base layer: Z_n, fields F_{p^k}, and chained Z_p[x]/(x^k)."""
    out: list[FiniteRing] = []
    if "zn" in config.families:
        for n in range(2, config.max_order + 1):
            out.append(make_zn(n))
    if "galois" in config.families:
        for p, k in sorted(_PRIME_POWERS, key=lambda pk: pk[0] ** pk[1]):
            if p**k <= config.max_order:
                out.append(make_galois_field(p, k))
    if "chained" in config.families:
        for p, k in sorted(_PRIME_POWERS, key=lambda pk: pk[0] ** pk[1]):
            if p**k <= config.max_order:
                # x^k as a low-to-high coefficient list
                out.append(make_poly_quotient(p, [0] * k + [1]))
    return tuple(out)


def _expansions_for(R: FiniteRing) -> tuple[ExpansionFunction, ...]:
    """Standard families plus construction-induced ones, deduped by table."""
    seen: dict[tuple[int, ...], ExpansionFunction] = {}
    for d in standard_expansions(R):
        seen.setdefault(d.table, d)
    info = R.construction
    if isinstance(info, ProductOf):
        for d1 in standard_expansions(info.left):
            for d2 in standard_expansions(info.right):
                d = induced_product(R, d1, d2)
                seen.setdefault(d.table, d)
    elif isinstance(info, QuotientOf):
        for d in standard_expansions(info.parent):
            e = induced_quotient(R, d)
            seen.setdefault(e.table, e)
    elif isinstance(info, LocalizationOf):
        for d in standard_expansions(info.parent):
            e = induced_localization(R, d)
            seen.setdefault(e.table, e)
    elif isinstance(info, TrivialExtensionOf):
        for d in standard_expansions(info.base):
            e = induced_trivial_extension(R, d)
            seen.setdefault(e.table, e)
    return tuple(seen.values())


def _localization_sets(R: FiniteRing) -> list[MultiplicativeSet]:
    """Closures of single elements plus prime complements, deduped.

    Sets of units only are skipped: they localize to a copy of the ring.
    """
    units = R.units()
    found: list[MultiplicativeSet] = []
    seen: set[frozenset[int]] = set()

    def consider(S: MultiplicativeSet) -> None:
        key = frozenset(S.members)
        if key in seen or key <= units:
            return
        seen.add(key)
        found.append(S)

    for x in range(R.order):
        if x == R.zero:
            continue
        try:
            consider(MultiplicativeSet.from_generators(R, (x,)))
        except ConstructionError:
            continue
    for P in R.spectrum():
        complement = sorted(set(range(R.order)) - set(P.members))
        if not complement:
            continue
        try:
            consider(MultiplicativeSet.from_generators(R, complement))
        except ConstructionError:
            continue
    return found


@lru_cache(maxsize=8)
def build_catalog(config: CatalogConfig = CatalogConfig()) -> Catalog:
    """Build the full deterministic catalog for a config.

    Entries appear in generation order: bases, products, quotients,
    trivial extensions, localizations. Repeated calls with an equal
    config return the same object.
    """
    if config.max_order < 2:
        raise ConstructionError("max_order must be at least 2")
    bases = base_rings(config)
    rings: list[FiniteRing] = list(bases)
    notices: list[str] = []

    if config.include_products:
        for i, R1 in enumerate(bases):
            for R2 in bases[i:]:
                if R1.order * R2.order <= config.product_order_limit:
                    rings.append(make_product(R1, R2))
    if config.include_quotients:
        for R in bases:
            for I in R.proper_ideals():
                if I.num_elements > 1:
                    rings.append(make_quotient(R, I))
    if config.include_trivial_extensions:
        for A in bases:
            if A.order * A.order <= config.trivial_extension_limit:
                rings.append(make_trivial_extension(A, regular_module(A)))
            for J in A.proper_ideals():
                if J.num_elements > 1:
                    carrier = A.order * (A.order // J.num_elements)
                    if carrier <= config.trivial_extension_limit:
                        rings.append(make_trivial_extension(A, quotient_module(A, J)))
    if config.include_localizations:
        for R in bases:
            for S in _localization_sets(R):
                rings.append(localize(R, S).ring)

    if config.max_entries is not None and len(rings) > config.max_entries:
        notices.append(
            f"catalog truncated to {config.max_entries} of {len(rings)} candidate entries"
        )
        rings = rings[: config.max_entries]

    labels = [R.label for R in rings]
    assert len(set(labels)) == len(labels), "catalog provenance strings must be unique"
    entries = tuple(CatalogEntry(R, R.label, _expansions_for(R)) for R in rings)
    return Catalog(entries, tuple(notices))
