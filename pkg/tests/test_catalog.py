"""Catalog generation: composition, determinism, dedup, and config knobs."""

from __future__ import annotations

import pytest

from ringlab.catalog import CatalogConfig, CatalogEntry, base_rings, build_catalog
from ringlab.constructions import LocalizationOf, ProductOf, QuotientOf, TrivialExtensionOf
from ringlab.errors import ConstructionError
from ringlab.specparse import parse_ring


def test_base_rings_max_order_8():
    config = CatalogConfig(max_order=8)
    labels = [R.label for R in base_rings(config)]
    assert labels == [
        "Z2",
        "Z3",
        "Z4",
        "Z5",
        "Z6",
        "Z7",
        "Z8",
        "Z2[x]/(x^2+x+1)",
        "Z2[x]/(x^3+x+1)",
        "Z2[x]/(x^2)",
        "Z2[x]/(x^3)",
    ]


def test_catalog_composition_16(catalog16):
    by_kind = {"base": 0, "product": 0, "quotient": 0, "triv": 0, "loc": 0}
    for entry in catalog16:
        c = entry.ring.construction
        if c is None:
            by_kind["base"] += 1
        elif isinstance(c, ProductOf):
            by_kind["product"] += 1
        elif isinstance(c, QuotientOf):
            by_kind["quotient"] += 1
        elif isinstance(c, TrivialExtensionOf):
            by_kind["triv"] += 1
        elif isinstance(c, LocalizationOf):
            by_kind["loc"] += 1
    assert by_kind == {"base": 23, "product": 76, "quotient": 26, "triv": 32, "loc": 33}
    assert len(catalog16) == 190


def test_provenance_unique_and_parseable(catalog16):
    seen = set()
    for entry in catalog16:
        assert entry.provenance == entry.ring.label
        assert entry.provenance not in seen
        seen.add(entry.provenance)
    # spot-check a few labels reparse to the same order
    for entry in list(catalog16)[::23]:
        assert parse_ring(entry.provenance).order == entry.ring.order


def test_expansions_deduped(catalog16):
    total = 0
    for entry in catalog16:
        tables = [d.table for d in entry.expansions]
        assert len(tables) == len(set(tables)), entry.provenance
        assert all(d.ring is entry.ring for d in entry.expansions)
        total += len(tables)
    assert total == 995


def test_catalog_is_memoized():
    a = build_catalog(CatalogConfig(max_order=16))
    b = build_catalog(CatalogConfig(max_order=16))
    assert a is b


def test_catalog_deterministic_order(catalog16):
    labels = [e.provenance for e in catalog16]
    rebuilt = build_catalog(CatalogConfig(max_order=16))
    assert [e.provenance for e in rebuilt] == labels


def test_product_order_limit():
    config = CatalogConfig(max_order=16, product_order_limit=16)
    cat = build_catalog(config)
    for entry in cat:
        if isinstance(entry.ring.construction, ProductOf):
            assert entry.ring.order <= 16


def test_families_filter():
    config = CatalogConfig(
        max_order=8,
        families=("zn",),
        include_products=False,
        include_quotients=False,
        include_trivial_extensions=False,
        include_localizations=False,
    )
    cat = build_catalog(config)
    assert [e.provenance for e in cat] == ["Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8"]


def test_max_entries_truncation():
    config = CatalogConfig(max_order=8, max_entries=5)
    cat = build_catalog(config)
    assert len(cat) == 5
    assert any("truncated" in n for n in cat.notices)


def test_rejects_tiny_max_order():
    with pytest.raises(ConstructionError):
        build_catalog(CatalogConfig(max_order=1))


def test_entries_expose_ring_and_expansions(catalog8):
    entry = next(iter(catalog8))
    assert isinstance(entry, CatalogEntry)
    assert entry.ring.order >= 2
    assert entry.expansions
    labels = [d.label for d in entry.expansions]
    assert labels[0] == "id"


def test_quotients_skip_trivial(catalog16):
    for entry in catalog16:
        c = entry.ring.construction
        if isinstance(c, QuotientOf):
            # never by (0) and never by the whole ring
            assert c.ideal_mask != 1
            assert entry.ring.order > 1


def test_localizations_nontrivial(catalog16):
    # localizing at a set of units is the identity map and is skipped
    for entry in catalog16:
        c = entry.ring.construction
        if isinstance(c, LocalizationOf):
            assert any(not c.parent.is_unit(s) for s in c.set_members), entry.provenance
