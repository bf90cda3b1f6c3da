"""Parsers for the three mini-languages used at the tool boundary.

Ring specs:       Z6, Z2[x]/(x^2+x+1), Z4xZ9, Z12/(4), triv(Z4,reg),
                  triv(Z4,quot:(2)), loc(Z12,3)
Expansion specs:  id, rad, plus:(2), full, prod(id,rad), bar(rad,(4)),
                  loc(rad,3), triv(id)
Queries:          1abs-delta-primary & !delta-primary, prime | maximal

Quotients, triv and loc bind tighter than the product separator x, and
products associate to the left. Anything else fails with a position-tagged
ParseError.
"""

from __future__ import annotations

from typing import Callable

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
from .errors import ParseError
from .expansions import (
    ExpansionFunction,
    constant_ring,
    identity_expansion,
    induced_localization,
    induced_product,
    induced_quotient,
    induced_trivial_extension,
    plus_fixed,
    radical_expansion,
)
from .rings import FiniteRing, make_poly_quotient, make_zn


class _Cursor:
    """A position-tracking scanner over a spec string."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.text, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def startswith(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def take(self, token: str) -> bool:
        if self.startswith(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.take(token):
            raise self.error(f"expected {token!r}")

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def int_list(self) -> list[int]:
        out = [self.integer()]
        while self.take(","):
            out.append(self.integer())
        return out

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1


# ----------------------------------------------------------------------
# ring specs


def parse_ring(text: str) -> FiniteRing:
    """Parse a ring spec string into a constructed, validated ring."""
    cur = _Cursor(text)
    R = _product(cur)
    if cur.pos != len(text):
        raise cur.error("unexpected trailing input")
    return R


def _product(cur: _Cursor) -> FiniteRing:
    R = _term(cur)
    while cur.take("x"):
        R = make_product(R, _term(cur))
    return R


def _term(cur: _Cursor) -> FiniteRing:
    R = _atom(cur)
    while cur.startswith("/("):
        cur.expect("/(")
        gens = cur.int_list()
        gpos = cur.pos
        cur.expect(")")
        for g in gens:
            if not (0 <= g < R.order):
                cur.pos = gpos
                raise cur.error(f"generator {g} out of range for {R.label}")
        R = make_quotient(R, R.span(gens))
    return R


def _atom(cur: _Cursor) -> FiniteRing:
    if cur.take("triv("):
        A = _product(cur)
        cur.expect(",")
        if cur.take("reg"):
            E = regular_module(A)
        elif cur.take("quot:("):
            gens = cur.int_list()
            gpos = cur.pos
            cur.expect(")")
            for g in gens:
                if not (0 <= g < A.order):
                    cur.pos = gpos
                    raise cur.error(f"generator {g} out of range for {A.label}")
            E = quotient_module(A, A.span(gens))
        else:
            raise cur.error("expected a module spec, reg or quot:(...)")
        cur.expect(")")
        return make_trivial_extension(A, E)
    if cur.take("loc("):
        R = _product(cur)
        cur.expect(",")
        gens = cur.int_list()
        gpos = cur.pos
        cur.expect(")")
        for g in gens:
            if not (0 <= g < R.order):
                cur.pos = gpos
                raise cur.error(f"generator {g} out of range for {R.label}")
        try:
            S = MultiplicativeSet.from_generators(R, gens)
        except Exception as exc:
            cur.pos = gpos
            raise cur.error(str(exc))
        return localize(R, S).ring
    if cur.take("Z"):
        n = cur.integer()
        if cur.startswith("[x]/("):
            cur.expect("[x]/(")
            coeffs = _poly(cur)
            cur.expect(")")
            try:
                return make_poly_quotient(n, coeffs)
            except Exception as exc:
                raise cur.error(str(exc))
        try:
            return make_zn(n)
        except Exception as exc:
            raise cur.error(str(exc))
    raise cur.error("expected a ring spec")


def _poly(cur: _Cursor) -> list[int]:
    """A sum of terms c, x, cx, x^k, cx^k, as low-to-high coefficients."""
    coeffs: dict[int, int] = {}
    while True:
        coef = 1
        deg = 0
        saw = False
        if cur.peek().isdigit():
            coef = cur.integer()
            saw = True
        if cur.take("x"):
            deg = 1
            saw = True
            if cur.take("^"):
                deg = cur.integer()
        if not saw:
            raise cur.error("expected a polynomial term")
        coeffs[deg] = coeffs.get(deg, 0) + coef
        if not cur.take("+"):
            break
    top = max(coeffs)
    return [coeffs.get(d, 0) for d in range(top + 1)]


# ----------------------------------------------------------------------
# expansion specs, parsed against a concrete ring


def parse_expansion(text: str, R: FiniteRing) -> ExpansionFunction:
    """Parse an expansion spec for the given ring.

    The induced forms (prod, bar, loc, triv) are only accepted when the
    ring was built by the matching construction, and their ideal or set
    arguments must agree with the construction's own data.
    """
    cur = _Cursor(text)
    d = _expansion(cur, R)
    if cur.pos != len(text):
        raise cur.error("unexpected trailing input")
    return d


def _expansion(cur: _Cursor, R: FiniteRing) -> ExpansionFunction:
    if cur.take("id"):
        return identity_expansion(R)
    if cur.take("rad"):
        return radical_expansion(R)
    if cur.take("full"):
        return constant_ring(R)
    if cur.take("plus:("):
        gens = cur.int_list()
        gpos = cur.pos
        cur.expect(")")
        for g in gens:
            if not (0 <= g < R.order):
                cur.pos = gpos
                raise cur.error(f"generator {g} out of range for {R.label}")
        return plus_fixed(R, R.span(gens))
    if cur.take("prod("):
        info = R.construction
        if not isinstance(info, ProductOf):
            raise cur.error(f"{R.label} was not built as a product")
        d1 = _expansion(cur, info.left)
        cur.expect(",")
        d2 = _expansion(cur, info.right)
        cur.expect(")")
        return induced_product(R, d1, d2)
    if cur.take("bar("):
        info = R.construction
        if not isinstance(info, QuotientOf):
            raise cur.error(f"{R.label} was not built as a quotient")
        d = _expansion(cur, info.parent)
        cur.expect(",(")
        gens = cur.int_list()
        gpos = cur.pos
        cur.expect("))")
        span = info.parent.span(gens)
        if span.mask != info.ideal_mask:
            cur.pos = gpos
            raise cur.error("ideal does not match the quotient construction")
        return induced_quotient(R, d)
    if cur.take("loc("):
        info = R.construction
        if not isinstance(info, LocalizationOf):
            raise cur.error(f"{R.label} was not built as a localization")
        d = _expansion(cur, info.parent)
        cur.expect(",")
        gens = cur.int_list()
        gpos = cur.pos
        cur.expect(")")
        closure = MultiplicativeSet.from_generators(info.parent, gens)
        if frozenset(closure.members) != frozenset(info.set_members):
            cur.pos = gpos
            raise cur.error("set does not match the localization construction")
        return induced_localization(R, d)
    if cur.take("triv("):
        info = R.construction
        if not isinstance(info, TrivialExtensionOf):
            raise cur.error(f"{R.label} was not built as a trivial extension")
        d = _expansion(cur, info.base)
        cur.expect(")")
        return induced_trivial_extension(R, d)
    raise cur.error("expected an expansion spec")


# ----------------------------------------------------------------------
# predicate queries


class Query:
    """A parsed boolean combination of predicate names."""

    def __init__(self, fn: Callable, names: frozenset[str], text: str):
        self._fn = fn
        self.names = names
        self.text = text

    @property
    def uses_delta(self) -> bool:
        from .predicates import DELTA_FREE

        return bool(self.names - DELTA_FREE)

    def evaluate(self, I, delta=None) -> bool:
        return self._fn(I, delta)


def parse_query(text: str) -> Query:
    """Parse a boolean predicate query with &, |, ! and parentheses."""
    from .predicates import PREDICATES

    cur = _Cursor(text)
    names: set[str] = set()

    def primary() -> Callable:
        cur.skip_spaces()
        if cur.take("!"):
            inner = primary()
            return lambda I, d: not inner(I, d)
        if cur.take("("):
            inner = disjunction()
            cur.skip_spaces()
            cur.expect(")")
            return inner
        start = cur.pos
        while cur.pos < len(text) and (text[cur.pos].isalnum() or text[cur.pos] == "-"):
            cur.pos += 1
        name = text[start : cur.pos]
        if name not in PREDICATES:
            cur.pos = start
            raise cur.error(f"unknown predicate {name!r}")
        names.add(name)
        pred = PREDICATES[name]
        return lambda I, d: pred(I, d)

    def conjunction() -> Callable:
        parts = [primary()]
        while True:
            cur.skip_spaces()
            if not cur.take("&"):
                break
            parts.append(primary())
        if len(parts) == 1:
            return parts[0]
        return lambda I, d: all(p(I, d) for p in parts)

    def disjunction() -> Callable:
        parts = [conjunction()]
        while True:
            cur.skip_spaces()
            if not cur.take("|"):
                break
            parts.append(conjunction())
        if len(parts) == 1:
            return parts[0]
        return lambda I, d: any(p(I, d) for p in parts)

    fn = disjunction()
    cur.skip_spaces()
    if cur.pos != len(text):
        raise cur.error("unexpected trailing input")
    return Query(fn, frozenset(names), text)
