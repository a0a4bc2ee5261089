"""Sparse integer polynomials in the genus variable ``g`` and boundary variable ``v``.

Coefficients are Python ints, so nothing ever overflows.  Terms print with
descending ``v`` exponent, then ascending ``g`` exponent::

    >>> str(BivariatePolynomial({(0, 3): 2, (1, 1): 1}))
    '2*v^3 + g*v'
"""
from __future__ import annotations

from typing import Iterable, Mapping


def _monomial(name: str, exp: int) -> str:
    if exp == 0:
        return ""
    return name if exp == 1 else f"{name}^{exp}"


def _render(items: Iterable[tuple[int, list[str]]]) -> str:
    out = []
    for coeff, factors in items:
        factors = [f for f in factors if f]
        mag = abs(coeff)
        body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
        if not out:
            out.append(("-" if coeff < 0 else "") + body)
        else:
            out.append(("- " if coeff < 0 else "+ ") + body)
    return " ".join(out) if out else "0"


class BivariatePolynomial:
    """Immutable map ``(g_exp, v_exp) -> int`` with no zero entries."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (ge, ve), c in (terms or {}).items():
            if ge < 0 or ve < 0:
                raise ValueError("exponents must be nonnegative")
            if c:
                clean[(int(ge), int(ve))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> BivariatePolynomial:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, g_exp: int, v_exp: int, c: int = 1) -> BivariatePolynomial:
        return cls({(g_exp, v_exp): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, g_exp: int, v_exp: int) -> int:
        return self._terms.get((g_exp, v_exp), 0)

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out)

    def __sub__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        return self + other.scale(-1)

    def __mul__(self, other: BivariatePolynomial | int) -> BivariatePolynomial:
        if isinstance(other, int):
            return self.scale(other)
        out: dict[tuple[int, int], int] = {}
        for (ga, va), ca in self._terms.items():
            for (gb, vb), cb in other._terms.items():
                k = (ga + gb, va + vb)
                out[k] = out.get(k, 0) + ca * cb
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> BivariatePolynomial:
        return BivariatePolynomial({k: c * v for k, v in self._terms.items()})

    def shift_nu(self, d: int) -> BivariatePolynomial:
        """Multiply by ``v**d``."""
        if d < 0:
            raise ValueError("shift must be nonnegative")
        return BivariatePolynomial({(ge, ve + d): c for (ge, ve), c in self._terms.items()})

    def shift_gamma(self, d: int) -> BivariatePolynomial:
        return BivariatePolynomial({(ge + d, ve): c for (ge, ve), c in self._terms.items()})

    def set_gamma_one(self) -> UnivariatePolynomial:
        out: dict[int, int] = {}
        for (_, ve), c in self._terms.items():
            out[ve] = out.get(ve, 0) + c
        return UnivariatePolynomial(out)

    def evaluate(self, gamma: int, nu: int) -> int:
        return sum(c * gamma**ge * nu**ve for (ge, ve), c in self._terms.items())

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """``(g_exp, v_exp, coeff)`` in canonical order."""
        keys = sorted(self._terms, key=lambda k: (-k[1], k[0]))
        return [(ge, ve, self._terms[(ge, ve)]) for ge, ve in keys]

    def to_json(self) -> list[dict]:
        return [{"g": ge, "v": ve, "c": str(c)} for ge, ve, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> BivariatePolynomial:
        return cls({(int(t["g"]), int(t["v"])): int(t["c"]) for t in data})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return _render(
            (c, [_monomial("g", ge), _monomial("v", ve)]) for ge, ve, c in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"BivariatePolynomial({str(self)!r})"


class UnivariatePolynomial:
    """Immutable map ``v_exp -> int`` with no zero entries."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        if any(e < 0 for e in self._coeffs):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def from_list(cls, coeffs: Iterable[int]) -> UnivariatePolynomial:
        return cls(dict(enumerate(coeffs)))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: UnivariatePolynomial) -> UnivariatePolynomial:
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return UnivariatePolynomial(out)

    def __mul__(self, other: UnivariatePolynomial) -> UnivariatePolynomial:
        out: dict[int, int] = {}
        for ea, ca in self._coeffs.items():
            for eb, cb in other._coeffs.items():
                out[ea + eb] = out.get(ea + eb, 0) + ca * cb
        return UnivariatePolynomial(out)

    def degree(self) -> int | None:
        """Degree in ``v``; ``None`` for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    def leading_coeff(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[max(self._coeffs)]

    def coeff(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def __call__(self, n: int) -> int:
        return sum(c * n**e for e, c in self._coeffs.items())

    def is_even(self) -> bool:
        return all(e % 2 == 0 for e in self._coeffs)

    def is_odd(self) -> bool:
        return all(e % 2 == 1 for e in self._coeffs)

    def to_json(self) -> list[dict]:
        return [{"v": e, "c": str(self._coeffs[e])} for e in sorted(self._coeffs, reverse=True)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __str__(self) -> str:
        return _render(
            (self._coeffs[e], [_monomial("v", e)]) for e in sorted(self._coeffs, reverse=True)
        )

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({str(self)!r})"


# functional aliases matching the operation names used elsewhere
def add(a: BivariatePolynomial, b: BivariatePolynomial) -> BivariatePolynomial:
    return a + b


def mul(a: BivariatePolynomial, b: BivariatePolynomial) -> BivariatePolynomial:
    return a * b


def scale(a: BivariatePolynomial, c: int) -> BivariatePolynomial:
    return a.scale(c)


def shift_nu(a: BivariatePolynomial, d: int) -> BivariatePolynomial:
    return a.shift_nu(d)


def set_gamma_one(a: BivariatePolynomial) -> UnivariatePolynomial:
    return a.set_gamma_one()


def eval_at_integer(a: UnivariatePolynomial, n: int) -> int:
    if n < 1:
        raise ValueError("N must be a positive integer")
    return a(n)


def degree_nu(a: BivariatePolynomial | UnivariatePolynomial) -> int | None:
    if isinstance(a, BivariatePolynomial):
        a = a.set_gamma_one()
    return a.degree()


def leading_coeff(a: BivariatePolynomial | UnivariatePolynomial) -> int:
    if isinstance(a, BivariatePolynomial):
        a = a.set_gamma_one()
    return a.leading_coeff()


def coeff_of_nu(a: BivariatePolynomial | UnivariatePolynomial, e: int) -> int:
    if isinstance(a, BivariatePolynomial):
        a = a.set_gamma_one()
    return a.coeff(e)
