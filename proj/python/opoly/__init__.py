"""Exact moment functionals, orthogonal polynomials and Darboux transformations."""

from __future__ import annotations

import functools
import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import _opoly

__all__ = [
    "OpolyError",
    "version",
    "family_moments",
    "smop",
    "invert",
    "christoffel",
    "geronimus",
    "quadratic_geronimus",
    "associated",
    "corecursive",
    "christoffel_lu",
    "geronimus_ul",
    "quadratic_factorization",
    "identities",
    "verify",
    "example",
]

version = _opoly.version


class OpolyError(Exception):
    def __init__(self, kind: str, message: str, level: int | None = None):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.message = message
        self.level = level


def _raises(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except _opoly.Error as e:
            info = json.loads(str(e))
            raise OpolyError(info["error"], info.get("message", ""), info.get("level")) from None

    return wrapper


def _s(x) -> str:
    return str(Fraction(x)) if not isinstance(x, str) else x


def _ss(xs: Iterable) -> list[str]:
    return [_s(x) for x in xs]


def _fr(xs: Sequence[str]) -> list[Fraction]:
    return [Fraction(x) for x in xs]


def _tree(obj):
    # Converts the rational strings of a decoded record to Fractions.
    if isinstance(obj, dict):
        return {k: _tree(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_tree(v) for v in obj]
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except ValueError:
            return obj
    return obj


@_raises
def family_moments(family: str, order: int, alpha=0) -> list[Fraction]:
    return _fr(_opoly.family_moments(family, _s(alpha), order))


@_raises
def smop(moments, n: int | None = None) -> dict:
    return _tree(json.loads(_opoly.smop(_ss(moments), n)))


@_raises
def invert(moments) -> list[Fraction]:
    return _fr(_opoly.invert(_ss(moments)))


@_raises
def christoffel(moments, c) -> list[Fraction]:
    return _fr(_opoly.christoffel(_ss(moments), _s(c)))


@_raises
def geronimus(moments, c, m0) -> list[Fraction]:
    return _fr(_opoly.geronimus(_ss(moments), _s(c), _s(m0)))


@_raises
def quadratic_geronimus(moments, c, m0, m1) -> list[Fraction]:
    return _fr(_opoly.quadratic_geronimus(_ss(moments), _s(c), _s(m0), _s(m1)))


@_raises
def associated(moments, k: int = 1, norm=1) -> list[Fraction]:
    return _fr(_opoly.associated(_ss(moments), k, _s(norm)))


@_raises
def corecursive(moments, alpha) -> list[Fraction]:
    return _fr(_opoly.corecursive(_ss(moments), _s(alpha)))


@_raises
def christoffel_lu(moments, c, n: int | None = None) -> dict:
    return _tree(json.loads(_opoly.christoffel_lu(_ss(moments), _s(c), n)))


@_raises
def geronimus_ul(moments, c, m0, n: int | None = None) -> dict:
    return _tree(json.loads(_opoly.geronimus_ul(_ss(moments), _s(c), _s(m0), n)))


@_raises
def quadratic_factorization(moments, c, m0, m1, n: int) -> dict:
    return _tree(json.loads(_opoly.quadratic_factorization(_ss(moments), _s(c), _s(m0), _s(m1), n)))


def identities() -> list[str]:
    return list(_opoly.identities())


@_raises
def verify(name: str, moments, *, c=1, m0=1, m1=0, norm1=1, alpha=1, n: int | None = None,
           k: int = 1) -> dict:
    raw = _opoly.verify(name, _ss(moments), _s(c), _s(m0), _s(m1), _s(norm1), _s(alpha), n, k)
    return json.loads(raw)


@_raises
def example(family: str, alpha=0, order: int = 24) -> dict:
    return _tree(json.loads(_opoly.example(family, _s(alpha), order)))
