"""Parameters, weights and the JSON element format shared by both models."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class ParamError(ValueError):
    """Raised when (n, i, m) is out of range."""


class DecodeError(ValueError):
    """Raised when element text is malformed or violates a model invariant."""


@dataclass(frozen=True, order=True)
class Params:
    """Rank ``n``, Dynkin node ``i`` and level ``m`` of KR^{i,m} in type A_n^(1)."""

    n: int
    i: int
    m: int

    def __post_init__(self):
        for name in ("n", "i", "m"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise ParamError(f"{name} must be an integer")
        if self.n < 1:
            raise ParamError("n out of range: need n >= 1")
        if not 1 <= self.i <= self.n:
            raise ParamError(f"i out of range: need 1 <= i <= n={self.n}")
        if self.m < 1:
            raise ParamError("m out of range: need m >= 1")

    @property
    def labels(self) -> range:
        """All affine labels 0..n."""
        return range(self.n + 1)

    @property
    def classical_labels(self) -> range:
        return range(1, self.n + 1)


def validate_params(n: int, i: int, m: int) -> Params:
    return Params(n, i, m)


# Weights are content vectors (c_1, ..., c_{n+1}) stored as plain tuples.
Weight = tuple


def highest_weight(p: Params) -> Weight:
    """m * omega_i as content: m in the first i coordinates."""
    return tuple([p.m] * p.i + [0] * (p.n + 1 - p.i))


def simple_root(n: int, label: int) -> Weight:
    """alpha_label as a content vector; alpha_0 = e_{n+1} - e_1."""
    v = [0] * (n + 1)
    if label == 0:
        v[n] += 1
        v[0] -= 1
    else:
        v[label - 1] += 1
        v[label] -= 1
    return tuple(v)


def positive_root(n: int, p: int, q: int) -> Weight:
    """alpha_p + ... + alpha_q = e_p - e_{q+1}."""
    v = [0] * (n + 1)
    v[p - 1] += 1
    v[q] -= 1
    return tuple(v)


def pairing(wt: Weight, label: int) -> int:
    """<wt, alpha_label^vee>, with alpha_0^vee read off the classical content."""
    n = len(wt) - 1
    if label == 0:
        return wt[n] - wt[0]
    return wt[label - 1] - wt[label]


def hook_content_count(p: Params) -> int:
    """Number of SSYT of rectangular shape (m^i) with entries in [n+1]."""
    total = Fraction(1)
    cols = p.m
    rows = p.i
    for r in range(rows):
        for c in range(cols):
            hook = (cols - c - 1) + (rows - r - 1) + 1
            total *= Fraction(p.n + 1 + c - r, hook)
    assert total.denominator == 1
    return int(total)


# --- serialization -----------------------------------------------------------

ElementRef = Union["Tableau", "PolytopePoint"]  # noqa: F821


def encode_element(e) -> str:
    """Canonical compact JSON text for a tableau or polytope point."""
    return json.dumps({"model": e.model, "rows": [list(r) for r in e.rows]}, separators=(",", ":"))


def decode_element(text: str, p: Params):
    """Parse element JSON and validate it against ``p``."""
    from .polytope import PolytopePoint, is_member
    from .tableau import Tableau

    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"malformed element text: {exc}") from None
    if not isinstance(obj, dict) or set(obj) != {"model", "rows"}:
        raise DecodeError("element must be an object with exactly the keys 'model' and 'rows'")
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DecodeError("'rows' must be an array of arrays")
    for r in rows:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise DecodeError("entries must be non-negative integers")
    model = obj["model"]
    if model == "tableau":
        try:
            return Tableau(p, rows)
        except ValueError as exc:
            raise DecodeError(str(exc)) from None
    if model == "polytope":
        try:
            a = PolytopePoint(p, rows)
        except ValueError as exc:
            raise DecodeError(str(exc)) from None
        if not is_member(a):
            raise DecodeError("Dyck path bound exceeded: some Dyck path sums to more than m")
        return a
    raise DecodeError(f"unknown model {model!r}")
