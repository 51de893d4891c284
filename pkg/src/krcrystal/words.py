"""Operator words and the path constructions from the highest weight element.

A word is a sequence of factors whose RIGHTMOST factor acts first.  An
exponent is a literal count or ``phi_l - a`` / ``eps_l - a``, evaluated on
the element the factor acts on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .core import Params
from .polytope import PolytopePoint
from .tableau import Tableau, from_matrix, highest_weight_tableau

__all__ = [
    "Symbolic",
    "Factor",
    "OperatorWord",
    "WordError",
    "WordSyntaxError",
    "parse_word",
    "render_word",
    "apply_word",
    "word_K",
    "word_full_path",
    "p_formula_word",
    "word_P_small_i",
    "word_Q_large_i",
    "SigmaChi",
    "OmegaNu",
    "sigma_chi",
    "omega_nu",
    "explicit_image_small_i",
    "explicit_image_large_i",
    "min_entry_diagnostic",
    "sigma_identity_gap",
    "omega_identity_gap",
]


class WordError(ValueError):
    """A word could not be evaluated on an element."""

    def __init__(self, message: str, step: int):
        super().__init__(message)
        self.step = step


class WordSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Symbolic:
    """``phi_label - offset`` (kind 'phi') or ``eps_label - offset`` (kind 'eps')."""

    kind: str
    label: int
    offset: int = 0


Exponent = Union[int, Symbolic]


@dataclass(frozen=True)
class Factor:
    direction: str
    label: int
    exp: Exponent = 1

    def __post_init__(self):
        if self.direction not in ("e", "f"):
            raise ValueError(f"direction must be 'e' or 'f', got {self.direction!r}")
        if isinstance(self.exp, Symbolic):
            wanted = "phi" if self.direction == "f" else "eps"
            if self.exp.kind != wanted:
                raise ValueError(f"{self.direction}-factors take {wanted}-relative exponents only")
            if self.exp.label != self.label:
                raise ValueError("symbolic exponent index must match the factor index")
            if self.exp.offset < 0:
                raise ValueError("symbolic offsets are non-negative")
        elif self.exp < 0:
            raise ValueError("literal exponents are non-negative")

    @property
    def is_lowering(self) -> bool:
        return self.direction == "f"

    def render(self) -> str:
        head = f"{self.direction}{self.label}"
        if isinstance(self.exp, Symbolic):
            body = f"{self.exp.kind}{self.label}"
            if self.exp.offset:
                body += f"-{self.exp.offset}"
            return f"{head}^{{{body}}}"
        if self.exp == 1:
            return head
        return f"{head}^{self.exp}"


class OperatorWord(tuple):
    """Tuple of factors; ``word[0]`` is applied last."""

    def __new__(cls, factors: Sequence[Factor] = ()):
        return super().__new__(cls, factors)

    def __add__(self, other):
        return OperatorWord(tuple(self) + tuple(other))

    def __repr__(self):
        return f"OperatorWord({render_word(self)!r})"

    @property
    def lowering_only(self) -> bool:
        return all(fa.direction == "f" for fa in self)


# --- grammar -----------------------------------------------------------------

_FACTOR = re.compile(
    r"(?P<dir>[ef])(?P<idx>\d+)"
    r"(?:\^(?:(?P<lit>\d+)|\{(?P<kind>phi|eps)(?P<sidx>\d+)(?:-(?P<off>\d+))?\}))?"
)


def parse_word(text: str) -> OperatorWord:
    """Parse whitespace-separated factors such as ``f3^2 e2 f1^{phi1-1}``."""
    factors = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        mt = _FACTOR.match(text, pos)
        if mt is None:
            raise WordSyntaxError("expected a factor like 'f2', 'e1^3' or 'f1^{phi1-2}'", pos)
        end = mt.end()
        if end < len(text) and not text[end].isspace():
            raise WordSyntaxError(f"unexpected character {text[end]!r}", end)
        label = int(mt["idx"])
        if mt["kind"]:
            if int(mt["sidx"]) != label:
                raise WordSyntaxError("symbolic exponent index must match the factor index", pos)
            wanted = "phi" if mt["dir"] == "f" else "eps"
            if mt["kind"] != wanted:
                raise WordSyntaxError(
                    f"{mt['kind']}-relative exponents attach to "
                    f"{'f' if mt['kind'] == 'phi' else 'e'}-factors only",
                    pos,
                )
            exp = Symbolic(mt["kind"], label, int(mt["off"] or 0))
        elif mt["lit"] is not None:
            exp = int(mt["lit"])
        else:
            exp = 1
        factors.append(Factor(mt["dir"], label, exp))
        pos = end
    return OperatorWord(factors)


def render_word(word: Sequence[Factor]) -> str:
    return " ".join(fa.render() for fa in word)


# --- evaluation --------------------------------------------------------------

def _resolve(fa: Factor, x) -> int:
    if isinstance(fa.exp, Symbolic):
        base = x.phi(fa.label) if fa.exp.kind == "phi" else x.epsilon(fa.label)
        return base - fa.exp.offset
    return fa.exp


def apply_word(word: Sequence[Factor], x, strict: bool = True, trace: Optional[list] = None):
    """Evaluate ``word`` on ``x`` (tableau or polytope point), rightmost factor first.

    A symbolic exponent that comes out negative raises ``WordError``.  When
    a literal exponent runs past the string, ``strict`` raises as well;
    otherwise the result is None, which absorbs the remaining factors.
    ``trace``, when given, collects ``(factor, count, element)`` per step.
    """
    if x is None:
        return None
    cur = x
    for step, fa in enumerate(reversed(word), start=1):
        if fa.label > cur.params.n:
            raise WordError(f"word undefined at step {step}: label {fa.label} exceeds n", step)
        count = _resolve(fa, cur)
        if count < 0:
            raise WordError(
                f"word undefined at step {step}: exponent of {fa.render()} evaluates to {count}", step
            )
        for _ in range(count):
            cur = cur.f(fa.label) if fa.direction == "f" else cur.e(fa.label)
            if cur is None:
                if strict:
                    raise WordError(f"annihilated at step {step} ({fa.render()})", step)
                return None
        if trace is not None:
            trace.append((fa, count, cur))
    return cur


# --- inductive path through raising and lowering operators --------------------

def _first_nonzero_row(a: PolytopePoint) -> Optional[int]:
    p = a.params
    for t in range(p.i, p.n + 1):
        if any(a.rows[t - p.i]):
            return t
    return None


def word_K(q: PolytopePoint) -> OperatorWord:
    """The word H E F carrying Q-with-its-first-nonzero-row-cleared to Q."""
    p = q.params
    i = p.i
    k = _first_nonzero_row(q)
    if k is None:
        raise ValueError("no nonzero row: the word is defined for nonzero points only")
    t = min(s for s in range(1, i + 1) if q[s, k])
    h = [Factor("f", idx, Symbolic("phi", idx)) for idx in range(k, i, -1)]
    e = [Factor("e", idx, Symbolic("eps", idx, q[idx, k])) for idx in range(i, t, -1)]
    f = [Factor("f", t, q[t, k])] + [Factor("f", idx, Symbolic("phi", idx)) for idx in range(t + 1, i + 1)]
    return OperatorWord(h + e + f)


def truncate(a: PolytopePoint, k: int) -> PolytopePoint:
    """Copy of ``a`` with every row above ``k`` set to zero."""
    p = a.params
    return PolytopePoint(p, [row if t >= k else (0,) * p.i for t, row in zip(range(p.i, p.n + 1), a.rows)])


def word_full_path(a: PolytopePoint) -> OperatorWord:
    """Concatenated K-words over the truncations; applied to zero it yields ``a``."""
    p = a.params
    word = OperatorWord()
    for k in range(p.i, p.n + 1):
        if any(a.rows[k - p.i]):
            word = word + word_K(truncate(a, k))
    return word


# --- lowering-only paths near the ends of the diagram -------------------------

def p_formula_word(a: PolytopePoint) -> OperatorWord:
    """X_2 X_3 ... X_n G without checking that i <= 2."""
    p = a.params
    i, n = p.i, p.n
    g = [Factor("f", idx, sum(a[1, r] for r in range(i, n + 1))) for idx in range(1, i + 1)]
    word = []
    for ell in range(2, n + 1):
        col_total = sum(a[s, ell] for s in range(1, i + 1))
        x = [Factor("f", idx, col_total) for idx in range(ell, i, -1)]
        x += [Factor("f", j, sum(a[s, ell] for s in range(2, j + 1))) for j in range(2, i + 1)]
        word += x
    return OperatorWord(word + g)


def word_P_small_i(a: PolytopePoint) -> OperatorWord:
    if a.params.i > 2:
        raise ValueError("formula restricted to i <= 2")
    return p_formula_word(a)


def word_Q_large_i(a: PolytopePoint) -> OperatorWord:
    """Y_{n-1} ... Y_1 H, lowering only, for i >= n-1."""
    p = a.params
    i, n = p.i, p.n
    if i < n - 1:
        raise ValueError("formula restricted to i >= n-1")
    last = sum(a[s, n] for s in range(1, i + 1))
    h = [Factor("f", idx, last) for idx in range(n, i - 1, -1)]
    word = []
    for ell in range(n - 1, 0, -1):
        total = sum(a[ell, r] for r in range(i, n + 1))
        y = [Factor("f", j, total) for j in range(ell, i)]
        y += [Factor("f", idx, sum(a[ell, r] for r in range(idx, n))) for idx in range(n - 1, i - 1, -1)]
        word += y
    return OperatorWord(word + h)


# --- explicit images ---------------------------------------------------------

@dataclass(frozen=True)
class SigmaChi:
    sigma: dict
    chi: dict


@dataclass(frozen=True)
class OmegaNu:
    omega: dict
    nu: dict


def sigma_chi(a: PolytopePoint) -> SigmaChi:
    """Downward recursion over rows k = n, ..., 2 (requires i <= 2)."""
    p = a.params
    if p.i > 2:
        raise ValueError("sigma/chi are defined for i <= 2")
    n = p.n
    sigma, chi = {}, {}
    if n < 2:
        return SigmaChi(sigma, chi)
    sigma[n] = -a[2, n]
    chi[n] = 1
    for k in range(n - 1, 1, -1):
        sigma[k] = a[1, k + 1] + (1 - chi[k + 1]) * sigma[k + 1] - a[2, k]
        chi[k] = 1 if sigma[k] < 0 else 0
    return SigmaChi(sigma, chi)


def omega_nu(a: PolytopePoint) -> OmegaNu:
    """Upward recursion over columns k = 1, ..., n-1 (requires i >= n-1)."""
    p = a.params
    n = p.n
    if p.i < n - 1:
        raise ValueError("omega/nu are defined for i >= n-1")
    omega, nu = {}, {}
    if n < 2:
        return OmegaNu(omega, nu)
    omega[1] = -a[1, n - 1]
    nu[1] = 1
    for k in range(2, n):
        omega[k] = a[k - 1, n] + (1 - nu[k - 1]) * omega[k - 1] - a[k, n - 1]
        nu[k] = 1 if omega[k] < 0 else 0
    return OmegaNu(omega, nu)


def explicit_image_small_i(a: PolytopePoint) -> Tableau:
    """Closed-form image tableau for i <= 2, built from its multiplicity matrix."""
    p = a.params
    i, n, m = p.i, p.n, p.m
    if i > 2:
        raise ValueError("explicit image restricted to i <= 2")
    if i == 1:
        total = sum(a[1, j] for j in range(1, n + 1))
        return from_matrix([[m - total] + [a[1, j] for j in range(1, n + 1)]], p)
    sc = sigma_chi(a)
    sig, chi = sc.sigma, sc.chi
    top = sum(a[1, j] for j in range(2, n + 1))
    width = n
    row1 = [0] * width
    row2 = [0] * width
    row1[0] = m - top
    row1[1] = a[1, 2] + (1 - chi[2]) * sig[2]
    row2[0] = m - top + sum(chi[j] * sig[j] for j in range(2, n + 1))
    for t in range(3, n + 1):
        row1[t - 1] = a[2, t - 1] + chi[t - 1] * sig[t - 1]
    for t in range(2, n + 1):
        row2[t - 1] = a[1, t] - chi[t] * sig[t]
    return from_matrix([row1, row2], p)


def explicit_image_large_i(a: PolytopePoint) -> Tableau:
    """Closed-form image tableau for i >= n-1, row by row as multiplicity tuples."""
    p = a.params
    i, n, m = p.i, p.n, p.m
    if i < n - 1:
        raise ValueError("explicit image restricted to i >= n-1")
    if i == n:
        rows = []
        for s in range(1, n + 1):
            acc = sum(a[j, n] for j in range(1, s + 1))
            rows.append([m - acc, acc])
        return from_matrix(rows, p)
    on = omega_nu(a)
    om, nu = on.omega, on.nu
    k = n - 1
    rows = []
    for s in range(1, k):
        rows.append([
            m - sum(a[j, n] - nu[j] * om[j] for j in range(1, s + 1)),
            -sum(nu[j] * om[j] for j in range(1, s + 1)) + (1 - nu[s + 1]) * om[s + 1],
            sum(a[j, n - 1] + nu[j] * om[j] for j in range(2, s + 2)),
        ])
    col_total = sum(a[j, n] for j in range(1, i + 1))
    tail = sum(nu[j] * om[j] for j in range(1, k + 1))
    rows.append([m - col_total + tail, -tail, col_total])
    return from_matrix(rows, p)


def min_entry_diagnostic(a: PolytopePoint, image: Tableau) -> list:
    """Compare column minima of the image matrix with anti-diagonal minima of ``a``.

    Returns ``(k, column_min, antidiagonal_min)`` for i+1 <= k <= n-i+2.
    Purely informational; nothing depends on the two agreeing.
    """
    from .tableau import to_matrix

    p = a.params
    mat = to_matrix(image)
    out = []
    for k in range(p.i + 1, p.n - p.i + 3):
        col = min(row[k - 1] for row in mat)
        diagonal = [a[s, k + 1 - s] for s in range(1, p.i + 1) if p.i <= k + 1 - s <= p.n]
        out.append((k, col, min(diagonal) if diagonal else None))
    return out


def image_by_word(word: Sequence[Factor], p: Params) -> Tableau:
    """Replay a path word on the highest weight tableau."""
    return apply_word(word, highest_weight_tableau(p))


def sigma_identity_gap(a: PolytopePoint, k: int) -> int:
    """LHS minus RHS of the telescoped Sigma identity at row k (zero when it holds)."""
    sc = sigma_chi(a)
    n = a.params.n
    lhs = sum(a[1, j] - a[2, j] for j in range(k, n + 1))
    rhs = a[1, k] + sum(sc.chi[j] * sc.sigma[j] for j in range(k, n + 1)) + (1 - sc.chi[k]) * sc.sigma[k]
    return lhs - rhs


def omega_identity_gap(a: PolytopePoint, k: int) -> int:
    """LHS minus RHS of the telescoped Omega identity at column k, 2 <= k <= n-1."""
    on = omega_nu(a)
    n = a.params.n
    lhs = sum(a[j, n] - a[j, n - 1] for j in range(1, k))
    rhs = a[k, n - 1] + sum(on.nu[j] * on.omega[j] for j in range(1, k)) + on.omega[k]
    return lhs - rhs
