"""Integral points of the FFL polytope B^{i,m}_n with the affine crystal structure.

A point is a pattern a[s, t] with column s in 1..i and row t in i..n.  It
belongs to B^{i,m} when every Dyck path (monotone path from (1, i) to
(i, n) moving right in s or down in t) has entry sum at most m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .core import Params, highest_weight, positive_root

__all__ = [
    "PolytopePoint",
    "PivotData",
    "max_dyck_sum",
    "is_member",
    "enumerate_points",
    "pivots",
    "string_stats",
    "apply",
    "highest_weight_point",
    "weight",
]


class PolytopePoint:
    """Immutable pattern; ``rows[t - i][s - 1]`` holds a[s, t]."""

    model = "polytope"
    __slots__ = ("params", "rows", "_hash")

    def __init__(self, params: Params, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if len(rows) != params.n - params.i + 1 or any(len(r) != params.i for r in rows):
            raise ValueError(
                f"pattern must have {params.n - params.i + 1} rows of length {params.i}"
            )
        if any(v < 0 for r in rows for v in r):
            raise ValueError("pattern entries must be non-negative")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash((params, rows)))

    @classmethod
    def from_entries(cls, params: Params, entries: dict) -> "PolytopePoint":
        """Build from a sparse ``{(s, t): value}`` map."""
        grid = [[0] * params.i for _ in range(params.n - params.i + 1)]
        for (s, t), v in entries.items():
            if not (1 <= s <= params.i and params.i <= t <= params.n):
                raise ValueError(f"position ({s}, {t}) outside the pattern")
            grid[t - params.i][s - 1] = v
        return cls(params, grid)

    def __getitem__(self, key) -> int:
        s, t = key
        p = self.params
        if 1 <= s <= p.i and p.i <= t <= p.n:
            return self.rows[t - p.i][s - 1]
        return 0

    def __setattr__(self, name, value):
        raise AttributeError("PolytopePoint is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PolytopePoint)
            and self.params == other.params
            and self.rows == other.rows
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PolytopePoint({self.rows})"

    def replace(self, changes: dict) -> "PolytopePoint":
        """Copy with ``{(s, t): delta}`` added to the entries."""
        p = self.params
        grid = [list(r) for r in self.rows]
        for (s, t), d in changes.items():
            grid[t - p.i][s - 1] += d
        return PolytopePoint(p, grid)

    def f(self, label: int) -> Optional["PolytopePoint"]:
        return apply(self, "f", label)

    def e(self, label: int) -> Optional["PolytopePoint"]:
        return apply(self, "e", label)

    def phi(self, label: int) -> int:
        return string_stats(self, label)[1]

    def epsilon(self, label: int) -> int:
        return string_stats(self, label)[0]

    def weight(self):
        return weight(self)


@dataclass(frozen=True)
class PivotData:
    """Pivot indices for node ``label``.

    For label > i these are columns (p_plus <= q_plus); for label < i they
    are rows (q_minus <= p_minus).  Unused fields are None.
    """

    label: int
    p_plus: Optional[int] = None
    q_plus: Optional[int] = None
    p_minus: Optional[int] = None
    q_minus: Optional[int] = None


def max_dyck_sum(a: PolytopePoint) -> int:
    """Largest entry sum over Dyck paths, by a max-plus DP from (i, n) back to (1, i)."""
    p = a.params
    best = {}
    for t in range(p.n, p.i - 1, -1):
        for s in range(p.i, 0, -1):
            nxt = max(best.get((s, t + 1), 0), best.get((s + 1, t), 0))
            best[s, t] = a[s, t] + nxt
    return best[1, p.i]


def is_member(a: PolytopePoint) -> bool:
    return max_dyck_sum(a) <= a.params.m


def enumerate_points(p: Params) -> Iterator[PolytopePoint]:
    """Members of B^{i,m}_n in lexicographic order of the row-major entries.

    Each cell is bounded by m minus the best Dyck prefix into it, so every
    partial assignment extends (by zeros) and nothing is pruned wrongly.
    """
    cells = [(s, t) for t in range(p.i, p.n + 1) for s in range(1, p.i + 1)]
    values = {}
    prefix = {}

    def rec(k):
        if k == len(cells):
            yield PolytopePoint.from_entries(p, values)
            return
        s, t = cells[k]
        before = max(prefix.get((s - 1, t), 0), prefix.get((s, t - 1), 0))
        for v in range(p.m - before + 1):
            values[s, t] = v
            prefix[s, t] = before + v
            yield from rec(k + 1)
        del values[s, t]
        del prefix[s, t]

    yield from rec(0)


def _corner_sums_above(a: PolytopePoint, label: int) -> list:
    """For label > i: sums over q in 1..i along rows label-1 then label."""
    i = a.params.i
    return [
        sum(a[j, label - 1] for j in range(1, q + 1)) + sum(a[j, label] for j in range(q, i + 1))
        for q in range(1, i + 1)
    ]


def _corner_sums_below(a: PolytopePoint, label: int) -> list:
    """For label < i: sums over q in i..n down column label then label+1."""
    p = a.params
    return [
        sum(a[label, j] for j in range(p.i, q + 1)) + sum(a[label + 1, j] for j in range(q, p.n + 1))
        for q in range(p.i, p.n + 1)
    ]


def pivots(a: PolytopePoint, label: int, swap_ties: bool = False) -> PivotData:
    """Pivot indices of ``a`` at a classical node other than i.

    ``swap_ties`` exchanges the min/max tie-breaking; it exists only so the
    verification suite can show that the tie rule matters.
    """
    p = a.params
    if not 1 <= label <= p.n or label == p.i:
        raise ValueError(f"pivots are defined for labels in [n] other than i={p.i}")
    if label > p.i:
        sums = _corner_sums_above(a, label)
        top = max(sums)
        hits = [q for q, v in enumerate(sums, start=1) if v == top]
        lo, hi = hits[0], hits[-1]
        if swap_ties:
            lo, hi = hi, lo
        return PivotData(label, p_plus=lo, q_plus=hi)
    sums = _corner_sums_below(a, label)
    top = max(sums)
    hits = [q for q, v in enumerate(sums, start=p.i) if v == top]
    lo, hi = hits[0], hits[-1]
    if swap_ties:
        lo, hi = hi, lo
    return PivotData(label, p_minus=hi, q_minus=lo)


def string_stats(a: PolytopePoint, label: int, swap_ties: bool = False) -> tuple[int, int]:
    """(epsilon, phi) of ``a`` at ``label`` in 0..n."""
    p = a.params
    i, n, m = p.i, p.n, p.m
    if label == 0:
        phi = a[1, n]
        eps = m - sum(a[1, j] for j in range(i, n + 1)) - sum(a[j, n] for j in range(2, i + 1))
        return eps, phi
    if label == i:
        phi = m - sum(a[j, i] for j in range(1, i)) - sum(a[i, j] for j in range(i, n + 1))
        return a[i, i], phi
    piv = pivots(a, label, swap_ties)
    if label > i:
        pp, qp = piv.p_plus, piv.q_plus
        phi = sum(a[j, label - 1] for j in range(1, pp + 1)) - sum(a[j, label] for j in range(1, pp))
        eps = sum(a[j, label] for j in range(qp, i + 1)) - sum(a[j, label - 1] for j in range(qp + 1, i + 1))
        return eps, phi
    pm, qm = piv.p_minus, piv.q_minus
    phi = sum(a[label + 1, j] for j in range(pm, n + 1)) - sum(a[label, j] for j in range(pm + 1, n + 1))
    eps = sum(a[label, j] for j in range(i, qm + 1)) - sum(a[label + 1, j] for j in range(i, qm))
    return eps, phi


def apply(a: PolytopePoint, direction: str, label: int, swap_ties: bool = False) -> Optional[PolytopePoint]:
    """e_label or f_label of ``a``; None when the governing statistic is 0."""
    p = a.params
    i, n = p.i, p.n
    if not 0 <= label <= n:
        raise ValueError(f"label {label} outside 0..{n}")
    if direction not in ("e", "f"):
        raise ValueError(f"direction must be 'e' or 'f', got {direction!r}")
    eps, phi = string_stats(a, label, swap_ties)
    lowering = direction == "f"
    if (phi if lowering else eps) == 0:
        return None
    sign = 1 if lowering else -1
    if label == 0:
        return a.replace({(1, n): -sign})
    if label == i:
        return a.replace({(i, i): sign})
    piv = pivots(a, label, swap_ties)
    if label > i:
        col = piv.p_plus if lowering else piv.q_plus
        return a.replace({(col, label - 1): -sign, (col, label): sign})
    row = piv.p_minus if lowering else piv.q_minus
    return a.replace({(label, row): sign, (label + 1, row): -sign})


def highest_weight_point(p: Params) -> PolytopePoint:
    return PolytopePoint(p, [[0] * p.i for _ in range(p.n - p.i + 1)])


def weight(a: PolytopePoint) -> tuple:
    """m omega_i minus sum of a[s, t] (e_s - e_{t+1}), as a content vector."""
    p = a.params
    wt = list(highest_weight(p))
    for t in range(p.i, p.n + 1):
        for s in range(1, p.i + 1):
            v = a[s, t]
            if v:
                root = positive_root(p.n, s, t)
                for k in range(p.n + 1):
                    wt[k] -= v * root[k]
    return tuple(wt)
