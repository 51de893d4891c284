"""Step-path statistics of a polytope point for a pair of adjacent columns.

For a column s < i, the step path p_{s,r} runs down column s from row i to
row r and then down column s+1 from row r to row n.  Its sums S(r), their
record rows R and the increments x(r) describe exactly where f_s acts
when it is applied phi_s times.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polytope import PolytopePoint, apply, string_stats

__all__ = ["StatBundle", "step_path_sum", "stat_bundle", "saturate", "saturate_closed_form"]


@dataclass(frozen=True)
class StatBundle:
    s: int
    S: dict
    M: int
    R: tuple
    x: dict

    @property
    def ell(self) -> int:
        """Index of the last record row, so that R[ell] == n."""
        return len(self.R) - 1

    def as_json(self) -> dict:
        return {
            "s": self.s,
            "S": {str(r): v for r, v in self.S.items()},
            "M": self.M,
            "R": list(self.R),
            "x": {str(r): v for r, v in self.x.items()},
            "ell": self.ell,
        }


def _check_column(a: PolytopePoint, s: int) -> None:
    if not 1 <= s < a.params.i:
        raise ValueError(f"column s={s} must satisfy 1 <= s < i={a.params.i}")


def step_path_sum(a: PolytopePoint, s: int, r: int) -> int:
    p = a.params
    _check_column(a, s)
    if not p.i <= r <= p.n:
        raise ValueError(f"row r={r} must lie in {p.i}..{p.n}")
    return sum(a[s, t] for t in range(p.i, r + 1)) + sum(a[s + 1, t] for t in range(r, p.n + 1))


def stat_bundle(a: PolytopePoint, s: int) -> StatBundle:
    """S, M, the record rows R and the x-values for column ``s``."""
    _check_column(a, s)
    p = a.params
    i, n = p.i, p.n
    # S(r) = prefix of column s through r + suffix of column s+1 from r
    S = {}
    down = 0
    up = sum(a[s + 1, t] for t in range(i, n + 1))
    for r in range(i, n + 1):
        down += a[s, r]
        S[r] = down + up
        up -= a[s + 1, r]
    M = max(S.values())

    R = [i - 1]
    while R[-1] < n:
        tail = range(R[-1] + 1, n + 1)
        best = max(S[r] for r in tail)
        R.append(max(r for r in tail if S[r] == best))

    x = {r: 0 for r in range(i, n + 1)}
    for k in range(1, len(R) - 1):
        x[R[k]] = S[R[k]] - S[R[k + 1]]
    x[n] = a[s + 1, n]
    return StatBundle(s=s, S=S, M=M, R=tuple(R), x=x)


def saturate_closed_form(a: PolytopePoint, s: int) -> PolytopePoint:
    """f_s^{phi_s}(a) read off the x-values: column s gains x, column s+1 loses it."""
    b = stat_bundle(a, s)
    changes = {}
    for r, v in b.x.items():
        if v:
            changes[s, r] = v
            changes[s + 1, r] = -v
    return a.replace(changes)


def saturate(a: PolytopePoint, s: int) -> PolytopePoint:
    """Apply f_s exactly phi_s times, asserting agreement with the closed form."""
    _check_column(a, s)
    cur = a
    for _ in range(string_stats(a, s)[1]):
        cur = apply(cur, "f", s)
    closed = saturate_closed_form(a, s)
    if cur != closed:
        raise AssertionError(f"closed form {closed} disagrees with iteration {cur}")
    return cur
