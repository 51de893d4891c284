"""Rectangular semistandard tableaux SSYT(m omega_i) as an affine crystal.

Classical operators follow the signature rule on the row reading word
(bottom row first); the affine operators are conjugates of e_1/f_1 by
Schuetzenberger promotion.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .core import Params

__all__ = [
    "Tableau",
    "TableauError",
    "highest_weight_tableau",
    "reading_word",
    "render_word",
    "signature_pairing",
    "signature_apply",
    "to_matrix",
    "from_matrix",
    "string_stats",
    "apply",
    "promotion",
    "inverse_promotion",
    "weight",
    "enumerate_tableaux",
]


class TableauError(ValueError):
    pass


class Tableau:
    """An i x m semistandard tableau with entries in [n+1].

    Instances are immutable and hashable; equality compares params and rows.
    """

    model = "tableau"
    __slots__ = ("params", "rows", "_hash")

    def __init__(self, params: Params, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        _check_semistandard(params, rows)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash((params, rows)))

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.params == other.params and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Tableau({self.rows})"

    # crystal interface, shared with PolytopePoint
    def f(self, label: int) -> Optional["Tableau"]:
        return apply(self, "f", label)

    def e(self, label: int) -> Optional["Tableau"]:
        return apply(self, "e", label)

    def phi(self, label: int) -> int:
        return string_stats(self, label)[1]

    def epsilon(self, label: int) -> int:
        return string_stats(self, label)[0]

    def weight(self):
        return weight(self)


def _check_semistandard(p: Params, rows) -> None:
    if len(rows) != p.i or any(len(r) != p.m for r in rows):
        raise TableauError(f"tableau must have shape {p.i}x{p.m}")
    for k, row in enumerate(rows):
        for v in row:
            if not 1 <= v <= p.n + 1:
                raise TableauError(f"entry {v} outside [1, {p.n + 1}]")
        for a, b in zip(row, row[1:]):
            if a > b:
                raise TableauError(f"row {k + 1} is not weakly increasing")
    for upper, lower in zip(rows, rows[1:]):
        for a, b in zip(upper, lower):
            if a >= b:
                raise TableauError("columns are not strictly increasing")


def highest_weight_tableau(p: Params) -> Tableau:
    return Tableau(p, [[j + 1] * p.m for j in range(p.i)])


def reading_word(t: Tableau) -> tuple:
    """Rows concatenated bottom to top, each read left to right."""
    return tuple(v for row in reversed(t.rows) for v in row)


def render_word(word: Sequence[int]) -> str:
    if all(v <= 9 for v in word):
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


# --- signature rule ----------------------------------------------------------

def signature_pairing(word: Sequence[int], j: int) -> tuple[list, list]:
    """Unpaired positions of ``j`` and of ``j+1`` in ``word``.

    Each j+1 is paired with the nearest unpaired j to its right, so the
    unpaired j's all sit left of the unpaired j+1's.
    """
    open_plus = []  # unpaired j+1 positions awaiting a j to their right
    unpaired_j = []
    for pos, v in enumerate(word):
        if v == j + 1:
            open_plus.append(pos)
        elif v == j:
            if open_plus:
                open_plus.pop()
            else:
                unpaired_j.append(pos)
    return unpaired_j, open_plus


def signature_apply(word: Sequence[int], direction: str, j: int) -> Optional[tuple]:
    """Apply f_j or e_j to a word by the signature rule; None if annihilated."""
    unpaired_j, unpaired_j1 = signature_pairing(word, j)
    w = list(word)
    if direction == "f":
        if not unpaired_j:
            return None
        w[unpaired_j[-1]] = j + 1
    elif direction == "e":
        if not unpaired_j1:
            return None
        w[unpaired_j1[0]] = j
    else:
        raise ValueError(f"direction must be 'e' or 'f', got {direction!r}")
    return tuple(w)


def _from_reading_word(p: Params, word) -> Tableau:
    rows = [tuple(word[k * p.m:(k + 1) * p.m]) for k in range(p.i)]
    return Tableau(p, list(reversed(rows)))


# --- matrix encoding ---------------------------------------------------------

def to_matrix(t: Tableau) -> tuple:
    """Row s, column c counts the value s+c-1 in row s (all 1-based)."""
    p = t.params
    width = p.n + 2 - p.i
    out = []
    for s, row in enumerate(t.rows, start=1):
        counts = [0] * width
        for v in row:
            counts[v - s] += 1
        out.append(tuple(counts))
    return tuple(out)


def from_matrix(matrix: Sequence[Sequence[int]], p: Params) -> Tableau:
    width = p.n + 2 - p.i
    if len(matrix) != p.i or any(len(r) != width for r in matrix):
        raise TableauError(f"matrix must be {p.i}x{width}")
    rows = []
    for s, counts in enumerate(matrix, start=1):
        if any(c < 0 for c in counts):
            raise TableauError("negative multiplicity")
        if sum(counts) != p.m:
            raise TableauError(f"row {s} of the matrix sums to {sum(counts)}, expected m={p.m}")
        rows.append([s + c for c, k in enumerate(counts) for _ in range(k)])
    return Tableau(p, rows)


# --- promotion ---------------------------------------------------------------

def _slide_holes(grid, holes, toward_origin: bool):
    """Jeu-de-taquin each hole in turn until it reaches the chosen corner."""
    rows, cols = len(grid), len(grid[0])
    for r, c in holes:
        while True:
            if toward_origin:
                up = grid[r - 1][c] if r > 0 else None
                left = grid[r][c - 1] if c > 0 else None
                if up is None and left is None:
                    break
                # ties go vertical to keep columns strict
                if left is None or (up is not None and up >= left):
                    grid[r][c], grid[r - 1][c] = up, None
                    r -= 1
                else:
                    grid[r][c], grid[r][c - 1] = left, None
                    c -= 1
            else:
                down = grid[r + 1][c] if r + 1 < rows else None
                right = grid[r][c + 1] if c + 1 < cols else None
                if down is None and right is None:
                    break
                if right is None or (down is not None and down <= right):
                    grid[r][c], grid[r + 1][c] = down, None
                    r += 1
                else:
                    grid[r][c], grid[r][c + 1] = right, None
                    c += 1
    return grid


def promotion(t: Tableau) -> Tableau:
    """Remove n+1's, slide the holes to the top-left, fill with 0, add 1."""
    p = t.params
    top = p.n + 1
    grid = [[None if v == top else v for v in row] for row in t.rows]
    holes = [(r, c) for r in range(p.i) for c in range(p.m) if grid[r][c] is None]
    _slide_holes(grid, holes, toward_origin=True)
    return Tableau(p, [[1 if v is None else v + 1 for v in row] for row in grid])


def inverse_promotion(t: Tableau) -> Tableau:
    """Remove 1's, slide the holes to the bottom-right, fill with n+2, subtract 1."""
    p = t.params
    grid = [[None if v == 1 else v for v in row] for row in t.rows]
    holes = [(r, c) for r in range(p.i) for c in range(p.m) if grid[r][c] is None]
    _slide_holes(grid, reversed(holes), toward_origin=False)
    return Tableau(p, [[p.n + 1 if v is None else v - 1 for v in row] for row in grid])


# --- crystal structure -------------------------------------------------------

def string_stats(t: Tableau, label: int) -> tuple[int, int]:
    """(epsilon, phi) at ``label``; label 0 is read off promotion at node 1."""
    if label == 0:
        return string_stats(promotion(t), 1)
    _check_label(t.params, label)
    unpaired_j, unpaired_j1 = signature_pairing(reading_word(t), label)
    return len(unpaired_j1), len(unpaired_j)


def apply(t: Tableau, direction: str, label: int) -> Optional[Tableau]:
    """e_label or f_label of ``t``; None when annihilated."""
    if label == 0:
        image = apply(promotion(t), direction, 1)
        return None if image is None else inverse_promotion(image)
    _check_label(t.params, label)
    word = signature_apply(reading_word(t), direction, label)
    return None if word is None else _from_reading_word(t.params, word)


def _check_label(p: Params, label: int) -> None:
    if not 0 <= label <= p.n:
        raise ValueError(f"label {label} outside 0..{p.n}")


def weight(t: Tableau) -> tuple:
    counts = [0] * (t.params.n + 1)
    for row in t.rows:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)


def enumerate_tableaux(p: Params) -> Iterator[Tableau]:
    """All of SSYT(m omega_i), by brute-force row-by-row filling."""

    def rows_above(prev):
        # weakly increasing rows strictly above ``prev`` column-wise
        def build(c, lo, acc):
            if c == p.m:
                yield tuple(acc)
                return
            floor = max(lo, prev[c] + 1 if prev else 1)
            for v in range(floor, p.n + 2):
                acc.append(v)
                yield from build(c + 1, v, acc)
                acc.pop()

        yield from build(0, 1, [])

    def fill(k, acc):
        if k == p.i:
            yield Tableau(p, acc)
            return
        for row in rows_above(acc[-1] if acc else None):
            yield from fill(k + 1, acc + [row])

    yield from fill(0, [])
