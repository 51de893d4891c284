"""Crystal graphs of both models, the transported isomorphism and the check suite."""

from __future__ import annotations

import itertools
import json
import time
from collections import deque
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Iterator, Optional

from . import polytope, tableau
from .core import Params, encode_element, hook_content_count, pairing
from .words import (
    apply_word,
    explicit_image_large_i,
    explicit_image_small_i,
    omega_identity_gap,
    sigma_identity_gap,
    word_full_path,
    word_P_small_i,
    word_Q_large_i,
)

__all__ = [
    "CrystalGraph",
    "Mismatch",
    "build_graph",
    "transport_iso",
    "image_of",
    "graphs_isomorphic",
    "dual_graph",
    "find_label_permutations",
    "to_dot",
    "to_json",
    "CheckResult",
    "verify_params",
    "verify_suite",
    "param_range",
]


@dataclass
class CrystalGraph:
    """Labeled digraph with an edge x -l-> y whenever f_l(x) = y.

    ``vertices`` are numbered in first-visit order; ``weights`` are content
    vectors (negated for a dual graph).
    """

    params: Params
    model: str
    vertices: list
    edges: list
    root: int
    weights: list
    affine: bool = False
    dual: bool = False
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index = {v: k for k, v in enumerate(self.vertices)}

    def index(self, element) -> int:
        return self._index[element]

    @property
    def labels(self) -> list:
        return sorted({lab for _, lab, _ in self.edges})

    def successors(self) -> dict:
        """(vertex, label) -> vertex along f-edges."""
        return {(s, lab): d for s, lab, d in self.edges}

    def predecessors(self) -> dict:
        return {(d, lab): s for s, lab, d in self.edges}

    def label_counts(self) -> dict:
        counts = {}
        for _, lab, _ in self.edges:
            counts[lab] = counts.get(lab, 0) + 1
        return counts


def _operators(model: str, swap_ties: bool = False) -> Callable:
    if model == "tableau":
        if swap_ties:
            raise ValueError("tie-breaking mutation only applies to the polytope model")
        return tableau.apply
    if model == "polytope":
        return partial(polytope.apply, swap_ties=swap_ties) if swap_ties else polytope.apply
    raise ValueError(f"unknown model {model!r}")


def _root(p: Params, model: str):
    if model == "tableau":
        return tableau.highest_weight_tableau(p)
    return polytope.highest_weight_point(p)


def build_graph(p: Params, model: str, include_affine: bool = False, swap_ties: bool = False) -> CrystalGraph:
    """Closure of the highest weight element under every e_l and f_l (BFS).

    Vertices are deduplicated by their serialized form so the numbering is
    reproducible.  ``swap_ties`` builds the polytope graph with the pivot
    tie-breaking reversed (a deliberate mutation used by the suite).
    """
    step = _operators(model, swap_ties)
    labels = list(p.labels) if include_affine else list(p.classical_labels)
    start = _root(p, model)
    seen = {encode_element(start): 0}
    vertices = [start]
    edges = set()
    queue = deque([start])
    while queue:
        x = queue.popleft()
        kx = seen[encode_element(x)]
        for lab in labels:
            for direction in ("f", "e"):
                y = step(x, direction, lab)
                if y is None:
                    continue
                key = encode_element(y)
                if key not in seen:
                    seen[key] = len(vertices)
                    vertices.append(y)
                    queue.append(y)
                ky = seen[key]
                edges.add((kx, lab, ky) if direction == "f" else (ky, lab, kx))
    return CrystalGraph(
        params=p,
        model=model,
        vertices=vertices,
        edges=sorted(edges),
        root=0,
        weights=[v.weight() for v in vertices],
        affine=include_affine,
    )


def image_of(a: polytope.PolytopePoint) -> tableau.Tableau:
    """Tableau matched with ``a`` by replaying its path word from T^(0)."""
    word = word_full_path(a)
    img = apply_word(word, tableau.highest_weight_tableau(a.params))
    if img is None:
        raise RuntimeError(f"path word for {a} annihilated the highest weight tableau")
    return img


def transport_iso(p: Params) -> dict:
    return {a: image_of(a) for a in polytope.enumerate_points(p)}


@dataclass(frozen=True)
class Mismatch:
    vertex: Optional[int]
    label: Optional[int]
    reason: str


def graphs_isomorphic(g1: CrystalGraph, g2: CrystalGraph, relabel: Optional[dict] = None):
    """Root-anchored propagation along labeled edges.

    ``relabel`` maps labels of ``g1`` to labels of ``g2``.  Returns
    ``(True, vertex_map)`` or ``(False, Mismatch)``.
    """
    relabel = relabel or {}
    if len(g1.vertices) != len(g2.vertices):
        return False, Mismatch(None, None, f"vertex counts differ: {len(g1.vertices)} vs {len(g2.vertices)}")
    if len(g1.edges) != len(g2.edges):
        return False, Mismatch(None, None, f"edge counts differ: {len(g1.edges)} vs {len(g2.edges)}")
    succ1, pred1 = g1.successors(), g1.predecessors()
    succ2, pred2 = g2.successors(), g2.predecessors()
    labels = sorted({lab for _, lab, _ in g1.edges})
    mapping = {g1.root: g2.root}
    used = {g2.root}
    queue = deque([g1.root])
    while queue:
        v = queue.popleft()
        w = mapping[v]
        for lab in labels:
            lab2 = relabel.get(lab, lab)
            for table1, table2 in ((succ1, succ2), (pred1, pred2)):
                a = table1.get((v, lab))
                b = table2.get((w, lab2))
                if (a is None) != (b is None):
                    return False, Mismatch(v, lab, "edge present in one graph only")
                if a is None:
                    continue
                if a in mapping:
                    if mapping[a] != b:
                        return False, Mismatch(v, lab, "edge targets disagree")
                    continue
                if b in used:
                    return False, Mismatch(v, lab, "map is not injective")
                mapping[a] = b
                used.add(b)
                queue.append(a)
    if len(mapping) != len(g1.vertices):
        missing = min(set(range(len(g1.vertices))) - set(mapping))
        return False, Mismatch(missing, None, "vertex unreachable from the root")
    return True, mapping


def dual_graph(g: CrystalGraph) -> CrystalGraph:
    """Reverse every arrow, keep labels, negate weights.

    The root becomes the vertex with no incoming classical edge, which is
    the lowest weight vertex of ``g``.
    """
    edges = sorted((d, lab, s) for s, lab, d in g.edges)
    has_incoming = {d for _, lab, d in edges if lab != 0}
    sources = [v for v in range(len(g.vertices)) if v not in has_incoming]
    if len(sources) != 1:
        raise ValueError(f"expected one classical source in the dual, found {len(sources)}")
    return CrystalGraph(
        params=g.params,
        model=g.model,
        vertices=list(g.vertices),
        edges=edges,
        root=sources[0],
        weights=[tuple(-c for c in w) for w in g.weights],
        affine=g.affine,
        dual=not g.dual,
    )


def find_label_permutations(g1: CrystalGraph, g2: CrystalGraph) -> list:
    """Every permutation of the classical labels under which g1 and g2 match."""
    n = g1.params.n
    found = []
    for perm in itertools.permutations(range(1, n + 1)):
        relabel = dict(zip(range(1, n + 1), perm))
        relabel[0] = 0
        if graphs_isomorphic(g1, g2, relabel)[0]:
            found.append(relabel)
    return found


# --- export ------------------------------------------------------------------

def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: CrystalGraph) -> Iterator[str]:
    """DOT lines; affine edges are dashed."""
    yield "digraph crystal {"
    for k, v in enumerate(g.vertices):
        yield f'  {k} [label="{_dot_escape(encode_element(v))}"];'
    for s, lab, d in g.edges:
        style = ", style=dashed" if lab == 0 else ""
        yield f"  {s} -> {d} [label={lab}{style}];"
    yield "}"


def to_json(g: CrystalGraph) -> Iterator[str]:
    """The JSON document {vertices, edges, root}, emitted in chunks."""
    yield '{"vertices":['
    for k, v in enumerate(g.vertices):
        yield ("," if k else "") + encode_element(v)
    yield '],"edges":'
    yield json.dumps([list(e) for e in g.edges], separators=(",", ":"))
    yield f',"root":{g.root}}}'


# --- verification suite ------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    params: Params
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        p = self.params
        text = f"{tag} {self.name} (n={p.n}, i={p.i}, m={p.m})"
        return text + (f": {self.detail}" if self.detail else "")


def _check_crystal_axioms(elements: list, p: Params) -> Optional[str]:
    """Seminormality, membership closure and e/f inverse pairing."""
    universe = set(elements)
    for x in elements:
        wt = x.weight()
        for lab in p.labels:
            eps, phi = x.epsilon(lab), x.phi(lab)
            if phi - eps != pairing(wt, lab):
                return f"phi-eps != <wt, alpha^vee> at {x}, label {lab}"
            for direction, stat, back in (("f", phi, "e"), ("e", eps, "f")):
                y = getattr(x, direction)(lab)
                if (y is None) != (stat == 0):
                    return f"{direction}_{lab} annihilation disagrees with its statistic at {x}"
                if y is None:
                    continue
                if y not in universe:
                    return f"{direction}_{lab}({x}) = {y} left the crystal"
                if getattr(y, back)(lab) != x:
                    return f"{back}_{lab} does not undo {direction}_{lab} at {x}"
    return None


def _run_check(name: str, p: Params, fn) -> CheckResult:
    try:
        detail = fn()
    except Exception as exc:  # failures are report content
        return CheckResult(name, p, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, p, detail is None, detail or "")


def verify_params(p: Params, swap_ties: bool = False) -> list:
    """All checks for one parameter triple."""
    results = []
    points = list(polytope.enumerate_points(p))
    tabs = list(tableau.enumerate_tableaux(p))
    zero = polytope.highest_weight_point(p)
    t0 = tableau.highest_weight_tableau(p)

    def cardinality():
        expected = hook_content_count(p)
        if len(points) != expected or len(tabs) != expected:
            return f"|B|={len(points)}, |SSYT|={len(tabs)}, hook-content={expected}"
        return None

    results.append(_run_check("cardinality", p, cardinality))
    results.append(_run_check("polytope axioms", p, lambda: _check_crystal_axioms(points, p)))
    results.append(_run_check("tableau axioms", p, lambda: _check_crystal_axioms(tabs, p)))

    def full_path():
        for a in points:
            got = apply_word(word_full_path(a), zero)
            if got != a:
                return f"path word for {a} reached {got}"
        return None

    results.append(_run_check("full path word", p, full_path))

    images = {}

    def transport():
        for a in points:
            img = image_of(a)
            if img.weight() != a.weight():
                return f"weight mismatch at {a}"
            images[a] = img
        if len(set(images.values())) != len(points):
            return "transported map is not injective"
        for a, img in images.items():
            for lab in p.labels:
                for direction in ("e", "f"):
                    y = getattr(a, direction)(lab)
                    z = getattr(img, direction)(lab)
                    if (y is None) != (z is None) or (y is not None and images[y] != z):
                        return f"transport does not commute with {direction}_{lab} at {a}"
        return None

    results.append(_run_check("transport isomorphism", p, transport))

    if p.i <= 2:
        def small():
            for a in points:
                w = word_P_small_i(a)
                if not w.lowering_only or apply_word(w, zero) != a:
                    return f"lowering word fails at {a}"
                if apply_word(w, t0) != images.get(a, image_of(a)):
                    return f"lowering word image differs from transport at {a}"
                if explicit_image_small_i(a) != images.get(a, image_of(a)):
                    return f"explicit image differs from transport at {a}"
                if any(sigma_identity_gap(a, k) for k in range(2, p.n + 1)):
                    return f"Sigma identity fails at {a}"
            return None

        results.append(_run_check("lowering path and explicit image (i <= 2)", p, small))
    if p.i >= p.n - 1:
        def large():
            for a in points:
                w = word_Q_large_i(a)
                if not w.lowering_only or apply_word(w, zero) != a:
                    return f"lowering word fails at {a}"
                if apply_word(w, t0) != images.get(a, image_of(a)):
                    return f"lowering word image differs from transport at {a}"
                if explicit_image_large_i(a) != images.get(a, image_of(a)):
                    return f"explicit image differs from transport at {a}"
                if any(omega_identity_gap(a, k) for k in range(2, p.n)):
                    return f"Omega identity fails at {a}"
            return None

        results.append(_run_check("lowering path and explicit image (i >= n-1)", p, large))

    def graph_iso():
        gp = build_graph(p, "polytope", include_affine=True, swap_ties=swap_ties)
        gt = build_graph(p, "tableau", include_affine=True)
        ok, info = graphs_isomorphic(gp, gt)
        if not ok:
            return f"{info.reason} (vertex {info.vertex}, label {info.label})"
        return None

    results.append(_run_check("affine graph isomorphism", p, graph_iso))
    return results


def param_range(n_max: int, m_max: int) -> Iterator[Params]:
    for n in range(1, n_max + 1):
        for i in range(1, n + 1):
            for m in range(1, m_max + 1):
                yield Params(n, i, m)


def verify_suite(params: Iterable[Params], swap_ties: bool = False) -> list:
    """Run every check over ``params``; returns a flat list of CheckResult."""
    report = []
    for p in params:
        report.extend(verify_params(p, swap_ties=swap_ties))
    return report


def timed_verify(params: Iterable[Params]) -> tuple:
    start = time.perf_counter()
    report = verify_suite(params)
    return report, time.perf_counter() - start
