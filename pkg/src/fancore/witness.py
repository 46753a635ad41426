"""Constructing graphs whose t-core is prescribed and whose fan number is large.

Given a host graph h with corefan(h) > t, build a graph G whose t-core is
exactly h and in which the subgraph J induced on V(K) and the attached
vertex set S (K being a corefan witness) has fan degree above
max_degree(G) + t on every edge. That per-edge certificate is checked
directly; fan(G) itself is never enumerated on these graphs (the subgraph
space is astronomically large), exactly mirroring how the lower bound is
established in the first place.

The build is staged. Parameters D (the target degree of every h-vertex)
and r (the pendant multiplicity scale) are the lexicographically smallest
pair satisfying

  (a) r >= max_degree(h) + 6 + t,
  (b) r even,
  (c) D >= 3r + t,
  (d) D >= max_degree(h) + 2r^2,
  (e) D + t = m(r - 1) with m even, m >= 4.

Stage 1 attaches pendant classes of multiplicity r and r-1 from each K
vertex to fresh vertices (the sets S_r and S_{r-1}), raising every K vertex
to degree D. The count split per vertex comes from writing
D - deg_h(x_i) = a_r * r + a_{r-1} * (r - 1) with a_r in [0, r-1]; when the
total of the a_r is odd, the first vertex's split is shifted by
(+(r-1), -r), which flips the parity without changing the sum. Stage 2
overlays a reg_k-regular circulant on S, reg_k = (D+t)/(r-1) - 2, with a
planted perfect matching on S_r; matching edges get multiplicity r-3 and the
rest r-1, leaving S_{r-1} vertices at degree D-(r-1)+t and S_r vertices at
D-r+t, so every S vertex lands exactly on the t-core threshold without
crossing it. Stage 3 tops up each vertex of V(h) - V(K) to degree D with
one pendant class of multiplicity r-1 plus single-copy pendants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import t_core
from .errors import GraphError
from .fanmetrics import COREFAN_CLASS_CAP, cfan_degree, corefan, fan_pair_exceeds
from .multigraph import Multigraph, SubgraphSelection


def _circulant_pairs(n: int, k: int) -> list[tuple[int, int]]:
    """Index pairs of the distance-set circulant: i adjacent to i +- 1..k/2."""
    pairs = set()
    for d in range(1, k // 2 + 1):
        for i in range(n):
            j = (i + d) % n
            pairs.add((i, j) if i < j else (j, i))
    return sorted(pairs)


def circulant_with_matching(n: int, k: int, r: int) -> tuple[Multigraph, tuple[str, ...]]:
    """k-regular simple circulant on n vertices with a matched r-set.

    Requires k and r even, 2 <= r <= n, 2 <= k < n. Vertices are labelled
    c0..c{n-1}; the returned set S_r is the first r labels, whose induced
    subgraph contains the perfect matching (c0,c1), (c2,c3), ... realized by
    distance-1 circulant edges.
    """
    for name, val in (("n", n), ("k", k), ("r", r)):
        if not isinstance(val, int) or val < 1:
            raise GraphError(f"{name} must be a positive integer, got {val!r}")
    if k % 2 or r % 2:
        raise GraphError(f"k and r must be even, got k={k}, r={r}")
    if k < 2 or r < 2:
        raise GraphError("k and r must be at least 2")
    if r > n:
        raise GraphError(f"r={r} exceeds the vertex count n={n}")
    if k >= n:
        raise GraphError(f"regular degree k={k} needs more than k vertices, got n={n}")
    labels = [f"c{i}" for i in range(n)]
    edges = [(labels[i], labels[j], 1) for i, j in _circulant_pairs(n, k)]
    return Multigraph(labels, edges), tuple(labels[:r])


@dataclass(frozen=True)
class ConstructionPlan:
    """Everything needed to rebuild or verify a constructed witness graph."""

    t: int
    D: int
    r: int
    reg_k: int
    k_vertices: tuple[str, ...]
    a_r: tuple[int, ...]
    a_rm1: tuple[int, ...]
    s_r_vertices: tuple[str, ...]
    s_rm1_vertices: tuple[str, ...]
    matching: tuple[tuple[str, str], ...]

    @property
    def s_r(self) -> int:
        return len(self.s_r_vertices)

    @property
    def s_rm1(self) -> int:
        return len(self.s_rm1_vertices)

    @property
    def s_vertices(self) -> tuple[str, ...]:
        return self.s_r_vertices + self.s_rm1_vertices


def _fresh_prefix(labels) -> str:
    """Shortest underscore prefix making the generated label families fresh."""
    prefix = ""
    while True:
        pattern = re.compile(re.escape(prefix) + r"(sr|sq|px)\d+$")
        if not any(pattern.fullmatch(label) for label in labels):
            return prefix
        prefix += "_"


def _validate_witness_subgraph(h: Multigraph, k_sel: SubgraphSelection, t: int) -> None:
    if k_sel.parent is not h and k_sel.parent != h:
        raise GraphError("witness subgraph does not belong to the host graph")
    if not k_sel.has_edges():
        raise GraphError("witness subgraph must contain an edge")
    incident = set()
    for (i, j) in k_sel.pairs:
        incident.add(i)
        incident.add(j)
    if set(k_sel.mask) != incident:
        raise GraphError("witness subgraph must have no isolated vertices")
    labels = h.labels
    for (i, j) in k_sel.pairs:
        for x, y in ((i, j), (j, i)):
            value, _ = cfan_degree(h, k_sel, labels[x], labels[y])
            if value <= t:
                raise GraphError(
                    f"witness subgraph has cfan degree {value} <= t on "
                    f"({labels[x]!r},{labels[y]!r}); it certifies nothing"
                )


def choose_params(h: Multigraph, t: int, k_sel: SubgraphSelection) -> ConstructionPlan:
    """Pick minimal (r, D), the per-vertex splits, and the fresh vertex names."""
    if not isinstance(t, int) or t < 0:
        raise GraphError(f"t must be a nonnegative integer, got {t!r}")
    _validate_witness_subgraph(h, k_sel, t)

    delta = h.max_degree()
    r = delta + 6 + t
    if r % 2:
        r += 1
    d_min = max(3 * r + t, delta + 2 * r * r)
    m = -(-(d_min + t) // (r - 1))  # ceil division
    if m < 4:
        m = 4
    if m % 2:
        m += 1
    D = m * (r - 1) - t

    k_vertices = tuple(h.labels[i] for i in sorted(k_sel.mask))
    a_r: list[int] = []
    a_rm1: list[int] = []
    for x in k_vertices:
        d_i = D - h.degree(x)
        alpha, beta = divmod(d_i, r - 1)
        a_r.append(beta)
        a_rm1.append(alpha - beta)
    if any(v < r for v in a_rm1):
        raise RuntimeError("parameter choice broke the split lower bound")
    if sum(a_r) % 2:
        a_r[0] += r - 1
        a_rm1[0] -= r

    prefix = _fresh_prefix(h.labels)
    s_r_vertices = tuple(f"{prefix}sr{i}" for i in range(sum(a_r)))
    s_rm1_vertices = tuple(f"{prefix}sq{i}" for i in range(sum(a_rm1)))
    matching = tuple(
        (s_r_vertices[2 * j], s_r_vertices[2 * j + 1]) for j in range(len(s_r_vertices) // 2)
    )

    reg_k = (D + t) // (r - 1) - 2
    s = len(s_r_vertices) + len(s_rm1_vertices)
    if reg_k % 2 or reg_k < 2 or s <= reg_k:
        raise RuntimeError("parameter choice broke the circulant preconditions")

    return ConstructionPlan(
        t=t,
        D=D,
        r=r,
        reg_k=reg_k,
        k_vertices=k_vertices,
        a_r=tuple(a_r),
        a_rm1=tuple(a_rm1),
        s_r_vertices=s_r_vertices,
        s_rm1_vertices=s_rm1_vertices,
        matching=matching,
    )


def _build(h: Multigraph, plan: ConstructionPlan) -> Multigraph:
    D, r = plan.D, plan.r
    vertices = list(h.labels) + list(plan.s_vertices)
    edges: list[tuple[str, str, int]] = list(h.classes())

    # Stage 1: pendant classes from K vertices into S_r and S_{r-1}.
    off_r = 0
    off_q = 0
    for idx, x in enumerate(plan.k_vertices):
        for _ in range(plan.a_r[idx]):
            edges.append((x, plan.s_r_vertices[off_r], r))
            off_r += 1
        for _ in range(plan.a_rm1[idx]):
            edges.append((x, plan.s_rm1_vertices[off_q], r - 1))
            off_q += 1

    # Stage 2: regular circulant on S, matching edges thinned to r-3.
    s_order = plan.s_vertices
    matched = {frozenset(p) for p in plan.matching}
    for i, j in _circulant_pairs(len(s_order), plan.reg_k):
        u, v = s_order[i], s_order[j]
        m = r - 3 if frozenset((u, v)) in matched else r - 1
        edges.append((u, v, m))

    # Stage 3: top up the remaining h vertices with fresh pendants.
    counter = 0
    prefix = _fresh_prefix(h.labels)
    in_k = set(plan.k_vertices)
    for v in h.labels:
        if v in in_k:
            continue
        need = D - h.degree(v)
        edges.append((v, f"{prefix}px{counter}", r - 1))
        counter += 1
        for _ in range(need - (r - 1)):
            edges.append((v, f"{prefix}px{counter}", 1))
            counter += 1

    return Multigraph(vertices, edges)


def construct_witness(
    h: Multigraph, t: int, max_classes: int = COREFAN_CLASS_CAP
) -> tuple[Multigraph, ConstructionPlan]:
    """Build a graph with t-core h and certified fan(G) > max_degree(G) + t.

    Raises GraphError (carrying the corefan value) when corefan(h) <= t; no
    such graph exists then, so the precondition is sharp.
    """
    report = corefan(h, max_classes=max_classes)
    if report.value <= t:
        raise GraphError(
            f"corefan of the host graph is {report.value}, not above t={t}; "
            f"every graph with this t-core has Fan <= max_degree + t"
        )
    k_sel = report.witness.strip_isolated()
    plan = choose_params(h, t, k_sel)
    return _build(h, plan), plan


def verify_witness(
    h: Multigraph, t: int, g: Multigraph, plan: ConstructionPlan, max_diagnostics: int = 40
) -> tuple[bool, list[str]]:
    """Polynomial check that g certifies the construction's two claims.

    Four checks, none of which enumerate subgraphs: (1) max_degree(g) = D,
    attained exactly on V(h); (2) the t-core of g equals h, multiplicities
    included; (3) the S vertices hit their exact degree targets; (4) on the
    subgraph J induced by V(K) and S, both fan-degree conditions fail at
    level D + t for every ordered pair on an edge, so every edge of J has
    fan degree above D + t and hence fan(g) > max_degree(g) + t.
    """
    diags: list[str] = []

    def record(msg: str) -> bool:
        if len(diags) < max_diagnostics:
            diags.append(msg)
        return len(diags) < max_diagnostics

    D, r = plan.D, plan.r

    if g.max_degree() != D:
        record(f"degree: max degree is {g.max_degree()}, expected D={D}")
    want_top = set(h.labels)
    got_top = {v for v in g.labels if g.degree(v) == D}
    if got_top != want_top:
        extra = sorted(got_top - want_top)[:3]
        missing = sorted(want_top - got_top)[:3]
        record(f"degree: degree-D vertex set mismatch (extra={extra}, missing={missing})")

    core = t_core(g, t)
    if core != h:
        record("core: the t-core of the constructed graph is not the host graph")

    unknown = [
        v
        for v in plan.k_vertices + plan.s_vertices
        if not g.has_vertex(v)
    ]
    if unknown:
        record(f"plan: vertices {unknown[:3]} are not in the graph")
        return False, diags

    for v in plan.s_rm1_vertices:
        if g.degree(v) != D - (r - 1) + t:
            if not record(f"s-degrees: {v} has degree {g.degree(v)}, expected {D - (r - 1) + t}"):
                break
    for v in plan.s_r_vertices:
        if g.degree(v) != D - r + t:
            if not record(f"s-degrees: {v} has degree {g.degree(v)}, expected {D - r + t}"):
                break

    j_graph = g.induced(tuple(plan.k_vertices) + plan.s_vertices)
    level = D + t
    for u, v, _ in j_graph.classes():
        for x, y in ((u, v), (v, u)):
            exceeds, _ = fan_pair_exceeds(j_graph, x, y, level)
            if not exceeds:
                if not record(f"edge-certificate: fan degree of ({x},{y}) is not above {level}"):
                    break
        else:
            continue
        break

    return not diags, diags


# -- plan sidecar text ----------------------------------------------------

_INT_KEYS = ("t", "D", "r", "reg_k")
_LIST_KEYS = ("k_vertices", "a_r", "a_rm1", "s_r", "s_rm1", "matching")


def plan_to_text(plan: ConstructionPlan) -> str:
    flat_matching = " ".join(f"{u} {v}" for u, v in plan.matching)
    lines = [
        f"t={plan.t}",
        f"D={plan.D}",
        f"r={plan.r}",
        f"reg_k={plan.reg_k}",
        f"k_vertices={' '.join(plan.k_vertices)}",
        f"a_r={' '.join(map(str, plan.a_r))}",
        f"a_rm1={' '.join(map(str, plan.a_rm1))}",
        f"s_r={' '.join(plan.s_r_vertices)}",
        f"s_rm1={' '.join(plan.s_rm1_vertices)}",
        f"matching={flat_matching}",
    ]
    return "\n".join(lines) + "\n"


def plan_from_text(text: str) -> ConstructionPlan:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise GraphError(f"plan line {lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    missing = [k for k in _INT_KEYS + _LIST_KEYS if k not in values]
    if missing:
        raise GraphError(f"plan is missing keys: {', '.join(missing)}")
    try:
        ints = {k: int(values[k]) for k in _INT_KEYS}
    except ValueError as exc:
        raise GraphError(f"plan has a non-integer scalar: {exc}") from None
    try:
        a_r = tuple(int(x) for x in values["a_r"].split())
        a_rm1 = tuple(int(x) for x in values["a_rm1"].split())
    except ValueError as exc:
        raise GraphError(f"plan has a non-integer split: {exc}") from None
    flat = values["matching"].split()
    if len(flat) % 2:
        raise GraphError("plan matching must list an even number of labels")
    return ConstructionPlan(
        t=ints["t"],
        D=ints["D"],
        r=ints["r"],
        reg_k=ints["reg_k"],
        k_vertices=tuple(values["k_vertices"].split()),
        a_r=a_r,
        a_rm1=a_rm1,
        s_r_vertices=tuple(values["s_r"].split()),
        s_rm1_vertices=tuple(values["s_rm1"].split()),
        matching=tuple((flat[i], flat[i + 1]) for i in range(0, len(flat), 2)),
    )
