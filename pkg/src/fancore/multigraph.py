"""Loopless multigraph values with multiplicity arithmetic and text I/O.

Vertices are arbitrary string labels mapped to dense integer indices in
insertion order; every deterministic ordering in this package is the dense
index order. Parallel edges are a multiplicity counter per unordered vertex
pair, never individual edge objects. Multigraph and SubgraphSelection values
are immutable after construction, so they are safe to share between threads;
all operations here are pure functions of their inputs.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import GraphError, ParseError

_RESERVED = "vertex"


def _checked_label(label) -> str:
    if not isinstance(label, str) or not label:
        raise GraphError(f"vertex label must be a non-empty string, got {label!r}")
    if label == _RESERVED:
        raise GraphError("'vertex' is a reserved word in the text format and cannot name a vertex")
    if "#" in label or any(ch.isspace() for ch in label):
        raise GraphError(f"vertex label {label!r} may not contain whitespace or '#'")
    return label


class Multigraph:
    """An immutable loopless multigraph.

    Construction takes an ordered iterable of vertex labels plus an iterable
    of parallel classes ``(u, v, multiplicity)``. Endpoints not already
    declared are appended in order of first appearance. Declaring the same
    unordered pair twice is an error (summing silently would hide fixture
    typos), as are loops and non-positive multiplicities.
    """

    __slots__ = ("labels", "_index", "_pairs", "adj", "deg", "_hash")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str, int]] = ()):
        labels: list[str] = []
        index: dict[str, int] = {}

        def intern(label: str) -> int:
            got = index.get(label)
            if got is None:
                _checked_label(label)
                got = index[label] = len(labels)
                labels.append(label)
            return got

        for label in vertices:
            if label in index:
                raise GraphError(f"duplicate vertex {label!r}")
            intern(label)

        pairs: dict[tuple[int, int], int] = {}
        for u, v, m in edges:
            if not isinstance(m, int) or m < 1:
                raise GraphError(f"multiplicity of {u!r},{v!r} must be a positive integer, got {m!r}")
            iu, iv = intern(u), intern(v)
            if iu == iv:
                raise GraphError(f"loop at {u!r} is not allowed")
            key = (iu, iv) if iu < iv else (iv, iu)
            if key in pairs:
                raise GraphError(f"duplicate parallel class {u!r},{v!r}")
            pairs[key] = m

        adj: list[dict[int, int]] = [dict() for _ in labels]
        for (i, j), m in sorted(pairs.items()):
            adj[i][j] = m
            adj[j][i] = m

        self.labels: tuple[str, ...] = tuple(labels)
        self._index = index
        self._pairs = dict(sorted(pairs.items()))
        self.adj: tuple[dict[int, int], ...] = tuple(adj)
        self.deg: tuple[int, ...] = tuple(sum(a.values()) for a in adj)
        self._hash: Optional[int] = None

    # -- basic queries -------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def class_count(self) -> int:
        return len(self._pairs)

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def index_of(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def mult(self, u: str, v: str) -> int:
        """Multiplicity of the unordered pair, 0 when no class is present."""
        iu, iv = self.index_of(u), self.index_of(v)
        if iu == iv:
            return 0
        return self.adj[iu].get(iv, 0)

    def degree(self, v: str) -> int:
        """Sum of incident multiplicities; each parallel copy counts once."""
        return self.deg[self.index_of(v)]

    def vertex_mult(self, v: str) -> int:
        """Largest multiplicity on an edge incident to v, 0 when isolated."""
        a = self.adj[self.index_of(v)]
        return max(a.values()) if a else 0

    def max_degree(self) -> int:
        return max(self.deg, default=0)

    def max_mult(self) -> int:
        return max((m for _, m in self.iter_index_classes()), default=0)

    def ore_bound(self) -> int:
        """max over vertices of degree(v) + vertex_mult(v) (0 when empty)."""
        return max(
            (self.deg[i] + (max(a.values()) if a else 0) for i, a in enumerate(self.adj)),
            default=0,
        )

    def total_instances(self) -> int:
        return sum(m for _, m in self.iter_index_classes())

    def iter_index_classes(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self._pairs.items())

    @property
    def index_classes(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((i, j, m) for (i, j), m in self._pairs.items())

    def classes(self) -> tuple[tuple[str, str, int], ...]:
        """Parallel classes as (u, v, mult), sorted by dense index pair."""
        lab = self.labels
        return tuple((lab[i], lab[j], m) for (i, j), m in self._pairs.items())

    def neighbours(self, v: str) -> tuple[str, ...]:
        a = self.adj[self.index_of(v)]
        return tuple(self.labels[i] for i in sorted(a))

    def is_simple(self) -> bool:
        return all(m == 1 for _, m in self.iter_index_classes())

    # -- derived graphs ------------------------------------------------

    def underlying_simple(self) -> "Multigraph":
        """Same vertices, every stored pair flattened to multiplicity 1."""
        return Multigraph(self.labels, [(u, v, 1) for u, v, _ in self.classes()])

    def induced(self, s: Iterable[str]) -> "Multigraph":
        """Induced sub-multigraph on s; pairs inside s keep full multiplicity."""
        keep = {self.index_of(v) for v in s}
        lab = self.labels
        vertices = [lab[i] for i in range(len(lab)) if i in keep]
        edges = [
            (lab[i], lab[j], m)
            for (i, j), m in self._pairs.items()
            if i in keep and j in keep
        ]
        return Multigraph(vertices, edges)

    def is_multiforest(self) -> bool:
        """True iff the underlying simple graph is acyclic."""
        parent = list(range(len(self.labels)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for (i, j), _ in self._pairs.items():
            ri, rj = find(i), find(j)
            if ri == rj:
                return False
            parent[ri] = rj
        return True

    # -- value semantics -----------------------------------------------

    def __eq__(self, other) -> bool:
        """Label-preserving equality: same vertex labels, same multiplicities."""
        if not isinstance(other, Multigraph):
            return NotImplemented
        if set(self.labels) != set(other.labels):
            return False
        return set(map(_norm_class, self.classes())) == set(map(_norm_class, other.classes()))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (frozenset(self.labels), frozenset(map(_norm_class, self.classes())))
            )
        return self._hash

    def __repr__(self) -> str:
        return f"Multigraph({len(self.labels)} vertices, {self.class_count} classes)"


def _norm_class(c: tuple[str, str, int]) -> tuple[str, str, int]:
    u, v, m = c
    return (u, v, m) if u <= v else (v, u, m)


class SubgraphSelection:
    """A sub-multiplicity assignment relative to a parent Multigraph.

    Stores, per parent pair, a multiplicity between 1 and the parent's (pairs
    at 0 are simply absent), together with a vertex mask. Degrees and
    adjacency are exposed in the parent's dense index space so that metrics
    can mix parent and subgraph quantities without relabelling.
    """

    __slots__ = ("parent", "pairs", "mask", "_deg", "_adj")

    def __init__(
        self,
        parent: Multigraph,
        classes: Iterable[tuple[str, str, int]] = (),
        vertices: Optional[Iterable[str]] = None,
    ):
        pairs: dict[tuple[int, int], int] = {}
        for u, v, m in classes:
            iu, iv = parent.index_of(u), parent.index_of(v)
            key = (iu, iv) if iu < iv else (iv, iu)
            if key in pairs:
                raise GraphError(f"duplicate selected class {u!r},{v!r}")
            pairs[key] = m
        if vertices is None:
            mask = frozenset(range(len(parent.labels)))
        else:
            mask = frozenset(parent.index_of(v) for v in vertices)
        self._init_raw(parent, pairs, mask, validate=True)

    def _init_raw(self, parent, pairs, mask, validate: bool):
        if validate:
            for (i, j), m in pairs.items():
                cap = parent.adj[i].get(j, 0)
                if not isinstance(m, int) or m < 1:
                    raise GraphError(f"selected multiplicity must be >= 1, got {m!r}")
                if m > cap:
                    raise GraphError(
                        f"selection exceeds parent multiplicity on "
                        f"{parent.labels[i]!r},{parent.labels[j]!r} ({m} > {cap})"
                    )
                if i not in mask or j not in mask:
                    raise GraphError(
                        f"selected class {parent.labels[i]!r},{parent.labels[j]!r} "
                        f"has an endpoint outside the vertex mask"
                    )
        self.parent = parent
        self.pairs = dict(sorted(pairs.items()))
        self.mask = mask
        self._deg: Optional[tuple[int, ...]] = None
        self._adj: Optional[tuple[dict[int, int], ...]] = None

    @classmethod
    def _raw(cls, parent: Multigraph, pairs: dict[tuple[int, int], int], mask: frozenset) -> "SubgraphSelection":
        """Trusted constructor for enumeration loops; skips validation."""
        sel = cls.__new__(cls)
        sel._init_raw(parent, pairs, mask, validate=False)
        return sel

    @classmethod
    def full(cls, parent: Multigraph) -> "SubgraphSelection":
        return cls._raw(parent, dict(parent.iter_index_classes()), frozenset(range(len(parent.labels))))

    # -- index-space views ----------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        return self.parent.labels

    def index_of(self, v: str) -> int:
        i = self.parent.index_of(v)
        if i not in self.mask:
            raise GraphError(f"vertex {v!r} is outside the selection")
        return i

    @property
    def deg(self) -> tuple[int, ...]:
        if self._deg is None:
            d = [0] * len(self.parent.labels)
            for (i, j), m in self.pairs.items():
                d[i] += m
                d[j] += m
            self._deg = tuple(d)
        return self._deg

    @property
    def adj(self) -> tuple[dict[int, int], ...]:
        if self._adj is None:
            a: list[dict[int, int]] = [dict() for _ in self.parent.labels]
            for (i, j), m in self.pairs.items():
                a[i][j] = m
                a[j][i] = m
            self._adj = tuple(a)
        return self._adj

    # -- label-space API -------------------------------------------------

    def mult(self, u: str, v: str) -> int:
        iu, iv = self.parent.index_of(u), self.parent.index_of(v)
        return self.pairs.get((iu, iv) if iu < iv else (iv, iu), 0)

    def degree(self, v: str) -> int:
        return self.deg[self.parent.index_of(v)]

    def classes(self) -> tuple[tuple[str, str, int], ...]:
        lab = self.parent.labels
        return tuple((lab[i], lab[j], m) for (i, j), m in self.pairs.items())

    def vertices(self) -> tuple[str, ...]:
        lab = self.parent.labels
        return tuple(lab[i] for i in range(len(lab)) if i in self.mask)

    def has_edges(self) -> bool:
        return bool(self.pairs)

    def strip_isolated(self) -> "SubgraphSelection":
        """Shrink the mask to the endpoints of selected classes."""
        used = set()
        for (i, j) in self.pairs:
            used.add(i)
            used.add(j)
        return SubgraphSelection._raw(self.parent, dict(self.pairs), frozenset(used))

    def materialize(self) -> Multigraph:
        """Realize the selection as a standalone Multigraph."""
        return Multigraph(self.vertices(), self.classes())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgraphSelection):
            return NotImplemented
        return (
            self.parent == other.parent
            and self.pairs == other.pairs
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.parent, tuple(self.pairs.items()), self.mask))

    def __repr__(self) -> str:
        return f"SubgraphSelection({len(self.mask)} vertices, {len(self.pairs)} classes)"


# -- text format -------------------------------------------------------
#
# Line-oriented UTF-8. '#' starts a comment anywhere in a line. A line of
# the form 'vertex <label>' declares an isolated vertex; '<u> <v> <mult>'
# declares a parallel class with a positive multiplicity. Tokens are
# whitespace-separated, so labels cannot contain whitespace.


def parse(text: str) -> Multigraph:
    """Parse graph text; raise ParseError with a line number on bad input."""
    vertices: list[str] = []
    seen_vertices: set[str] = set()
    edges: list[tuple[str, str, int]] = []
    seen_pairs: set[frozenset[str]] = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == _RESERVED:
            if len(tokens) != 2:
                raise ParseError(lineno, "vertex declaration needs exactly one label")
            label = tokens[1]
            if label in seen_vertices:
                raise ParseError(lineno, f"duplicate vertex declaration {label!r}")
            seen_vertices.add(label)
            vertices.append(label)
        elif len(tokens) == 3:
            u, v, raw_m = tokens
            try:
                m = int(raw_m)
            except ValueError:
                raise ParseError(lineno, f"multiplicity {raw_m!r} is not an integer") from None
            if m < 0:
                raise ParseError(lineno, f"negative multiplicity {m}")
            if m == 0:
                raise ParseError(lineno, "zero multiplicity; omit the pair instead")
            if u == v:
                raise ParseError(lineno, f"loop at {u!r} is not allowed")
            if frozenset((u, v)) in seen_pairs:
                raise ParseError(lineno, f"duplicate pair {u!r},{v!r}")
            seen_pairs.add(frozenset((u, v)))
            edges.append((u, v, m))
            for label in (u, v):
                if label not in seen_vertices:
                    seen_vertices.add(label)
                    vertices.append(label)
        else:
            raise ParseError(lineno, f"malformed line: {raw.strip()!r}")

    try:
        return Multigraph(vertices, edges)
    except GraphError as exc:
        raise ParseError(0, str(exc)) from exc


def serialize(g: Multigraph) -> str:
    """Canonical text form: every vertex declared in order, then classes.

    serialize(parse(serialize(g))) == serialize(g) for every graph.
    """
    lines = [f"vertex {label}" for label in g.labels]
    lines.extend(f"{u} {v} {m}" for u, v, m in g.classes())
    return "\n".join(lines) + ("\n" if lines else "")


def load(path) -> Multigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def dump(g: Multigraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(g))
