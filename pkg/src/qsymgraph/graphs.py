"""Finite colored, possibly oriented graphs and their exact adjacency data.

A graph here is a vertex count plus a list of color components. Each
component is either a set of undirected edges or a set of arcs (with no
opposite pairs), all components covering pairwise disjoint vertex pairs.
Numeric color values are carried as metadata: they take part in adjacency
matrices but not in isomorphism comparison, since the symmetry theory only
sees the color partition.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .linalg import ExactMatrix
from .scalars import GR_I, GR_ONE, GR_ZERO, GaussianRational

UNORIENTED = "unoriented"
ORIENTED = "oriented"


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ColorComponent:
    label: str
    kind: str
    pairs: frozenset[tuple[int, int]]
    value: Fraction | None = None

    def unordered_pairs(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(p) for p in self.pairs)

    def degree(self, v: int) -> tuple[int, int]:
        """(out, in) for oriented, (deg, deg) for unoriented."""
        if self.kind == UNORIENTED:
            d = sum(1 for p in self.pairs if v in p)
            return (d, d)
        return (
            sum(1 for a, _ in self.pairs if a == v),
            sum(1 for _, b in self.pairs if b == v),
        )


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    components: tuple[ColorComponent, ...] = ()

    def component(self, label: str) -> ColorComponent:
        for c in self.components:
            if c.label == label:
                return c
        raise GraphError(f"no component labeled {label!r}")

    def labels(self) -> list[str]:
        return [c.label for c in self.components]

    def covered_pairs(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for c in self.components:
            out |= c.unordered_pairs()
        return out

    def edge_count(self) -> int:
        return sum(len(c.unordered_pairs()) for c in self.components)


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def validate(g: ColoredGraph) -> None:
    """Raise GraphError unless g satisfies the colored-graph invariants."""
    if g.n < 1:
        raise GraphError("graph needs at least one vertex")
    labels = g.labels()
    if len(set(labels)) != len(labels):
        raise GraphError("component labels must be distinct")
    seen: set[frozenset[int]] = set()
    for c in g.components:
        if c.kind not in (UNORIENTED, ORIENTED):
            raise GraphError(f"component {c.label!r}: unknown kind {c.kind!r}")
        if c.value is not None and c.value == 0:
            raise GraphError(f"component {c.label!r}: value must be nonzero")
        if c.kind == ORIENTED and c.value is not None and c.value < 0:
            raise GraphError(f"component {c.label!r}: oriented value must be positive")
        for pair in c.pairs:
            i, j = pair
            if i == j:
                raise GraphError(f"component {c.label!r}: self-loop at {i}")
            if not (0 <= i < g.n and 0 <= j < g.n):
                raise GraphError(f"component {c.label!r}: vertex out of range in {pair}")
            if c.kind == UNORIENTED and i > j:
                raise GraphError(f"component {c.label!r}: edge {pair} not normalized")
            if c.kind == ORIENTED and (j, i) in c.pairs:
                raise GraphError(
                    f"component {c.label!r}: arcs {(i, j)} and {(j, i)} both present"
                )
            u = frozenset(pair)
            if u in seen:
                raise GraphError(f"pair {set(pair)} covered by more than one component")
            seen.add(u)


def incidence(g: ColoredGraph, label: str) -> ExactMatrix:
    """0/1 symmetric matrix for an unoriented component; for an oriented
    component the arc i->j contributes i at (i,j) and -i at (j,i)."""
    c = g.component(label)
    rows = [[GR_ZERO] * g.n for _ in range(g.n)]
    for i, j in c.pairs:
        if c.kind == UNORIENTED:
            rows[i][j] = GR_ONE
            rows[j][i] = GR_ONE
        else:
            rows[i][j] = GR_I
            rows[j][i] = -GR_I
    return ExactMatrix(rows)


def total_matrix(g: ColoredGraph) -> ExactMatrix:
    """Sum of value-weighted component incidences (value defaults to 1)."""
    rows = [[GR_ZERO] * g.n for _ in range(g.n)]
    for c in g.components:
        w = GaussianRational.of(c.value if c.value is not None else 1)
        for i, j in c.pairs:
            if c.kind == UNORIENTED:
                rows[i][j] = rows[i][j] + w
                rows[j][i] = rows[j][i] + w
            else:
                rows[i][j] = rows[i][j] + w * GR_I
                rows[j][i] = rows[j][i] - w * GR_I
    return ExactMatrix(rows)


def decompose(d: ExactMatrix) -> ColoredGraph:
    """Split a self-adjoint hollow matrix with real or purely imaginary
    entries into one color component per distinct entry value."""
    n = d.nrows
    if d.ncols != n:
        raise GraphError("decompose needs a square matrix")
    if d != d.adjoint():
        raise GraphError("decompose needs a self-adjoint matrix")
    for i in range(n):
        if not d[i, i].is_zero():
            raise GraphError("decompose needs zero diagonal")
    real_groups: dict[Fraction, set[tuple[int, int]]] = {}
    arc_groups: dict[Fraction, set[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            z = d[i, j]
            if z.is_zero():
                continue
            if z.im == 0:
                real_groups.setdefault(z.re, set()).add((i, j))
            elif z.re == 0:
                if z.im > 0:
                    arc_groups.setdefault(z.im, set()).add((i, j))
                else:
                    arc_groups.setdefault(-z.im, set()).add((j, i))
            else:
                raise GraphError(
                    f"entry ({i},{j}) is neither real nor purely imaginary"
                )
    comps = []
    for k, value in enumerate(sorted(real_groups), start=1):
        comps.append(
            ColorComponent(f"u{k}", UNORIENTED, frozenset(real_groups[value]), value)
        )
    for k, value in enumerate(sorted(arc_groups), start=1):
        comps.append(
            ColorComponent(f"o{k}", ORIENTED, frozenset(arc_groups[value]), value)
        )
    g = ColoredGraph(n, tuple(comps))
    validate(g)
    return g


@dataclass(frozen=True)
class MetricSpace:
    """Finite metric space with exact rational distances (often squared
    distances, which is what keeps geometric examples rational)."""

    n: int
    dist: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        d = self.dist
        if len(d) != self.n or any(len(r) != self.n for r in d):
            raise GraphError("distance matrix has wrong shape")
        for i in range(self.n):
            if d[i][i] != 0:
                raise GraphError("nonzero diagonal distance")
            for j in range(self.n):
                if d[i][j] != d[j][i]:
                    raise GraphError("distance matrix not symmetric")
                if i != j and d[i][j] <= 0:
                    raise GraphError("off-diagonal distances must be positive")
        for i, j, k in itertools.permutations(range(self.n), 3):
            if d[i][j] > d[i][k] + d[k][j]:
                raise GraphError("triangle inequality violated")


def metric_import(ms: MetricSpace) -> ColoredGraph:
    """One unoriented component per distinct distance value, carrying it."""
    groups: dict[Fraction, set[tuple[int, int]]] = {}
    for i in range(ms.n):
        for j in range(i + 1, ms.n):
            groups.setdefault(ms.dist[i][j], set()).add((i, j))
    comps = tuple(
        ColorComponent(f"d{k}", UNORIENTED, frozenset(groups[v]), v)
        for k, v in enumerate(sorted(groups), start=1)
    )
    g = ColoredGraph(ms.n, comps)
    validate(g)
    return g


# ---------------------------------------------------------------------------
# Moves that preserve the quantum symmetry object.

def complement(g: ColoredGraph) -> ColoredGraph:
    """Complement of a plain graph (at most one unoriented component)."""
    if any(c.kind == ORIENTED for c in g.components):
        raise GraphError("complement is defined for unoriented graphs")
    if len(g.components) > 1:
        raise GraphError("complement needs at most one component")
    present = g.covered_pairs()
    missing = frozenset(
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if frozenset((i, j)) not in present
    )
    label = g.components[0].label if g.components else "c"
    if not missing:
        return ColoredGraph(g.n, ())
    return ColoredGraph(g.n, (ColorComponent(label, UNORIENTED, missing),))


def remove_color(g: ColoredGraph, label: str) -> ColoredGraph:
    g.component(label)
    return ColoredGraph(g.n, tuple(c for c in g.components if c.label != label))


def reverse(g: ColoredGraph, label: str) -> ColoredGraph:
    c = g.component(label)
    if c.kind != ORIENTED:
        raise GraphError("reverse applies to oriented components")
    flipped = ColorComponent(c.label, ORIENTED, frozenset((j, i) for i, j in c.pairs), c.value)
    return ColoredGraph(g.n, tuple(flipped if x.label == label else x for x in g.components))


def forget_orientation(g: ColoredGraph, label: str) -> ColoredGraph:
    c = g.component(label)
    if c.kind != ORIENTED:
        raise GraphError("forget applies to oriented components")
    sym = ColorComponent(
        c.label, UNORIENTED, frozenset(_norm_edge(i, j) for i, j in c.pairs), None
    )
    return ColoredGraph(g.n, tuple(sym if x.label == label else x for x in g.components))


def merge_colors(g: ColoredGraph, label_a: str, label_b: str) -> ColoredGraph:
    a = g.component(label_a)
    b = g.component(label_b)
    if a.kind != b.kind:
        raise GraphError("can only merge components of the same kind")
    value = a.value if a.value is not None and a.value == b.value else None
    merged = ColorComponent(a.label, a.kind, a.pairs | b.pairs, value)
    comps = [merged if c.label == label_a else c for c in g.components if c.label != label_b]
    return ColoredGraph(g.n, tuple(comps))


def saturate(g: ColoredGraph) -> ColoredGraph:
    """Add one fresh unoriented component covering the uncovered pairs."""
    present = g.covered_pairs()
    missing = frozenset(
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if frozenset((i, j)) not in present
    )
    if not missing:
        return g
    label = "sat"
    k = 0
    while label in g.labels():
        k += 1
        label = f"sat{k}"
    return ColoredGraph(g.n, g.components + (ColorComponent(label, UNORIENTED, missing),))


# ---------------------------------------------------------------------------
# Constructors.

def _single(n: int, edges: Iterable[tuple[int, int]], label: str = "c") -> ColoredGraph:
    pairs = frozenset(_norm_edge(i, j) for i, j in edges)
    g = ColoredGraph(n, (ColorComponent(label, UNORIENTED, pairs),) if pairs else ())
    validate(g)
    return g


def edgeless(n: int) -> ColoredGraph:
    g = ColoredGraph(n, ())
    validate(g)
    return g


def complete(n: int) -> ColoredGraph:
    return _single(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def n_gon(n: int) -> ColoredGraph:
    if n < 3:
        raise GraphError("an n-gon needs n >= 3")
    return _single(n, ((i, (i + 1) % n) for i in range(n)))


def oriented_n_gon(n: int) -> ColoredGraph:
    if n < 3:
        raise GraphError("an oriented n-gon needs n >= 3")
    arcs = frozenset((i, (i + 1) % n) for i in range(n))
    g = ColoredGraph(n, (ColorComponent("c", ORIENTED, arcs),))
    validate(g)
    return g


def disjoint_copies(k: int, g: ColoredGraph) -> ColoredGraph:
    """k disjoint copies sharing colors, so copies are interchangeable."""
    if k < 1:
        raise GraphError("need at least one copy")
    comps = []
    for c in g.components:
        pairs = set()
        for block in range(k):
            off = block * g.n
            pairs |= {(i + off, j + off) for i, j in c.pairs}
        comps.append(ColorComponent(c.label, c.kind, frozenset(pairs), c.value))
    out = ColoredGraph(k * g.n, tuple(comps))
    validate(out)
    return out


@dataclass(frozen=True)
class CyclicProfile:
    """Edge profile of a graph with cyclic symmetry: vertex j is joined to
    j+k exactly when e[k] = 1, with the symmetry e[k] = e[n-k]."""

    n: int
    e: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.e) != self.n:
            raise GraphError("profile length must equal n")
        if any(x not in (0, 1) for x in self.e):
            raise GraphError("profile entries must be 0 or 1")
        if self.e[0] != 0:
            raise GraphError("profile must vanish at 0")
        for k in range(1, self.n):
            if self.e[k] != self.e[self.n - k]:
                raise GraphError("profile must satisfy e(k) = e(n-k)")

    @staticmethod
    def from_exponents(n: int, exponents: Iterable[int]) -> "CyclicProfile":
        e = [0] * n
        for k in exponents:
            e[k % n] = 1
            e[(n - k) % n] = 1
        return CyclicProfile(n, tuple(e))

    def exponents(self) -> list[int]:
        return [k for k in range(1, self.n) if self.e[k] == 1]


def cyclic_from_profile(profile: CyclicProfile) -> ColoredGraph:
    n = profile.n
    edges = set()
    for k in profile.exponents():
        for j in range(n):
            edges.add(_norm_edge(j, (j + k) % n))
    return _single(n, edges)


def multi_simplex(*ns: int) -> ColoredGraph:
    """Product of simplices: vertices are tuples, the edge color is the
    index of the first coordinate where the endpoints differ."""
    if not ns or any(m < 2 for m in ns):
        raise GraphError("multi-simplex needs indices >= 2")
    s = len(ns)
    verts = list(itertools.product(*[range(m) for m in ns]))
    index = {v: i for i, v in enumerate(verts)}
    supports: list[set[tuple[int, int]]] = [set() for _ in range(s)]
    for a, b in itertools.combinations(verts, 2):
        lead = next(i for i in range(s) if a[i] != b[i])
        supports[lead].add(_norm_edge(index[a], index[b]))
    comps = tuple(
        ColorComponent(f"e{i + 1}", UNORIENTED, frozenset(supports[i]))
        for i in range(s)
    )
    g = ColoredGraph(len(verts), comps)
    validate(g)
    return g


def tensor_product(y: ColoredGraph, z: ColoredGraph) -> ColoredGraph:
    """Vertex pairs, joined exactly when both coordinates are joined."""
    ye = _plain_edges(y)
    ze = _plain_edges(z)
    edges = set()
    for a, b in ye:
        for c, d in ze:
            edges.add(_norm_edge(a * z.n + c, b * z.n + d))
            edges.add(_norm_edge(a * z.n + d, b * z.n + c))
    return _single(y.n * z.n, edges)


def _plain_edges(g: ColoredGraph) -> list[tuple[int, int]]:
    if len(g.components) != 1 or g.components[0].kind != UNORIENTED:
        raise GraphError("expected a plain graph with one unoriented component")
    return sorted(g.components[0].pairs)


def cube() -> ColoredGraph:
    """1-skeleton of the 3-cube: vertices are bit triples."""
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            w = v ^ bit
            if v < w:
                edges.append((v, w))
    return _single(8, edges)


def cube_metric() -> MetricSpace:
    """Squared Euclidean distances between the unit cube's vertices."""
    rows = []
    for v in range(8):
        row = []
        for w in range(8):
            row.append(Fraction(bin(v ^ w).count("1")))
        rows.append(tuple(row))
    return MetricSpace(8, tuple(rows))


def ngon_metric(n: int) -> MetricSpace:
    """Cycle metric of the regular n-gon (chord classes by hop count)."""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            k = abs(i - j) % n
            row.append(Fraction(min(k, n - k)))
        rows.append(tuple(row))
    return MetricSpace(n, tuple(rows))


def eight_spoke_wheel() -> ColoredGraph:
    """Octagon plus its four diameters (the hub is not a vertex)."""
    return cyclic_from_profile(CyclicProfile.from_exponents(8, [1, 4]))


def nine_star(e: int) -> ColoredGraph:
    """The nine-vertex stars: cyclic profile z + z^(1+e) + z^(8-e) + z^8."""
    if e not in (1, 2):
        raise GraphError("nine-star parameter must be 1 or 2")
    return cyclic_from_profile(CyclicProfile.from_exponents(9, [1, 1 + e, 8 - e, 8]))


# ---------------------------------------------------------------------------
# Loop counts and the loop rule.

def _component_walk_matrix(g: ColoredGraph, label: str) -> np.ndarray:
    c = g.component(label)
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for i, j in c.pairs:
        a[i, j] = 1
        if c.kind == UNORIENTED:
            a[j, i] = 1
    return a


def loop_counts(g: ColoredGraph, length: int, label: str | None = None) -> list[int]:
    """Closed walks of the given length at each vertex, inside one color.

    Unoriented components count ordinary closed walks; oriented ones count
    directed closed walks along the arcs.
    """
    if length < 1:
        raise GraphError("walk length must be >= 1")
    if label is None:
        if len(g.components) != 1:
            raise GraphError("specify the component label for a multicolor graph")
        label = g.components[0].label
    a = _component_walk_matrix(g, label)
    power = np.linalg.matrix_power(a, length)
    return [int(x) for x in power.diagonal()]


def loop_rule_check(
    g: ColoredGraph, max_length: int = 6
) -> tuple[bool, int | None, str | None]:
    """Check that every color has constant diagonal walk counts up to the
    given length. Returns (passed, first bad length, offending label)."""
    for c in g.components:
        a = _component_walk_matrix(g, c.label)
        power = np.eye(g.n, dtype=np.int64)
        for length in range(1, max_length + 1):
            power = power @ a
            diag = power.diagonal()
            if not np.all(diag == diag[0]):
                return False, length, c.label
    return True, None, None


# ---------------------------------------------------------------------------
# Text format.

def parse_graph(text: str) -> ColoredGraph:
    n: int | None = None
    kinds: dict[str, str] = {}
    pairs: dict[str, set[tuple[int, int]]] = {}
    values: dict[str, Fraction] = {}
    order: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        word = tokens[0]
        if word == "vertices":
            if n is not None:
                raise GraphParseError(lineno, "duplicate vertices directive")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise GraphParseError(lineno, "expected: vertices N")
            n = int(tokens[1])
        elif word in ("edge", "arc"):
            if n is None:
                raise GraphParseError(lineno, "vertices directive must come first")
            if len(tokens) != 4:
                raise GraphParseError(lineno, f"expected: {word} LABEL I J")
            label = tokens[1]
            try:
                i, j = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphParseError(lineno, "vertex indices must be integers") from None
            if not (0 <= i < n and 0 <= j < n):
                raise GraphParseError(lineno, f"vertex out of range in ({i}, {j})")
            if i == j:
                raise GraphParseError(lineno, f"self-loop at vertex {i}")
            kind = UNORIENTED if word == "edge" else ORIENTED
            if label in kinds and kinds[label] != kind:
                raise GraphParseError(lineno, f"component {label!r} mixes edge and arc")
            if label not in kinds:
                kinds[label] = kind
                pairs[label] = set()
                order.append(label)
            pairs[label].add(_norm_edge(i, j) if kind == UNORIENTED else (i, j))
        elif word == "value":
            if len(tokens) != 3:
                raise GraphParseError(lineno, "expected: value LABEL P/Q")
            label = tokens[1]
            if label in values:
                raise GraphParseError(lineno, f"duplicate value for {label!r}")
            try:
                values[label] = Fraction(tokens[2])
            except (ValueError, ZeroDivisionError):
                raise GraphParseError(lineno, f"bad rational {tokens[2]!r}") from None
        else:
            raise GraphParseError(lineno, f"unknown directive {word!r}")
    if n is None:
        raise GraphParseError(1, "missing vertices directive")
    for label in values:
        if label not in kinds:
            raise GraphParseError(1, f"value for unknown component {label!r}")
    comps = tuple(
        ColorComponent(label, kinds[label], frozenset(pairs[label]), values.get(label))
        for label in order
    )
    g = ColoredGraph(n, comps)
    try:
        validate(g)
    except GraphError as exc:
        raise GraphParseError(1, str(exc)) from None
    return g


def write_graph(g: ColoredGraph) -> str:
    lines = [f"vertices {g.n}"]
    for c in g.components:
        word = "edge" if c.kind == UNORIENTED else "arc"
        for i, j in sorted(c.pairs):
            lines.append(f"{word} {c.label} {i} {j}")
    for c in g.components:
        if c.value is not None:
            lines.append(f"value {c.label} {c.value}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Isomorphism and canonical forms. Color values are metadata and do not
# take part; component labels are matched structurally, not by name.

def _component_signature(c: ColorComponent) -> tuple[str, int]:
    return (c.kind, len(c.pairs))


def _match_components(
    g: ColoredGraph, h: ColoredGraph
) -> list[tuple[ColorComponent, ColorComponent]] | None:
    if g.n != h.n or len(g.components) != len(h.components):
        return None
    gs = sorted(g.components, key=_component_signature)
    hs = sorted(h.components, key=_component_signature)
    if [_component_signature(c) for c in gs] != [_component_signature(c) for c in hs]:
        return None
    return list(zip(gs, hs))


def is_isomorphic(g: ColoredGraph, h: ColoredGraph) -> bool:
    """Vertex bijection carrying each color class of g onto one of h.

    Components are matched by (kind, size); for graphs with several
    same-shape components all assignments are tried.
    """
    if g.n != h.n:
        return False
    base = _match_components(g, h)
    if base is None:
        return False
    gs = [c for c, _ in base]
    sigs = [_component_signature(c) for c in gs]
    hs_all = sorted(h.components, key=_component_signature)
    # Group positions with identical signatures; try every pairing.
    groups: dict[tuple[str, int], list[int]] = {}
    for idx, s in enumerate(sigs):
        groups.setdefault(s, []).append(idx)
    candidate_orders: list[list[ColorComponent]] = [[None] * len(gs)]  # type: ignore[list-item]
    for s, positions in groups.items():
        pool = [c for c in hs_all if _component_signature(c) == s]
        new_orders = []
        for order in candidate_orders:
            for perm in itertools.permutations(pool):
                trial = list(order)
                for pos, comp in zip(positions, perm):
                    trial[pos] = comp
                new_orders.append(trial)
        candidate_orders = new_orders
    for hs in candidate_orders:
        if _iso_search(g.n, gs, hs) is not None:
            return True
    return False


def _adjacency_maps(n: int, comps: Sequence[ColorComponent]) -> list[dict[tuple[int, int], int]]:
    """Per-component relation maps: 1 for edge/arc, -1 for reverse arc."""
    out = []
    for c in comps:
        rel: dict[tuple[int, int], int] = {}
        for i, j in c.pairs:
            if c.kind == UNORIENTED:
                rel[(i, j)] = 1
                rel[(j, i)] = 1
            else:
                rel[(i, j)] = 1
                rel[(j, i)] = -1
        out.append(rel)
    return out


def _iso_search(
    n: int,
    gs: Sequence[ColorComponent],
    hs: Sequence[ColorComponent],
    find_all: bool = False,
    pins: Sequence[tuple[int, int]] = (),
) -> tuple[int, ...] | list[tuple[int, ...]] | None:
    """Backtracking search for bijections carrying gs[k] onto hs[k].

    Each (v, w) in pins forces v to map to w; pinned vertices are placed
    first, so contradictions among the pins die at the root.
    """
    g_rel = _adjacency_maps(n, gs)
    h_rel = _adjacency_maps(n, hs)

    def signature(v: int, comps: Sequence[ColorComponent]) -> tuple:
        return tuple(c.degree(v) for c in comps)

    g_sig = [signature(v, gs) for v in range(n)]
    h_sig = [signature(v, hs) for v in range(n)]
    if sorted(g_sig) != sorted(h_sig):
        return [] if find_all else None
    candidates = [
        [w for w in range(n) if h_sig[w] == g_sig[v]] for v in range(n)
    ]
    for v, w in pins:
        candidates[v] = [w] if w in candidates[v] else []
    order = sorted(range(n), key=lambda v: (len(candidates[v]), v))
    image = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def consistent(v: int, w: int, depth: int) -> bool:
        for k, rel in enumerate(g_rel):
            hrel = h_rel[k]
            for prev in order[:depth]:
                pw = image[prev]
                if rel.get((v, prev), 0) != hrel.get((w, pw), 0):
                    return False
                if rel.get((prev, v), 0) != hrel.get((pw, w), 0):
                    return False
        return True

    def rec(depth: int) -> bool:
        if depth == n:
            found.append(tuple(image))
            return not find_all
        v = order[depth]
        for w in candidates[v]:
            if used[w]:
                continue
            if not consistent(v, w, depth):
                continue
            image[v] = w
            used[w] = True
            if rec(depth + 1):
                return True
            image[v] = -1
            used[w] = False
        return False

    hit = rec(0)
    if find_all:
        return found
    return found[0] if hit else None


def canonical_form(g: ColoredGraph) -> tuple:
    """Hashable form equal across isomorphic graphs (values excluded).

    Minimizes the component encodings over all vertex permutations, so it
    is exponential in n; guarded to the small sizes used here.
    """
    if g.n > 10:
        raise GraphError("canonical form is limited to 10 vertices")
    best: tuple | None = None
    comps = sorted(g.components, key=_component_signature)
    for perm in itertools.permutations(range(g.n)):
        enc = []
        for c in comps:
            if c.kind == UNORIENTED:
                mapped = tuple(sorted(_norm_edge(perm[i], perm[j]) for i, j in c.pairs))
            else:
                mapped = tuple(sorted((perm[i], perm[j]) for i, j in c.pairs))
            enc.append((c.kind, mapped))
        enc_t = (g.n, tuple(sorted(enc)))
        if best is None or enc_t < best:
            best = enc_t
    assert best is not None
    return best
