"""Recognition of graphs whose quantum symmetry has a known description.

The entry point is classify, which runs a fixed pipeline of recognizers
over a colored graph: complement normalization, oriented-cycle detection,
Fuss-Catalan shapes (product-of-simplices colorings and their disguises),
the circulant eigenvalue criterion for dihedral symmetry, tensor-product
splitting, and finally a raw dimension computation for everything else.
Each rule leaves a line in the provenance trail whether it fired or not.

The module also hosts the small-graph enumeration: all regular graphs up
to isomorphism on at most nine vertices, the vertex-transitive ones among
them closed under complementation, each classified. Deduplication uses
the minimal adjacency encoding over all vertex permutations, vectorized
because the permutation count is the whole cost.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .closure import ClosureConfig, closure
from .graphs import (
    ORIENTED,
    UNORIENTED,
    ColoredGraph,
    CyclicProfile,
    GraphError,
    complement,
    disjoint_copies,
    incidence,
    is_isomorphic,
    multi_simplex,
    n_gon,
    tensor_product,
    validate,
)
from .linalg import rational_eigenvalues
from .scalars import CyclotomicElement, cyclotomic_power
from .series import (
    CubeSeries,
    CyclicGroupSeries,
    DihedralSeries,
    FussCatalan,
    HadamardProduct,
    PoincareSeries,
    tl_series,
)
from .symmetry import automorphism_group

from .graphs import loop_rule_check


@dataclass(frozen=True)
class Classification:
    """Tagged classification result with a provenance trail.

    kind is one of "fuss_catalan", "dihedral", "cyclic_group",
    "tensor_product", "unknown". Exactly the fields relevant to the tag
    are populated; every result carries a closed-form series or a
    computed coefficient prefix.
    """

    kind: str
    trail: tuple[str, ...]
    series: PoincareSeries | None = None
    prefix: tuple[int, ...] | None = None
    indices: tuple[int, ...] | None = None
    generic: bool | None = None
    n: int | None = None
    factors: tuple["Classification", ...] = ()
    converged: bool | None = None

    def __post_init__(self) -> None:
        if self.series is None and self.prefix is None:
            raise ValueError("classification needs a series or a prefix")

    def describe(self) -> str:
        if self.kind == "fuss_catalan":
            inner = ",".join(str(m) for m in self.indices or ())
            return f"FussCatalan({inner})"
        if self.kind == "dihedral":
            return f"Dihedral({self.n})"
        if self.kind == "cyclic_group":
            return f"CyclicGroup({self.n})"
        if self.kind == "tensor_product":
            parts = ", ".join(f.describe() for f in self.factors)
            return f"TensorProduct({parts})"
        return "Unknown"

    def series_prefix(self, count: int) -> list[Fraction] | None:
        """First coefficients, from the closed form or the computed dims."""
        if self.series is not None:
            return self.series.prefix(count)
        assert self.prefix is not None
        if count > len(self.prefix):
            return None
        return [Fraction(c) for c in self.prefix[:count]]


# ---------------------------------------------------------------------------
# Structure helpers.


def _union_adjacency(g: ColoredGraph) -> list[set[int]]:
    nbrs: list[set[int]] = [set() for _ in range(g.n)]
    for c in g.components:
        for i, j in c.pairs:
            nbrs[i].add(j)
            nbrs[j].add(i)
    return nbrs


def _is_connected(g: ColoredGraph) -> bool:
    if g.n == 0:
        return True
    nbrs = _union_adjacency(g)
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in nbrs[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == g.n


def _is_regular(g: ColoredGraph) -> bool:
    nbrs = _union_adjacency(g)
    return len({len(s) for s in nbrs}) <= 1


def _connected_pieces(g: ColoredGraph) -> list[list[int]]:
    nbrs = _union_adjacency(g)
    seen: set[int] = set()
    pieces = []
    for start in range(g.n):
        if start in seen:
            continue
        piece = [start]
        seen.add(start)
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in nbrs[v]:
                if w not in seen:
                    seen.add(w)
                    piece.append(w)
                    frontier.append(w)
        pieces.append(sorted(piece))
    return pieces


def _plain_adjacency(g: ColoredGraph) -> np.ndarray:
    """Boolean matrix of a graph with at most one unoriented color."""
    if any(c.kind == ORIENTED for c in g.components):
        raise GraphError("needs an unoriented graph")
    if len(g.components) > 1:
        raise GraphError("needs at most one color")
    adj = np.zeros((g.n, g.n), dtype=bool)
    for c in g.components:
        for i, j in c.pairs:
            adj[i, j] = adj[j, i] = True
    return adj


def _graph_from_adjacency(adj: np.ndarray) -> ColoredGraph:
    n = adj.shape[0]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if adj[i, j]]
    from .graphs import _single

    return _single(n, edges)


# ---------------------------------------------------------------------------
# Canonical forms over all permutations, vectorized for the enumeration.


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp)


def _canonical_adjacency(adj: np.ndarray) -> tuple[bytes, np.ndarray]:
    """Minimal bit encoding over relabelings, plus the witnessing matrix."""
    n = adj.shape[0]
    perms = _perm_table(n)
    relabeled = adj[perms[:, :, None], perms[:, None, :]]
    packed = np.packbits(relabeled.reshape(len(perms), n * n), axis=1)
    keys = tuple(packed[:, c] for c in range(packed.shape[1] - 1, -1, -1))
    best = int(np.lexsort(keys)[0])
    return packed[best].tobytes(), relabeled[best]


def canonical_key(g: ColoredGraph) -> bytes:
    """Isomorphism-invariant key for plain graphs on at most 9 vertices.

    The vertex count leads the key: the packed adjacency bits alone can
    coincide across sizes (any two edgeless graphs whose bit counts round
    up to the same byte length, for one).
    """
    if g.n > 9:
        raise GraphError("canonical keys are limited to 9 vertices")
    key, _ = _canonical_adjacency(_plain_adjacency(g))
    return bytes([g.n]) + key


# ---------------------------------------------------------------------------
# Regular-graph enumeration by degree-constrained backtracking.


def _regular_completions(n: int, k: int):
    """Labeled k-regular graphs with the first neighborhood pinned to
    {1..k}; every isomorphism class admits such a labeling, so none is
    missed. Edges are added vertex by vertex toward higher indices."""
    if k >= n:
        return
    adj = np.zeros((n, n), dtype=bool)
    deg = [0] * n
    start = 0
    if k > 0:
        for j in range(1, k + 1):
            adj[0, j] = adj[j, 0] = True
            deg[j] = 1
        deg[0] = k
        start = 1

    def rec(v: int):
        if v == n:
            if deg[v - 1] == k:
                yield adj.copy()
            return
        need = k - deg[v]
        if need < 0:
            return
        if need == 0:
            yield from rec(v + 1)
            return
        cands = [w for w in range(v + 1, n) if deg[w] < k]
        if need > len(cands):
            return
        for combo in itertools.combinations(cands, need):
            for w in combo:
                adj[v, w] = adj[w, v] = True
                deg[w] += 1
            deg[v] += need
            yield from rec(v + 1)
            deg[v] -= need
            for w in combo:
                adj[v, w] = adj[w, v] = False
                deg[w] -= 1

    yield from rec(start)


def regular_graph_reps(n: int) -> list[ColoredGraph]:
    """All k-regular graphs on n vertices up to isomorphism, k ≤ (n−1)/2.

    The denser half of the regular world is reachable from these by
    complementation, which is how the callers use it.
    """
    if not 1 <= n <= 9:
        raise GraphError("regular enumeration is limited to 9 vertices")
    found: dict[bytes, np.ndarray] = {}
    for k in range((n - 1) // 2 + 1):
        for adj in _regular_completions(n, k):
            key, canon = _canonical_adjacency(adj)
            if key not in found:
                found[key] = canon
    return [_graph_from_adjacency(found[key]) for key in sorted(found)]


@lru_cache(maxsize=None)
def product_factor_candidates(m: int) -> tuple[ColoredGraph, ...]:
    """Connected regular graphs on m vertices up to isomorphism."""
    out: dict[bytes, ColoredGraph] = {}
    for rep in regular_graph_reps(m):
        for h in (rep, complement(rep)):
            key, canon = _canonical_adjacency(_plain_adjacency(h))
            if key in out:
                continue
            candidate = _graph_from_adjacency(canon)
            if _is_connected(candidate):
                out[key] = candidate
    return tuple(out[key] for key in sorted(out))


# ---------------------------------------------------------------------------
# The circulant eigenvalue criterion.


@dataclass(frozen=True)
class CyclicVerdict:
    accepted: bool
    n: int
    reason: str
    profile: CyclicProfile | None = None
    values: tuple[CyclotomicElement, ...] = ()


def _find_cycle_order(g: ColoredGraph) -> list[int] | None:
    """A vertex ordering on which the one-step shift is a symmetry.

    Builds the cycle of the sought automorphism directly: seq[d] is the
    image of seq[d-1], and each placement is checked against all edge
    constraints it completes.
    """
    n = g.n
    if n == 1:
        return [0]
    adj = [[False] * n for _ in range(n)]
    for i, j in g.components[0].pairs:
        adj[i][j] = adj[j][i] = True
    seq = [0]
    used = [False] * n
    used[0] = True

    def rec() -> bool:
        d = len(seq)
        if d == n:
            return all(
                adj[seq[i]][seq[n - 1]] == adj[seq[i + 1]][seq[0]]
                for i in range(n - 1)
            )
        for w in range(n):
            if used[w]:
                continue
            if any(adj[seq[i]][seq[d - 1]] != adj[seq[i + 1]][w] for i in range(d - 1)):
                continue
            seq.append(w)
            used[w] = True
            if rec():
                return True
            seq.pop()
            used[w] = False
        return False

    return seq if rec() else None


def cyclic_criterion(g: ColoredGraph) -> CyclicVerdict:
    """Decide dihedral quantum symmetry through circulant eigenvalues.

    Finds a full cycle in the symmetry group, reads off the edge profile
    of vertex 0 along it, and evaluates the profile polynomial at the
    n-th roots of unity w^0..w^(n//2) in exact cyclotomic arithmetic.
    Accepts exactly when the values are pairwise distinct and n is not 4.
    """
    n = g.n
    if len(g.components) != 1 or g.components[0].kind != UNORIENTED:
        return CyclicVerdict(False, n, "needs exactly one unoriented color")
    order = _find_cycle_order(g)
    if order is None:
        return CyclicVerdict(False, n, "symmetry group has no full cycle")
    edge_set = {frozenset(p) for p in g.components[0].pairs}
    e = [0] * n
    for k in range(1, n):
        if frozenset((order[0], order[k])) in edge_set:
            e[k] = 1
    profile = CyclicProfile(n, tuple(e))
    values = []
    for j in range(n // 2 + 1):
        acc = CyclotomicElement.zero(n)
        for k in profile.exponents():
            acc = acc + cyclotomic_power(n, j * k)
        values.append(acc)
    for a in range(len(values)):
        for b in range(a + 1, len(values)):
            if (values[a] - values[b]).is_zero():
                return CyclicVerdict(
                    False,
                    n,
                    f"eigenvalue collision Q(w^{a}) = Q(w^{b}) = {values[a]}",
                    profile,
                    tuple(values),
                )
    if n == 4:
        return CyclicVerdict(
            False, n, "4 vertices are excluded", profile, tuple(values)
        )
    return CyclicVerdict(True, n, "", profile, tuple(values))


# ---------------------------------------------------------------------------
# Tensor-product splitting.


@dataclass(frozen=True)
class ProductVerdict:
    accepted: bool
    reason: str
    left_spectrum: tuple[Fraction, ...] = ()
    right_spectrum: tuple[Fraction, ...] = ()
    classification: Classification | None = None


def _classification_prefix(c: Classification, count: int) -> list[Fraction] | None:
    if c.series is not None:
        return c.series.prefix(count)
    assert c.prefix is not None
    if len(c.prefix) < count:
        return None
    return [Fraction(v) for v in c.prefix[:count]]


def product_test(
    x: ColoredGraph,
    y: ColoredGraph,
    z: ColoredGraph,
    cfg: ClosureConfig | None = None,
) -> ProductVerdict:
    """Check that x is the tensor product of y and z in the strong sense
    that lets the symmetry split: the factors must be connected, regular,
    with rational spectra avoiding 0 whose eigenvalue ratio sets meet
    only at 1. On success the result carries the coefficientwise product
    of the factor classifications' series.
    """
    for name, f in (("base graph", x), ("first factor", y), ("second factor", z)):
        if len(f.components) != 1 or f.components[0].kind != UNORIENTED:
            return ProductVerdict(False, f"{name} needs exactly one unoriented color")
    if x.n != y.n * z.n:
        return ProductVerdict(False, "vertex counts do not multiply up")
    if not is_isomorphic(x, tensor_product(y, z)):
        return ProductVerdict(False, "not isomorphic to the tensor product")
    for name, f in (("first factor", y), ("second factor", z)):
        if not _is_regular(f):
            return ProductVerdict(False, f"{name} is not regular")
        if not _is_connected(f):
            return ProductVerdict(False, f"{name} is not connected")
    spectra: list[tuple[Fraction, ...]] = []
    for name, f in (("first factor", y), ("second factor", z)):
        eigs, split = rational_eigenvalues(incidence(f, f.components[0].label))
        if not split:
            return ProductVerdict(
                False, f"{name} spectrum does not split over the rationals"
            )
        spectra.append(tuple(sorted(eigs)))
    sy, sz = spectra
    if Fraction(0) in sy or Fraction(0) in sz:
        return ProductVerdict(False, "zero eigenvalue in a factor spectrum", sy, sz)
    ratios_y = {a / b for a in sy for b in sy}
    ratios_z = {a / b for a in sz for b in sz}
    shared = ratios_y & ratios_z
    if shared != {Fraction(1)}:
        extra = ", ".join(str(r) for r in sorted(shared - {Fraction(1)}))
        return ProductVerdict(
            False, f"eigenvalue ratio sets share {extra} besides 1", sy, sz
        )
    left = classify(y, cfg)
    right = classify(z, cfg)
    series: PoincareSeries | None = None
    prefix: tuple[int, ...] | None = None
    if left.series is not None and right.series is not None:
        series = HadamardProduct(left.series, right.series)
    else:
        count = min(
            len(left.prefix or ()) or 10**9, len(right.prefix or ()) or 10**9
        )
        lp = _classification_prefix(left, count)
        rp = _classification_prefix(right, count)
        assert lp is not None and rp is not None
        prefix = tuple(int(a * b) for a, b in zip(lp, rp))
    trail = (
        f"product: split into factors on {y.n} and {z.n} vertices, "
        f"spectra {{{', '.join(map(str, sy))}}} and {{{', '.join(map(str, sz))}}}",
    )
    cls = Classification(
        kind="tensor_product",
        trail=trail,
        series=series,
        prefix=prefix,
        factors=(left, right),
    )
    return ProductVerdict(True, "", sy, sz, cls)


# ---------------------------------------------------------------------------
# Fuss-Catalan recognition.


@dataclass(frozen=True)
class FussCatalanMatch:
    indices: tuple[int, ...]
    generic: bool
    rule: str


def _index_tuples(n: int, s: int) -> list[tuple[int, ...]]:
    """Ordered factorizations of n into s parts, each at least 2."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], rem: int) -> None:
        if len(prefix) == s - 1:
            if rem >= 2:
                out.append(tuple(prefix) + (rem,))
            return
        for d in range(2, rem // 2 + 1):
            if rem % d == 0:
                rec(prefix + [d], rem // d)

    if s >= 1:
        rec([], n)
    return out


def recognize_fuss_catalan(g: ColoredGraph) -> FussCatalanMatch | None:
    """Match the graph against the shapes with product-of-simplices
    symmetry: explicit first-difference colorings, bare point sets and
    their complete complements, disjoint equal complete graphs, and the
    pair of squares. The generic flag says whether every index reaches 4,
    which is when the closed-form series applies for two or more colors.
    """
    n = g.n
    if not g.components:
        return FussCatalanMatch((n,), n >= 4, "point set")
    if len(g.components) == 1 and g.components[0].kind == UNORIENTED:
        c = g.components[0]
        if len(c.pairs) == n * (n - 1) // 2:
            return FussCatalanMatch((n,), n >= 4, "complete graph")
        pieces = _connected_pieces(g)
        if len(pieces) >= 2:
            sizes = {len(p) for p in pieces}
            if len(sizes) == 1:
                m = sizes.pop()
                if m >= 2:
                    pairs = {frozenset(p) for p in c.pairs}
                    if all(
                        frozenset((a, b)) in pairs
                        for p in pieces
                        for a, b in itertools.combinations(p, 2)
                    ):
                        k = len(pieces)
                        return FussCatalanMatch(
                            (k, m), k >= 4 and m >= 4, "disjoint complete copies"
                        )
        if n == 8 and is_isomorphic(g, disjoint_copies(2, n_gon(4))):
            return FussCatalanMatch((2, 2, 2), False, "two squares")
        return None
    if all(c.kind == UNORIENTED for c in g.components):
        s = len(g.components)
        for t in _index_tuples(n, s):
            if is_isomorphic(g, multi_simplex(*t)):
                return FussCatalanMatch(t, all(m >= 4 for m in t), "multi-simplex")
    return None


# ---------------------------------------------------------------------------
# Landau relations for multi-simplex colorings.


@dataclass(frozen=True)
class LandauReport:
    indices: tuple[int, ...]
    symmetric: bool
    row_sums: bool
    diagonal_sums: bool
    exchange: bool
    differences: bool | None
    failures: tuple[str, ...]

    @property
    def all_pass(self) -> bool:
        return (
            self.symmetric
            and self.row_sums
            and self.diagonal_sums
            and self.exchange
            and self.differences is not False
        )


Matrix = list[list[Fraction]]


def check_landau_relations(
    ps: list[Matrix], ns: tuple[int, ...], incidences: list[Matrix] | None = None
) -> LandauReport:
    """Exact checks on a tower of averaging matrices p_1..p_(s+1).

    p_i is expected to be the agreement matrix on the first i-1
    coordinates divided by n_i···n_s. The four relation families are
    symmetry, unit row sums, diagonal sums n_1···n_(i-1), and the
    exchange identity p^i_ab p^j_bc = p^i_ab p^j_ac for i ≥ j. When the
    color incidence matrices are supplied, the differences
    e_i − e_(i+1) are checked against them as well.
    """
    s = len(ns)
    if len(ps) != s + 1:
        raise ValueError(f"expected {s + 1} matrices, got {len(ps)}")
    n = math.prod(ns)
    failures: list[str] = []

    symmetric = True
    for i, p in enumerate(ps, start=1):
        bad = next(
            (
                (a, b)
                for a in range(n)
                for b in range(a + 1, n)
                if p[a][b] != p[b][a]
            ),
            None,
        )
        if bad is not None:
            symmetric = False
            failures.append(f"p{i} is not symmetric at {bad}")

    row_sums = True
    for i, p in enumerate(ps, start=1):
        for a in range(n):
            total = sum(p[a], Fraction(0))
            if total != 1:
                row_sums = False
                failures.append(f"row {a} of p{i} sums to {total}")
                break

    diagonal_sums = True
    for i, p in enumerate(ps, start=1):
        want = Fraction(math.prod(ns[: i - 1]))
        got = sum((p[a][a] for a in range(n)), Fraction(0))
        if got != want:
            diagonal_sums = False
            failures.append(f"diagonal of p{i} sums to {got}, expected {want}")

    exchange = True
    for i in range(s + 1, 0, -1):
        for j in range(1, i + 1):
            pi, pj = ps[i - 1], ps[j - 1]
            witness = None
            for a in range(n):
                for b in range(n):
                    if pi[a][b] == 0:
                        continue
                    for c in range(n):
                        if pi[a][b] * pj[b][c] != pi[a][b] * pj[a][c]:
                            witness = (a, b, c)
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                exchange = False
                failures.append(
                    f"exchange fails for p{i}, p{j} at (a, b, beta) = {witness}"
                )

    differences: bool | None = None
    if incidences is not None:
        differences = True
        for i in range(1, s + 1):
            scale_i = math.prod(ns[i - 1 :])
            scale_next = math.prod(ns[i:])
            d = incidences[i - 1]
            for a in range(n):
                for b in range(n):
                    lhs = ps[i - 1][a][b] * scale_i - ps[i][a][b] * scale_next
                    if lhs != d[a][b]:
                        differences = False
                        failures.append(
                            f"difference of e{i} and e{i + 1} differs from "
                            f"color {i} at ({a}, {b})"
                        )
                        break
                if differences is False:
                    break
            if differences is False:
                break

    return LandauReport(
        indices=tuple(ns),
        symmetric=symmetric,
        row_sums=row_sums,
        diagonal_sums=diagonal_sums,
        exchange=exchange,
        differences=differences,
        failures=tuple(failures),
    )


def _simplex_indices(g: ColoredGraph) -> tuple[int, ...]:
    """Indices of a graph built by multi_simplex, verified exactly."""
    s = len(g.components)
    if s == 0 or any(c.kind != UNORIENTED for c in g.components):
        raise GraphError("not a multi-simplex: wrong component structure")
    degs = [c.degree(0)[0] for c in g.components]
    ns: list[int] = []
    tail = 1
    for i in range(s - 1, -1, -1):
        if degs[i] % tail != 0:
            raise GraphError("not a multi-simplex: degree pattern is off")
        ns.insert(0, degs[i] // tail + 1)
        tail *= ns[0]
    if math.prod(ns) != g.n or any(m < 2 for m in ns):
        raise GraphError("not a multi-simplex: sizes do not multiply up")
    model = multi_simplex(*ns)
    for got, want in zip(g.components, model.components):
        if got.pairs != want.pairs:
            raise GraphError("not a multi-simplex: edges do not match")
    return tuple(ns)


def landau_verify(g: ColoredGraph) -> LandauReport:
    """Build the averaging tower of a multi-simplex and check it.

    The input must carry the exact coloring produced by multi_simplex
    (vertices in product order, colors by first differing coordinate);
    anything else raises GraphError.
    """
    ns = _simplex_indices(g)
    s = len(ns)
    n = g.n
    radix = [math.prod(ns[i + 1 :]) for i in range(s)]

    def digits(v: int) -> list[int]:
        return [(v // radix[i]) % ns[i] for i in range(s)]

    digs = [digits(v) for v in range(n)]
    ps: list[Matrix] = []
    for i in range(1, s + 2):
        scale = Fraction(1, math.prod(ns[i - 1 :]))
        ps.append(
            [
                [
                    scale if digs[a][: i - 1] == digs[b][: i - 1] else Fraction(0)
                    for b in range(n)
                ]
                for a in range(n)
            ]
        )
    incidences: list[Matrix] = []
    for c in g.components:
        mat = [[Fraction(0)] * n for _ in range(n)]
        for a, b in c.pairs:
            mat[a][b] = mat[b][a] = Fraction(1)
        incidences.append(mat)
    return check_landau_relations(ps, ns, incidences)


# ---------------------------------------------------------------------------
# The pipeline.


def _oriented_cycle_length(g: ColoredGraph) -> int | None:
    if len(g.components) != 1 or g.components[0].kind != ORIENTED:
        return None
    succ: dict[int, int] = {}
    for i, j in g.components[0].pairs:
        if i in succ:
            return None
        succ[i] = j
    if len(succ) != g.n or len(set(succ.values())) != g.n:
        return None
    v, steps = 0, 0
    while True:
        v = succ[v]
        steps += 1
        if v == 0:
            break
        if steps > g.n:
            return None
    return g.n if steps == g.n else None


def _closed_form_candidates(n: int) -> list[tuple[str, PoincareSeries]]:
    out: list[tuple[str, PoincareSeries]] = []
    for s in range(1, 5):
        out.append((f"fuss-catalan({s})", FussCatalan(s)))
    for m in range(1, max(n, 4) + 1):
        out.append((f"dihedral({m})", DihedralSeries(m)))
        out.append((f"cyclic-group({m})", CyclicGroupSeries(m)))
    out.append(("cube product", CubeSeries()))
    return out


def classify(g: ColoredGraph, cfg: ClosureConfig | None = None) -> Classification:
    """Run the recognition pipeline and return a tagged classification.

    The order matters: complement normalization first so every later rule
    sees the sparser representative, then oriented cycles, Fuss-Catalan
    shapes, the circulant criterion, tensor splitting, and the raw
    dimension fallback. The trail records one line per rule.
    """
    if cfg is None:
        cfg = ClosureConfig(max_level=4)
    validate(g)
    trail: list[str] = []

    aut = automorphism_group(g)
    transitive = aut.is_transitive()
    loops_ok, bad_len, bad_label = loop_rule_check(g)
    screen = "transitive" if transitive else "not transitive"
    if loops_ok:
        screen += ", loop counts constant through length 6"
    else:
        screen += f", loop counts uneven at length {bad_len} in color {bad_label}"
    trail.append(f"screen: {screen}")

    work = g
    if (
        len(g.components) == 1
        and g.components[0].kind == UNORIENTED
        and 4 * g.edge_count() > g.n * (g.n - 1)
    ):
        work = complement(g)
        trail.append(
            f"complement: denser than half, continuing on the complement "
            f"({work.edge_count()} edges)"
        )
    else:
        trail.append("complement: kept as given")

    cyc = _oriented_cycle_length(work)
    if cyc is not None:
        trail.append(f"oriented cycle: full directed {cyc}-cycle")
        return Classification(
            kind="cyclic_group",
            trail=tuple(trail),
            series=CyclicGroupSeries(cyc),
            n=cyc,
        )
    trail.append("oriented cycle: not one")

    match = recognize_fuss_catalan(work)
    if match is not None:
        inner = ",".join(str(m) for m in match.indices)
        trail.append(f"fuss-catalan: {match.rule}, indices ({inner})")
        series: PoincareSeries | None
        prefix: tuple[int, ...] | None = None
        converged = None
        if len(match.indices) == 1:
            series = tl_series(match.indices[0])
        elif match.generic:
            series = FussCatalan(len(match.indices))
        else:
            series = None
            res = closure(work, cfg)
            prefix = tuple(res.dims)
            converged = res.converged
            trail.append(
                "series: no closed form for small indices, computed dims "
                + ",".join(map(str, prefix))
            )
        return Classification(
            kind="fuss_catalan",
            trail=tuple(trail),
            series=series,
            prefix=prefix,
            indices=match.indices,
            generic=match.generic,
            converged=converged,
        )
    trail.append("fuss-catalan: no match")

    if len(work.components) == 1 and work.components[0].kind == UNORIENTED:
        verdict = cyclic_criterion(work)
        if verdict.accepted:
            shown = ", ".join(str(v) for v in verdict.values)
            trail.append(f"cyclic: accepted, circulant values {shown}")
            return Classification(
                kind="dihedral",
                trail=tuple(trail),
                series=DihedralSeries(verdict.n),
                n=verdict.n,
            )
        trail.append(f"cyclic: {verdict.reason}")
    else:
        trail.append("cyclic: needs exactly one unoriented color")

    if (
        len(work.components) == 1
        and work.components[0].kind == UNORIENTED
        and work.n >= 4
    ):
        hit: ProductVerdict | None = None
        for n1 in range(2, int(math.isqrt(work.n)) + 1):
            if work.n % n1 != 0:
                continue
            n2 = work.n // n1
            for y in product_factor_candidates(n1):
                for z in product_factor_candidates(n2):
                    verdict = product_test(work, y, z, cfg)
                    if verdict.accepted:
                        hit = verdict
                        break
                if hit:
                    break
            if hit:
                break
        if hit is not None:
            assert hit.classification is not None
            return replace(
                hit.classification,
                trail=tuple(trail) + hit.classification.trail,
            )
        trail.append("product: no admissible splitting")
    else:
        trail.append("product: not attempted")

    res = closure(work, cfg)
    prefix = tuple(res.dims)
    trail.append("series: computed dims " + ",".join(map(str, prefix)))
    if len(prefix) >= 4:
        hits = [
            name
            for name, series in _closed_form_candidates(work.n)
            if all(series.coefficient(k) == prefix[k] for k in range(len(prefix)))
        ]
        if hits:
            trail.append(
                "series: consistent with " + ", ".join(hits) + " on this prefix"
            )
    return Classification(
        kind="unknown",
        trail=tuple(trail),
        prefix=prefix,
        converged=res.converged,
    )


# ---------------------------------------------------------------------------
# Enumeration of homogeneous graphs.


@dataclass(frozen=True)
class EnumeratedGraph:
    n: int
    graph: ColoredGraph
    classification: Classification


@dataclass(frozen=True)
class EnumerationReport:
    max_n: int
    entries: tuple[EnumeratedGraph, ...]

    @property
    def total(self) -> int:
        return len(self.entries)

    def per_n(self) -> dict[int, list[EnumeratedGraph]]:
        out: dict[int, list[EnumeratedGraph]] = {}
        for e in self.entries:
            out.setdefault(e.n, []).append(e)
        return out

    def class_tally(self) -> dict[str, int]:
        tally: dict[str, int] = {}
        for e in self.entries:
            kind = e.classification.kind
            tally[kind] = tally.get(kind, 0) + 1
        return tally


def enumerate_homogeneous(
    max_n: int = 8, cfg: ClosureConfig | None = None
) -> EnumerationReport:
    """All vertex-transitive graphs on up to max_n vertices, classified.

    Regular graphs are enumerated up to isomorphism for degrees up to
    (n−1)/2, the vertex-transitive ones kept, the set closed under
    complementation, and every member classified. Complement partners
    share one classification run since their symmetries agree.
    """
    if not 1 <= max_n <= 9:
        raise ValueError("enumeration is limited to 9 vertices")
    if cfg is None:
        cfg = ClosureConfig(max_level=4)
    entries: list[EnumeratedGraph] = []
    cache: dict[bytes, Classification] = {}
    for n in range(1, max_n + 1):
        pool: dict[bytes, ColoredGraph] = {}
        for g in regular_graph_reps(n):
            if not automorphism_group(g).is_transitive():
                continue
            pool[canonical_key(g)] = g
            comp = complement(g)
            key, canon = _canonical_adjacency(_plain_adjacency(comp))
            pool.setdefault(bytes([n]) + key, _graph_from_adjacency(canon))
        for key in sorted(pool):
            g = pool[key]
            dense = 4 * g.edge_count() > g.n * (g.n - 1)
            norm = complement(g) if dense else g
            norm_key = canonical_key(norm)
            if norm_key not in cache:
                cache[norm_key] = classify(norm, cfg)
            cls = cache[norm_key]
            if dense:
                cls = replace(
                    cls,
                    trail=("complement: classified via the sparser complement",)
                    + cls.trail,
                )
            entries.append(EnumeratedGraph(n=n, graph=g, classification=cls))
    return EnumerationReport(max_n=max_n, entries=tuple(entries))
