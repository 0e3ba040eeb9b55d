"""Ordinary automorphism groups of colored graphs and their fixed-point data.

Permutations are tuples p of length n with p[i] = image of i. The group
object keeps the full element list (the graphs here are small) plus a
greedy generating set.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .graphs import ColoredGraph, ColorComponent, _iso_search
from .linalg import ExactMatrix

Permutation = tuple[int, ...]

_ELEMENT_CAP = 1_000_000


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p after q): i -> p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


class PermutationGroup:
    """Generators plus the exact order; the element list is materialized
    only on demand because it can dwarf the generating data."""

    def __init__(self, n: int, generators: tuple[Permutation, ...], order: int):
        self.n = n
        self.generators = generators
        self.order = order

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        if self.order > _ELEMENT_CAP:
            raise ValueError(
                f"group of order {self.order} is too large to enumerate"
            )
        return tuple(sorted(_close(self.n, list(self.generators))))

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)

    def orbit(self, v: int) -> set[int]:
        seen = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for gen in self.generators:
                y = gen[x]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.n


def _close(n: int, gens: list[Permutation]) -> set[Permutation]:
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = compose(g, p)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return seen


def automorphism_group(g: ColoredGraph) -> PermutationGroup:
    """All vertex permutations preserving every color component setwise
    (arcs with their orientation).

    Works down the stabilizer chain of the point sequence 0, 1, ..., n-1:
    at stage i one pinned search per candidate image finds a coset
    representative moving i while fixing everything earlier. The
    representatives found across all stages generate the group, and the
    orbit sizes multiply to its exact order.
    """
    comps = list(g.components)
    identity = tuple(range(g.n))
    gens: list[Permutation] = []
    order = 1
    for i in range(g.n):
        pins = [(v, v) for v in range(i)]
        orbit_size = 1
        for w in range(g.n):
            if w == i:
                continue
            hit = _iso_search(g.n, comps, comps, pins=pins + [(i, w)])
            if hit is not None:
                orbit_size += 1
                if hit not in gens and hit != identity:
                    gens.append(hit)
        order *= orbit_size
    return PermutationGroup(g.n, tuple(gens), order)


def fixed_point_histogram(group: PermutationGroup) -> dict[int, int]:
    """How many elements fix exactly m vertices, for each occurring m."""
    hist: dict[int, int] = {}
    for p in group.elements:
        m = sum(1 for i, img in enumerate(p) if i == img)
        hist[m] = hist.get(m, 0) + 1
    return hist


def fixed_point_counts(group: PermutationGroup) -> list[int]:
    return [sum(1 for i, img in enumerate(p) if i == img) for p in group.elements]


def classical_series_coefficient(group: PermutationGroup, k: int) -> Fraction:
    """Average of (number of fixed vertices)^k over the group; for k = 0
    this is 1 (empty product), matching the convention c_0 = 1."""
    total = sum(
        Fraction(m) ** k if k > 0 else Fraction(1) for m in fixed_point_counts(group)
    )
    return total / group.order


def classical_series_prefix(group: PermutationGroup, count: int) -> list[Fraction]:
    return [classical_series_coefficient(group, k) for k in range(count)]


@dataclass(frozen=True)
class ClassicalCoaction:
    """The permutation-group magic matrix: entry (i, j) is the indicator
    function of {g : g(j) = i}, stored as a bitmask over the element list."""

    group: PermutationGroup
    masks: tuple[tuple[int, ...], ...]

    @staticmethod
    def build(group: PermutationGroup) -> "ClassicalCoaction":
        n = group.n
        masks = [[0] * n for _ in range(n)]
        for idx, p in enumerate(group.elements):
            for j in range(n):
                masks[p[j]][j] |= 1 << idx
        return ClassicalCoaction(group, tuple(tuple(r) for r in masks))

    def is_magic(self) -> bool:
        """Rows and columns are partitions of unity; entries idempotent.

        Bitmask indicators are idempotent by construction, so the content
        here is that each row and column ORs to everything, disjointly.
        """
        full = (1 << self.group.order) - 1
        n = self.group.n
        for i in range(n):
            row = col = 0
            for j in range(n):
                if row & self.masks[i][j] or col & self.masks[j][i]:
                    return False
                row |= self.masks[i][j]
                col |= self.masks[j][i]
            if row != full or col != full:
                return False
        return True

    def commutes_with(self, d: ExactMatrix) -> bool:
        """dv = vd as matrices of functions on the group, checked entrywise
        per group element. This is the coaction-invariance equation."""
        n = self.group.n
        if d.nrows != n or d.ncols != n:
            raise ValueError("matrix size does not match the group degree")
        for p in self.group.elements:
            pinv = inverse(p)
            for i in range(n):
                for j in range(n):
                    # (dv)_{ij}(g) = d_{i, g(j)};  (vd)_{ij}(g) = d_{g^{-1}(i), j}
                    if d[i, p[j]] != d[pinv[i], j]:
                        return False
        return True


def invariance_by_relabeling(group: PermutationGroup, d: ExactMatrix) -> bool:
    """Direct route: d is invariant iff d[g(i), g(j)] = d[i, j] for all g."""
    n = group.n
    for p in group.elements:
        for i in range(n):
            for j in range(n):
                if d[p[i], p[j]] != d[i, j]:
                    return False
    return True
