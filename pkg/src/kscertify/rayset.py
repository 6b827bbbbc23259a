"""Ray-set validation, the orthogonality graph, and complete-basis enumeration.

A validated ray set induces a compatibility graph whose vertices are rays and
whose edges join orthogonal pairs.  In dimension d a complete measurement
basis is a set of d mutually orthogonal rays, i.e. a d-clique of the graph.
The problem instance bundles the ray set with its graph and the full list of
bases; rays that belong to no basis can be pruned without changing any
certification verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .algebra import DEFAULT_TOLERANCE, RayVector, canonicalize_ray, is_orthogonal


class DuplicateRayError(ValueError):
    """Two input rays are colinear and collapse to the same canonical ray."""

    def __init__(self, index_a: int, index_b: int) -> None:
        self.index_a = index_a
        self.index_b = index_b
        super().__init__(f"rays {index_a} and {index_b} are colinear duplicates")


class InvalidGeometryError(ValueError):
    """More mutually orthogonal rays were found than the dimension allows."""


@dataclass(frozen=True, slots=True)
class ScalarMode:
    """Coordinate field of a ray set: exact ring Z[sqrt(disc)] or floats."""

    kind: str
    disc: int | None = None
    tol: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("exact", "numeric"):
            raise ValueError(f"unknown scalar mode {self.kind!r}")

    @classmethod
    def exact(cls, disc: int) -> ScalarMode:
        return cls("exact", disc=disc)

    @classmethod
    def integer(cls) -> ScalarMode:
        return cls("exact", disc=1)

    @classmethod
    def numeric(cls, tol: float = DEFAULT_TOLERANCE) -> ScalarMode:
        return cls("numeric", tol=tol)

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"


@dataclass(frozen=True, slots=True)
class RaySet:
    """A named, validated list of canonical rays of one dimension and mode."""

    name: str
    dimension: int
    mode: ScalarMode
    rays: tuple[RayVector, ...]


def validate_rayset(rays: Sequence[RayVector], name: str, mode: ScalarMode) -> RaySet:
    """Canonicalize and cross-check candidate rays into a RaySet.

    Raises ValueError for an empty list, dimension below 3, inconsistent
    dimensions, or rays that do not match the declared scalar mode, and
    DuplicateRayError (naming both indices) for colinear duplicates.
    """
    if len(rays) == 0:
        raise ValueError("ray set is empty")
    dimension = rays[0].dimension
    if dimension < 3:
        raise ValueError(f"dimension {dimension} is below 3")
    for i, ray in enumerate(rays):
        if ray.dimension != dimension:
            raise ValueError(f"ray {i} has dimension {ray.dimension}, expected {dimension}")
        if ray.exact != mode.is_exact:
            raise ValueError(f"ray {i} does not match scalar mode {mode.kind}")
        if mode.is_exact and ray.disc != mode.disc:
            raise ValueError(
                f"ray {i} has discriminant {ray.disc}, expected {mode.disc}"
            )
    canonical = tuple(canonicalize_ray(r) for r in rays)
    if mode.is_exact:
        seen: dict[tuple, int] = {}
        for i, ray in enumerate(canonical):
            key = tuple((c.rat_part, c.irr_part) for c in ray.coords)
            if key in seen:
                raise DuplicateRayError(seen[key], i)
            seen[key] = i
    else:
        # Canonical numeric rays are unit vectors, so colinearity within the
        # angular tolerance reads directly off the inner product.
        for j in range(len(canonical)):
            for i in range(j):
                dot = sum(a * b for a, b in zip(canonical[i].coords, canonical[j].coords))
                if abs(dot) > 1.0 - 1e-9:
                    raise DuplicateRayError(i, j)
    return RaySet(name=name, dimension=dimension, mode=mode, rays=canonical)


@dataclass(frozen=True)
class CompatibilityGraph:
    """Graph on ray indices with an edge for every orthogonal pair."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for i, j in self.edges:
            if not (0 <= i < j < self.vertex_count):
                raise ValueError(f"edge ({i}, {j}) is not an ordered vertex pair")

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbors: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for i, j in self.edges:
            neighbors[i].add(j)
            neighbors[j].add(i)
        return tuple(frozenset(s) for s in neighbors)

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def build_graph(rayset: RaySet) -> CompatibilityGraph:
    """Compute the orthogonality graph of a ray set.

    Exact rays compare inner products to zero in the ring; numeric rays use
    the relative tolerance carried by the scalar mode.
    """
    tol = rayset.mode.tol if rayset.mode.tol is not None else DEFAULT_TOLERANCE
    edges = set()
    n = len(rayset.rays)
    for j in range(n):
        for i in range(j):
            if is_orthogonal(rayset.rays[i], rayset.rays[j], tol=tol):
                edges.add((i, j))
    return CompatibilityGraph(vertex_count=n, edges=frozenset(edges))


Basis = tuple[int, ...]


def enumerate_bases(rayset: RaySet, graph: CompatibilityGraph) -> tuple[Basis, ...]:
    """List every complete basis (d-clique of the graph) in lexicographic order.

    Every d-clique must be maximal: a clique of more than d mutually
    orthogonal rays is geometrically impossible in dimension d and raises
    InvalidGeometryError (it can only arise from a degenerate numeric input).
    """
    d = rayset.dimension
    adjacency = graph.adjacency
    n = graph.vertex_count
    found: list[Basis] = []

    def extend(clique: list[int], candidates: list[int]) -> None:
        if len(clique) == d:
            for v in range(n):
                if v not in clique and all(v in adjacency[u] for u in clique):
                    raise InvalidGeometryError(
                        f"rays {clique + [v]} are mutually orthogonal, exceeding dimension {d}"
                    )
            found.append(tuple(clique))
            return
        for idx, v in enumerate(candidates):
            rest = [w for w in candidates[idx + 1:] if w in adjacency[v]]
            if len(clique) + 1 + len(rest) >= d:
                extend(clique + [v], rest)

    extend([], list(range(n)))
    return tuple(found)


@dataclass(frozen=True)
class ProblemInstance:
    """A ray set together with its compatibility graph and basis list.

    ``rayset`` may be None for synthetic instances used in combinatorial
    tests; the quantum-side operations require actual rays.
    """

    rayset: RaySet | None
    graph: CompatibilityGraph
    bases: tuple[Basis, ...]

    @property
    def n_bases(self) -> int:
        return len(self.bases)


def build_instance(rayset: RaySet) -> ProblemInstance:
    graph = build_graph(rayset)
    bases = enumerate_bases(rayset, graph)
    return ProblemInstance(rayset=rayset, graph=graph, bases=bases)


def covered_vertices(instance: ProblemInstance) -> list[int]:
    """Vertices that occur in at least one complete basis, ascending."""
    covered = set()
    for basis in instance.bases:
        covered.update(basis)
    return sorted(covered)


def prune_unbased(instance: ProblemInstance) -> ProblemInstance:
    """Restrict an instance to the rays covered by at least one basis.

    Vertices are reindexed in ascending order of their old index; the basis
    list is unchanged up to that reindexing.  Raises ValueError when no
    vertex lies in any basis.  Idempotent.
    """
    kept = covered_vertices(instance)
    if not kept:
        raise ValueError("empty after pruning: no ray belongs to any complete basis")
    if len(kept) == instance.graph.vertex_count:
        return instance
    new_index = {old: new for new, old in enumerate(kept)}
    keep = set(kept)
    edges = frozenset(
        (new_index[i], new_index[j])
        for i, j in instance.graph.edges
        if i in keep and j in keep
    )
    graph = CompatibilityGraph(vertex_count=len(kept), edges=edges)
    bases = tuple(tuple(new_index[v] for v in basis) for basis in instance.bases)
    rayset = instance.rayset
    if rayset is not None:
        rayset = RaySet(
            name=rayset.name,
            dimension=rayset.dimension,
            mode=rayset.mode,
            rays=tuple(rayset.rays[old] for old in kept),
        )
    return ProblemInstance(rayset=rayset, graph=graph, bases=bases)
