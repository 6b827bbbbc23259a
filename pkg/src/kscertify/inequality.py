"""State-independent noncontextuality inequality synthesized from a ray set.

Give every ray the weight w_i = number of complete bases that contain it and
every orthogonal pair the weight w_ij = max(w_i, w_j).  For noncontextual
hidden-variable models the functional

    W = sum_i w_i P_i - sum_(i,j) w_ij P_i P_j

is bounded by the weighted independence number alpha(G, w) of the
compatibility graph, because within one basis at most one projector can take
value 1.  Quantum mechanically the weighted projectors of N bases sum to
N times the identity, so W = N for every state.  A strict gap alpha < N
certifies the ray set as an original KS set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .rayset import CompatibilityGraph, ProblemInstance, covered_vertices

WeightVector = tuple[int, ...]


def compute_weights(instance: ProblemInstance) -> WeightVector:
    """Per-vertex basis cover counts; their sum is the total basis size."""
    weights = [0] * instance.graph.vertex_count
    for basis in instance.bases:
        for v in basis:
            weights[v] += 1
    return tuple(weights)


def edge_weights(
    weights: WeightVector, graph: CompatibilityGraph
) -> dict[tuple[int, int], int]:
    """The minimal admissible edge weights max(w_i, w_j)."""
    if len(weights) != graph.vertex_count:
        raise ValueError("weight vector length does not match vertex count")
    return {(i, j): max(weights[i], weights[j]) for i, j in graph.sorted_edges()}


def _adjacency_masks(graph: CompatibilityGraph) -> list[int]:
    masks = [0] * graph.vertex_count
    for i, j in graph.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return masks


def _validate_weights(weights: WeightVector, n: int) -> None:
    if len(weights) != n:
        raise ValueError("weight vector length does not match vertex count")
    for w in weights:
        if not isinstance(w, int) or isinstance(w, bool) or w < 0:
            raise ValueError("weights must be nonnegative integers")


def weighted_independence_number(
    graph: CompatibilityGraph,
    weights: WeightVector,
    bound: str = "clique_cover",
) -> int:
    """Exact maximum total weight of an independent set, by branch and bound.

    ``bound`` selects the admissible pruning bound: "clique_cover" covers the
    remaining candidates greedily by cliques and adds the heaviest vertex of
    each, "weight_sum" simply adds all remaining weights.  Both are upper
    bounds on what the remaining candidates can contribute, so the returned
    value is exact either way; the choice only affects the search size.
    """
    n = graph.vertex_count
    _validate_weights(weights, n)
    if bound not in ("clique_cover", "weight_sum"):
        raise ValueError(f"unknown bound function {bound!r}")
    adj = _adjacency_masks(graph)
    order = sorted(range(n), key=lambda v: (-weights[v], v))

    def bound_weight_sum(mask: int) -> int:
        total = 0
        for v in order:
            if mask & (1 << v):
                total += weights[v]
        return total

    def bound_clique_cover(mask: int) -> int:
        clique_masks: list[int] = []
        total = 0
        for v in order:
            bit = 1 << v
            if not mask & bit:
                continue
            for k, cm in enumerate(clique_masks):
                if cm & ~adj[v] == 0:
                    clique_masks[k] = cm | bit
                    break
            else:
                clique_masks.append(bit)
                total += weights[v]  # heaviest member: order is by weight
        return total

    bound_fn = bound_clique_cover if bound == "clique_cover" else bound_weight_sum

    # Greedy independent set gives the initial lower bound.
    best = 0
    taken = 0
    blocked = 0
    for v in order:
        bit = 1 << v
        if not blocked & bit:
            taken += weights[v]
            blocked |= bit | adj[v]
    best = taken

    def dfs(mask: int, current: int) -> None:
        nonlocal best
        if current > best:
            best = current
        if mask == 0:
            return
        if current + bound_fn(mask) <= best:
            return
        v = next(u for u in order if mask & (1 << u))
        bit = 1 << v
        dfs(mask & ~bit & ~adj[v], current + weights[v])
        dfs(mask & ~bit, current)

    dfs((1 << n) - 1, 0)
    return best


def brute_force_alpha(graph: CompatibilityGraph, weights: WeightVector) -> int:
    """Independent oracle: evaluate every one of the 2^n vertex subsets.

    Restricted to 25 vertices.  Subsets are built up one vertex at a time;
    a subset is independent iff the subset without its highest vertex is
    independent and that vertex has no neighbor among the rest.
    """
    n = graph.vertex_count
    _validate_weights(weights, n)
    if n > 25:
        raise ValueError(f"brute force is limited to 25 vertices, got {n}")
    low_adj = [0] * n
    for i, j in graph.edges:
        low_adj[max(i, j)] |= 1 << min(i, j)
    independent = np.ones(1, dtype=bool)
    total = np.zeros(1, dtype=np.int32)
    for k in range(n):
        prefixes = np.arange(1 << k, dtype=np.uint32)
        compatible = (prefixes & np.uint32(low_adj[k])) == 0
        independent = np.concatenate([independent, independent & compatible])
        total = np.concatenate([total, total + np.int32(weights[k])])
    return int(total[independent].max())


@dataclass(frozen=True)
class Inequality:
    """Vertex and edge weights with the classical and quantum values."""

    vertex_weights: WeightVector
    edge_terms: tuple[tuple[int, int, int], ...]
    classical_bound: int
    quantum_value: int

    def __post_init__(self) -> None:
        for i, j, w in self.edge_terms:
            if w < max(self.vertex_weights[i], self.vertex_weights[j]):
                raise ValueError(
                    f"edge weight {w} on ({i}, {j}) is below max(w_i, w_j)"
                )
        if list(self.edge_terms) != sorted(self.edge_terms):
            raise ValueError("edge terms must be sorted")
        if self.classical_bound > self.quantum_value:
            raise ValueError("classical bound cannot exceed the quantum value")


def _pruned_weights(instance: ProblemInstance) -> WeightVector:
    if not instance.bases:
        raise ValueError("instance has no complete basis")
    weights = compute_weights(instance)
    if any(w == 0 for w in weights):
        raise ValueError(
            "instance has rays outside every basis; run prune_unbased first"
        )
    return weights


def build_inequality(instance: ProblemInstance) -> Inequality:
    """Synthesize the inequality of a pruned instance.

    Requires every vertex to lie in at least one basis (zero-weight terms
    would be dead weight); raises ValueError advising to prune otherwise.
    """
    weights = _pruned_weights(instance)
    ew = edge_weights(weights, instance.graph)
    alpha = weighted_independence_number(instance.graph, weights)
    return Inequality(
        vertex_weights=weights,
        edge_terms=tuple((i, j, w) for (i, j), w in sorted(ew.items())),
        classical_bound=alpha,
        quantum_value=instance.n_bases,
    )


@dataclass(frozen=True)
class GapReport:
    """Classical/quantum comparison for one pruned instance."""

    quantum_value: int
    classical_bound: int
    gap: int
    is_original_ks: bool


def gap_report(instance: ProblemInstance) -> GapReport:
    """The gap N - alpha; a strictly positive gap certifies an original KS set."""
    weights = _pruned_weights(instance)
    alpha = weighted_independence_number(instance.graph, weights)
    n_bases = instance.n_bases
    return GapReport(
        quantum_value=n_bases,
        classical_bound=alpha,
        gap=n_bases - alpha,
        is_original_ks=n_bases - alpha >= 1,
    )


@dataclass(frozen=True, eq=False)
class StateSpec:
    """A quantum state: maximally mixed, seeded random pure, or explicit."""

    kind: str
    seed: int | None = None
    matrix: np.ndarray | None = None

    @classmethod
    def maximally_mixed(cls) -> StateSpec:
        return cls(kind="mixed")

    @classmethod
    def random_pure(cls, seed: int) -> StateSpec:
        return cls(kind="random_pure", seed=seed)

    @classmethod
    def explicit(cls, matrix: np.ndarray) -> StateSpec:
        return cls(kind="explicit", matrix=np.asarray(matrix, dtype=complex))


def _density_matrix(state: StateSpec, dimension: int) -> np.ndarray:
    if state.kind == "mixed":
        return np.eye(dimension, dtype=complex) / dimension
    if state.kind == "random_pure":
        rng = np.random.default_rng(state.seed)
        psi = rng.standard_normal(dimension) + 1j * rng.standard_normal(dimension)
        psi /= np.linalg.norm(psi)
        return np.outer(psi, psi.conj())
    if state.kind == "explicit":
        rho = state.matrix
        if rho is None or rho.shape != (dimension, dimension):
            raise ValueError(f"density matrix must be {dimension}x{dimension}")
        if np.max(np.abs(rho - rho.conj().T)) > 1e-9:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(rho) - 1.0) > 1e-9:
            raise ValueError("density matrix trace is not 1")
        if np.linalg.eigvalsh(rho).min() < -1e-9:
            raise ValueError("density matrix is not positive semidefinite")
        return rho
    raise ValueError(f"unknown state kind {state.kind!r}")


def _unit_ray_matrix(instance: ProblemInstance) -> np.ndarray:
    if instance.rayset is None:
        raise ValueError("instance carries no ray set")
    rows = np.array([ray.to_floats() for ray in instance.rayset.rays])
    return rows / np.linalg.norm(rows, axis=1, keepdims=True)


def quantum_value(
    instance: ProblemInstance, inequality: Inequality, state: StateSpec
) -> float:
    """Evaluate the inequality functional W on a quantum state.

    The edge operators pair orthogonal projectors, so their expectations
    vanish identically and W reduces to the weighted sum of projector
    expectations sum_i w_i Tr(rho Pi_i).
    """
    rows = _unit_ray_matrix(instance)
    if len(inequality.vertex_weights) != rows.shape[0]:
        raise ValueError("inequality does not match the instance")
    rho = _density_matrix(state, rows.shape[1])
    expectations = np.einsum("ij,jk,ik->i", rows.conj(), rho, rows).real
    return float(np.dot(inequality.vertex_weights, expectations))


class _QuadFraction:
    """Rational quadratic field element p + q*sqrt(m) used for the exact
    operator-sum accumulation (ray norms rarely divide the outer products)."""

    __slots__ = ("p", "q", "m")

    def __init__(self, p: Fraction, q: Fraction, m: int) -> None:
        self.p, self.q, self.m = p, q, m

    def add(self, other: _QuadFraction) -> _QuadFraction:
        return _QuadFraction(self.p + other.p, self.q + other.q, self.m)

    def mul(self, other: _QuadFraction) -> _QuadFraction:
        return _QuadFraction(
            self.p * other.p + self.m * self.q * other.q,
            self.p * other.q + self.q * other.p,
            self.m,
        )

    def inverse(self) -> _QuadFraction:
        norm = self.p * self.p - self.m * self.q * self.q
        return _QuadFraction(self.p / norm, -self.q / norm, self.m)

    def equals(self, p: int, q: int) -> bool:
        return self.p == p and self.q == q


def operator_sum_check(instance: ProblemInstance, weights: WeightVector) -> bool:
    """Verify sum_i w_i |u_i><u_i| / <u_i|u_i> = N * identity.

    Exact ray sets are checked with exact field arithmetic; numeric ray sets
    to an absolute tolerance of 1e-12.
    """
    rayset = instance.rayset
    if rayset is None:
        raise ValueError("instance carries no ray set")
    _validate_weights(weights, len(rayset.rays))
    d = rayset.dimension
    n_bases = instance.n_bases
    if rayset.mode.is_exact:
        m = rayset.mode.disc or 1
        zero = _QuadFraction(Fraction(0), Fraction(0), m)
        entries = [[zero for _ in range(d)] for _ in range(d)]
        for w, ray in zip(weights, rayset.rays):
            if w == 0:
                continue
            coords = [
                _QuadFraction(Fraction(c.rat_part), Fraction(c.irr_part), m)
                for c in ray.coords
            ]
            norm = zero
            for c in coords:
                norm = norm.add(c.mul(c))
            scale = norm.inverse()
            w_f = _QuadFraction(Fraction(w), Fraction(0), m)
            for j in range(d):
                for k in range(j, d):
                    term = coords[j].mul(coords[k]).mul(scale).mul(w_f)
                    entries[j][k] = entries[j][k].add(term)
        for j in range(d):
            for k in range(j, d):
                target = (n_bases, 0) if j == k else (0, 0)
                if not entries[j][k].equals(*target):
                    return False
        return True
    rows = _unit_ray_matrix(instance)
    total = (rows.T * np.asarray(weights)) @ rows
    return bool(np.max(np.abs(total - n_bases * np.eye(d))) <= 1e-12)
