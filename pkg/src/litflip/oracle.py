"""Brute-force ground truth over the full state space.

States are integers 0..2^n-1 (bit i = vertex s_{i+1}).  The strict-move
relation is symmetric (a move never flips its own vertex, so it stays legal
for the way back), which lets connected_components stand in for an explicit
BFS when only the partition is needed.  Witness searches run a layered BFS
with parent tracking, processing generators in increasing vertex order so the
output is deterministic.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .basis import pi_system
from .classify import SIDE_UBAR, OrbitTable, basis_for, orbit_count_formula, orbit_table
from .core import CapExceededError, GraphSpec, VertexOutOfRangeError, apply_move, validate_graph

DEFAULT_CAP = 20
GROUP_CLOSURE_CAP = 100_000_000


def oracle_cap() -> int:
    return int(os.environ.get("LITFLIP_ORACLE_CAP", str(DEFAULT_CAP)))


def _check_cap(g: GraphSpec, cap: int | None) -> None:
    limit = oracle_cap() if cap is None else cap
    if g.n > limit:
        raise CapExceededError(f"n={g.n} exceeds the oracle cap {limit}")


def _check_generators(g: GraphSpec, generators: Sequence[int] | None) -> tuple[int, ...]:
    if generators is None:
        return tuple(range(1, g.n + 1))
    gens = tuple(sorted(set(generators)))
    for v in gens:
        if not 1 <= v <= g.n:
            raise VertexOutOfRangeError(f"generator {v} outside [1, {g.n}]")
    return gens


@dataclass
class OrbitPartition:
    """Partition of all 2^n states, with per-block size and min Hamming weight."""

    n: int
    generators: tuple[int, ...]
    labels: np.ndarray
    sizes: np.ndarray
    min_hamming: np.ndarray
    representatives: np.ndarray

    @property
    def n_blocks(self) -> int:
        return len(self.sizes)

    def block_of(self, u: int) -> int:
        return int(self.labels[u])

    def members(self, block: int) -> np.ndarray:
        return np.nonzero(self.labels == block)[0]

    def size_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(int(s) for s in self.sizes))


def partition_from_pairs(n: int, rows: np.ndarray, cols: np.ndarray,
                         generators: tuple[int, ...] = ()) -> OrbitPartition:
    """Components of the undirected graph on all 2^n states with the given edges."""
    size = 1 << n
    data = np.ones(len(rows), dtype=np.uint8)
    m = coo_matrix((data, (rows, cols)), shape=(size, size))
    _, labels = connected_components(m, directed=False)
    states = np.arange(size, dtype=np.uint32)
    pop = np.bitwise_count(states)
    count = int(labels.max()) + 1
    sizes = np.bincount(labels, minlength=count)
    minw = np.full(count, n + 1, dtype=np.int64)
    np.minimum.at(minw, labels, pop.astype(np.int64))
    _, first = np.unique(labels, return_index=True)
    return OrbitPartition(n, generators, labels, sizes, minw, first.astype(np.uint32))


def move_edges(g: GraphSpec, generators: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """(source, target) arrays for every legal strict move by the given generators."""
    states = np.arange(1 << g.n, dtype=np.uint32)
    rows, cols = [], []
    for v in generators:
        legal = states[(states >> np.uint32(v - 1)) & np.uint32(1) == 1]
        rows.append(legal)
        cols.append(legal ^ np.uint32(g.move_masks[v]))
    return np.concatenate(rows), np.concatenate(cols)


def bfs_partition(g: GraphSpec, generators: Sequence[int] | None = None,
                  cap: int | None = None) -> OrbitPartition:
    _check_cap(g, cap)
    gens = _check_generators(g, generators)
    rows, cols = move_edges(g, gens)
    return partition_from_pairs(g.n, rows, cols, gens)


def _bfs_tree(g: GraphSpec, start: int,
              gens: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    size = 1 << g.n
    dist = np.full(size, -1, dtype=np.int32)
    parent_state = np.zeros(size, dtype=np.uint32)
    parent_move = np.zeros(size, dtype=np.int8)
    dist[start] = 0
    frontier = np.array([start], dtype=np.uint32)
    d = 0
    while frontier.size:
        layer = []
        for v in gens:
            src = frontier[(frontier >> np.uint32(v - 1)) & np.uint32(1) == 1]
            dst = src ^ np.uint32(g.move_masks[v])
            fresh = dist[dst] < 0
            src, dst = src[fresh], dst[fresh]
            dist[dst] = d + 1
            parent_state[dst] = src
            parent_move[dst] = v
            layer.append(dst)
        frontier = np.concatenate(layer) if layer else np.empty(0, dtype=np.uint32)
        d += 1
    return dist, parent_state, parent_move


def find_witness(g: GraphSpec, u: int, v: int, generators: Sequence[int] | None = None,
                 cap: int | None = None) -> list[int] | None:
    """A shortest legal move sequence from u to v, or None; replay-checked."""
    _check_cap(g, cap)
    gens = _check_generators(g, generators)
    if u == v:
        return []
    dist, parent_state, parent_move = _bfs_tree(g, u, gens)
    if dist[v] < 0:
        return None
    moves = []
    s = v
    while s != u:
        moves.append(int(parent_move[s]))
        s = int(parent_state[s])
    moves.reverse()
    state = u
    for mv in moves:
        state = apply_move(g, state, mv, strict=True)
    assert state == v and len(moves) == int(dist[v]), "witness replay failed"
    return moves


def distance(g: GraphSpec, u: int, v: int, cap: int | None = None) -> int | None:
    _check_cap(g, cap)
    if u == v:
        return 0
    dist, _, _ = _bfs_tree(g, u, _check_generators(g, None))
    return int(dist[v]) if dist[v] >= 0 else None


def group_order(g: GraphSpec, cap: int = GROUP_CLOSURE_CAP) -> int:
    """Order of the group generated by all move matrices, by breadth-first closure.

    Matrices are row-bitmask tuples; left-multiplying by the move at v XORs
    row v into the rows of v's neighbors (v is never its own neighbor).
    """
    n = g.n
    nb_idx = {v: sorted(a - 1 for a in g.neighbors(v)) for v in range(1, n + 1)}
    identity = tuple(1 << i for i in range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        layer = []
        for mat in frontier:
            for v in range(1, n + 1):
                rows = list(mat)
                rv = rows[v - 1]
                for a in nb_idx[v]:
                    rows[a] ^= rv
                new = tuple(rows)
                if new not in seen:
                    seen.add(new)
                    layer.append(new)
            if len(seen) > cap:
                raise CapExceededError(f"group closure exceeded {cap} elements")
        frontier = layer
    return len(seen)


def _coord_bits(g: GraphSpec) -> tuple[np.ndarray, np.ndarray]:
    """(sw, coset bit) for every state, from the precomputed basis inverse."""
    b = basis_for(g)
    states = np.arange(1 << g.n, dtype=np.uint32)
    sw = np.zeros(states.shape, dtype=np.int64)
    top = np.zeros(states.shape, dtype=np.int64)
    for i, row in enumerate(b.inverse_rows):
        bit = np.bitwise_count(states & np.uint32(row)) & 1
        sw += bit
        if i == g.n - 1 and not b.parity_odd:
            top = bit.astype(np.int64)
    return sw, top


def predicted_state_labels(g: GraphSpec) -> tuple[np.ndarray, "OrbitTableIndex"]:
    """Classifier label index for every state, via weight/side lookup tables."""
    table = orbit_table(g)
    index = OrbitTableIndex(g, table)
    sw, top = _coord_bits(g)
    return index.label_ids(sw, top), index


@dataclass
class OrbitTableIndex:
    graph: GraphSpec
    table: OrbitTable

    def __post_init__(self):
        n = self.graph.n
        self.parity_odd = basis_for(self.graph).parity_odd
        lut_main = np.full(n + 1, -1, dtype=np.int64)
        lut_coset = np.full(n + 1, -1, dtype=np.int64)
        for i, info in enumerate(self.table.orbits):
            target = lut_coset if info.label.side == SIDE_UBAR else lut_main
            for t in info.label.weights:
                target[t] = i
        self.lut_main = lut_main
        self.lut_coset = lut_coset

    def label_ids(self, sw: np.ndarray, top: np.ndarray) -> np.ndarray:
        if self.parity_odd:
            return self.lut_main[sw]
        return np.where(top == 1, self.lut_coset[sw], self.lut_main[sw])


def partitions_equal(a: np.ndarray, b: np.ndarray) -> bool:
    """Whether two labelings of the same index set induce the same partition."""
    ka = len(np.unique(a))
    kb = len(np.unique(b))
    pairs = len(np.unique(a.astype(np.int64) * (int(b.max()) + 1) + b.astype(np.int64)))
    return ka == kb == pairs


def _wp_predicted_key(g: GraphSpec) -> np.ndarray:
    """Predicted path-subgroup orbit key per state: sw, folded with its partner weight."""
    n = g.n
    sw, top = _coord_bits(g)
    b = basis_for(g)
    if b.parity_odd:
        return sw
    key_u = np.minimum(sw, n - sw)
    key_bar = np.minimum(sw, n + 2 - sw)
    return np.where(top == 1, 2 * key_bar + 1, 2 * key_u)


@dataclass(frozen=True)
class VerifyReport:
    n: int
    attach: tuple[int, ...]
    pi1_size: int
    predicted_orbit_count: int
    oracle_orbit_count: int
    predicted_M: int
    oracle_M: int
    partition_match: bool
    sizes_match: bool
    min_weights_match: bool
    count_formula_match: bool
    wp_match: bool

    @property
    def ok(self) -> bool:
        return (
            self.partition_match
            and self.sizes_match
            and self.min_weights_match
            and self.count_formula_match
            and self.wp_match
            and self.predicted_orbit_count == self.oracle_orbit_count
            and self.predicted_M == self.oracle_M
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "attach": list(self.attach),
            "pi1_size": self.pi1_size,
            "predicted_orbit_count": self.predicted_orbit_count,
            "oracle_orbit_count": self.oracle_orbit_count,
            "predicted_M": self.predicted_M,
            "oracle_M": self.oracle_M,
            "partition_match": self.partition_match,
            "sizes_match": self.sizes_match,
            "min_weights_match": self.min_weights_match,
            "count_formula_match": self.count_formula_match,
            "wp_match": self.wp_match,
            "ok": self.ok,
        }


def verify_graph(g: GraphSpec, cap: int | None = None) -> VerifyReport:
    """Check every classification claim for one graph against exhaustive BFS."""
    _check_cap(g, cap)
    pred, index = predicted_state_labels(g)
    table = index.table
    part = bfs_partition(g, cap=cap)
    partition_match = partitions_equal(pred, part.labels)

    sizes_match = True
    min_weights_match = True
    for k in range(part.n_blocks):
        info = table.orbits[int(pred[part.representatives[k]])]
        sizes_match &= info.size == int(part.sizes[k])
        min_weights_match &= info.min_weight == int(part.min_hamming[k])

    zero_block = part.block_of(0)
    nontrivial = np.arange(part.n_blocks) != zero_block
    oracle_m = int(part.min_hamming[nontrivial].max())

    p = pi_system(g)
    wp_part = bfs_partition(g, generators=range(1, g.n), cap=cap)
    wp_match = partitions_equal(_wp_predicted_key(g), wp_part.labels)

    return VerifyReport(
        n=g.n,
        attach=g.attach,
        pi1_size=p.pi1_size,
        predicted_orbit_count=table.orbit_count,
        oracle_orbit_count=part.n_blocks,
        predicted_M=table.max_orbit_weight,
        oracle_M=oracle_m,
        partition_match=bool(partition_match),
        sizes_match=bool(sizes_match),
        min_weights_match=bool(min_weights_match),
        count_formula_match=orbit_count_formula(g.n, p.pi1_size) == table.orbit_count,
        wp_match=bool(wp_match),
    )


def graphs_for_sweep(n_max: int) -> Iterator[GraphSpec]:
    """Every valid graph with 2 <= n <= n_max, in deterministic order."""
    for n in range(2, n_max + 1):
        for size in range(1, n):
            for attach in combinations(range(1, n), size):
                yield validate_graph(n, list(attach))


def _verify_tuple(spec: tuple[int, tuple[int, ...]]) -> VerifyReport:
    n, attach = spec
    return verify_graph(validate_graph(n, list(attach)))


@dataclass(frozen=True)
class SweepReport:
    reports: tuple[VerifyReport, ...]

    @property
    def graphs(self) -> int:
        return len(self.reports)

    @property
    def failures(self) -> tuple[VerifyReport, ...]:
        return tuple(r for r in self.reports if not r.ok)

    def to_json(self) -> dict:
        return {"graphs": self.graphs, "failures": len(self.failures)}


def sweep(n_max: int, jobs: int = 1, cap: int | None = None) -> SweepReport:
    specs = [(g.n, g.attach) for g in graphs_for_sweep(n_max)]
    if jobs <= 1:
        reports = [verify_graph(validate_graph(n, list(a)), cap) for n, a in specs]
    else:
        chunk = max(1, len(specs) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_verify_tuple, specs, chunksize=chunk))
    return SweepReport(tuple(reports))
