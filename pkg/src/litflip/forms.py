"""The adjacency bilinear form, its quadratic form, and the transpose action.

The adjacency matrix A gives an alternating form <u,v> = u^t A v.  Moves
satisfy the congruence sAs^t = A, so transposed moves act by transvections
u -> u + <s~,u> s~ and preserve the unique quadratic form q with q(s~) = 1
that polarizes to the bilinear form.  Left multiplication by A sends each
transpose-action orbit into a single move orbit; when A is nonsingular that
map is a bijection on orbits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2
from .core import GraphSpec
from .oracle import OrbitPartition, _check_cap, bfs_partition, partition_from_pairs


@dataclass(frozen=True)
class AdjacencyForm:
    graph: GraphSpec
    rows: tuple[int, ...]
    rank: int

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def nonsingular(self) -> bool:
        return self.rank == self.n


def adjacency_form(g: GraphSpec) -> AdjacencyForm:
    rows = tuple(g.move_masks[v] for v in range(1, g.n + 1))
    return AdjacencyForm(g, rows, gf2.rank(list(rows), g.n))


def bilinear(f: AdjacencyForm, u: int, v: int) -> int:
    return gf2.parity(u & gf2.matvec(list(f.rows), v))


def quadratic(f: AdjacencyForm, u: int) -> int:
    """q(u) = |supp(u)| + #edges inside supp(u), mod 2."""
    doubled = 0
    rest = u
    while rest:
        low = rest & -rest
        i = low.bit_length() - 1
        doubled += (f.rows[i] & u).bit_count()
        rest ^= low
    return (u.bit_count() + doubled // 2) & 1


def quadratic_all(f: AdjacencyForm) -> np.ndarray:
    """q over every state at once, same formula as quadratic()."""
    states = np.arange(1 << f.n, dtype=np.uint32)
    doubled = np.zeros(states.shape, dtype=np.int64)
    for i, row in enumerate(f.rows):
        inside = (states >> np.uint32(i)) & np.uint32(1)
        doubled += inside * np.bitwise_count(states & np.uint32(row))
    return ((np.bitwise_count(states) + doubled // 2) & 1).astype(np.uint8)


def check_congruence(g: GraphSpec) -> bool:
    f = adjacency_form(g)
    a = list(f.rows)
    for v in range(1, g.n + 1):
        s = g.move_matrix(v).rows()
        st = gf2.transpose(s, g.n)
        if gf2.matmul(gf2.matmul(s, a), st) != a:
            return False
    return True


def transvection_apply(f: AdjacencyForm, s: int, u: int) -> int:
    """The transpose move at vertex s: u + <s~, u> s~."""
    if gf2.parity(f.rows[s - 1] & u):
        return u ^ (1 << (s - 1))
    return u


def transpose_partition(g: GraphSpec, cap: int | None = None) -> OrbitPartition:
    """Orbits of all 2^n states under every transpose move."""
    _check_cap(g, cap)
    f = adjacency_form(g)
    states = np.arange(1 << g.n, dtype=np.uint32)
    rows, cols = [], []
    for s in range(1, g.n + 1):
        active = states[(np.bitwise_count(states & np.uint32(f.rows[s - 1])) & 1) == 1]
        rows.append(active)
        cols.append(active ^ np.uint32(1 << (s - 1)))
    return partition_from_pairs(g.n, np.concatenate(rows), np.concatenate(cols))


def _image_labels(g: GraphSpec, part: OrbitPartition) -> np.ndarray:
    """Move-orbit label of A*u for every state u."""
    f = adjacency_form(g)
    states = np.arange(1 << g.n, dtype=np.uint32)
    image = np.zeros(states.shape, dtype=np.uint32)
    for i, row in enumerate(f.rows):
        image |= ((np.bitwise_count(states & np.uint32(row)) & 1) << np.uint32(i)).astype(np.uint32)
    return part.labels[image]


def check_ao_bijection(g: GraphSpec, cap: int | None = None) -> bool:
    """Left multiplication by A maps transpose orbits into move orbits.

    True iff the induced map is well-defined, and additionally a bijection
    when A is nonsingular.
    """
    _check_cap(g, cap)
    f = adjacency_form(g)
    prime = transpose_partition(g, cap=cap)
    part = bfs_partition(g, cap=cap)
    image = _image_labels(g, part)
    pairs = np.unique(prime.labels.astype(np.int64) * part.n_blocks + image)
    well_defined = len(pairs) == prime.n_blocks
    if not f.nonsingular:
        return well_defined
    distinct_images = len(np.unique(image[prime.representatives]))
    return well_defined and prime.n_blocks == part.n_blocks == distinct_images


@dataclass(frozen=True)
class FormsReport:
    n: int
    attach: tuple[int, ...]
    rank: int
    nonsingular: bool
    congruence_ok: bool
    q_invariant: bool
    transpose_orbit_count: int
    move_orbit_count: int
    ao_well_defined: bool
    ao_bijection: bool | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "attach": list(self.attach),
            "rank": self.rank,
            "nonsingular": self.nonsingular,
            "congruence_ok": self.congruence_ok,
            "q_invariant": self.q_invariant,
            "transpose_orbit_count": self.transpose_orbit_count,
            "move_orbit_count": self.move_orbit_count,
            "ao_well_defined": self.ao_well_defined,
            "ao_bijection": self.ao_bijection,
        }


def q_invariance_holds(g: GraphSpec, cap: int | None = None) -> bool:
    """q is unchanged by every transpose move on every state."""
    _check_cap(g, cap)
    f = adjacency_form(g)
    q = quadratic_all(f)
    states = np.arange(1 << g.n, dtype=np.uint32)
    for s in range(1, g.n + 1):
        flip = (np.bitwise_count(states & np.uint32(f.rows[s - 1])) & 1).astype(np.uint32)
        target = states ^ (flip << np.uint32(s - 1))
        if not np.array_equal(q[target], q):
            return False
    return True


def forms_report(g: GraphSpec, cap: int | None = None) -> FormsReport:
    _check_cap(g, cap)
    f = adjacency_form(g)
    prime = transpose_partition(g, cap=cap)
    part = bfs_partition(g, cap=cap)
    image = _image_labels(g, part)
    pairs = np.unique(prime.labels.astype(np.int64) * part.n_blocks + image)
    well_defined = len(pairs) == prime.n_blocks
    bijection = None
    if f.nonsingular:
        distinct = len(np.unique(image[prime.representatives]))
        bijection = well_defined and prime.n_blocks == part.n_blocks == distinct
    return FormsReport(
        n=g.n,
        attach=g.attach,
        rank=f.rank,
        nonsingular=f.nonsingular,
        congruence_ok=check_congruence(g),
        q_invariant=q_invariance_holds(g, cap=cap),
        transpose_orbit_count=prime.n_blocks,
        move_orbit_count=part.n_blocks,
        ao_well_defined=well_defined,
        ao_bijection=bijection,
    )
