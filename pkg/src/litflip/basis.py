"""The Pi family of vectors, its Pi0/Pi1 split, the simple basis, and simple weights.

Pi is the family 1bar..nbar obtained by pushing s~_1 along the path with
successive moves.  Pi1 holds the members not orthogonal to s~_n.  The simple
basis is Pi itself when |Pi1| is odd; when even, nbar is swapped out for
s~_n, which gets the extra label n+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import gf2
from .core import GraphSpec, apply_move


class InternalRankError(RuntimeError):
    """Simple basis failed to span F_2^n; indicates a bug, not bad input."""


@dataclass(frozen=True)
class PiSystem:
    graph: GraphSpec
    pi: tuple[int, ...]
    pi1: frozenset[int]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def pi1_size(self) -> int:
        return len(self.pi1)

    @property
    def pi0(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.pi1

    @cached_property
    def prefix_parity(self) -> tuple[int, ...]:
        """prefix_parity[i] = |{1bar..ibar} ∩ Pi1| mod 2, with entry 0 for the empty prefix."""
        out = [0]
        acc = 0
        for i in range(1, self.n + 1):
            acc ^= 1 if i in self.pi1 else 0
            out.append(acc)
        return tuple(out)

    def vec(self, i: int) -> int:
        return self.pi[i - 1]


def pi1_intervals(g: GraphSpec) -> list[tuple[int, int]]:
    """Half-open index intervals (lo, hi] whose union tells which ibar land in Pi1.

    Attachment points are paired up in order; a missing final partner is n.
    """
    js = list(g.attach)
    if len(js) % 2 == 1:
        js.append(g.n)
    return [(js[2 * k], js[2 * k + 1]) for k in range(len(js) // 2)]


def pi1_size_formula(g: GraphSpec) -> int:
    """|Pi1| straight from the attachment points, no vector construction."""
    return sum(hi - lo for lo, hi in pi1_intervals(g))


def build_pi_recursive(g: GraphSpec) -> PiSystem:
    """Iterate: 1bar = s~_1, (i+1)bar = move at s_i applied to ibar."""
    pi = [1]
    for i in range(1, g.n):
        pi.append(apply_move(g, pi[-1], i))
    apex = 1 << (g.n - 1)
    pi1 = frozenset(i for i in range(1, g.n + 1) if gf2.parity(pi[i - 1] & apex))
    return PiSystem(g, tuple(pi), pi1)


def build_pi_closed(g: GraphSpec) -> PiSystem:
    """Direct construction: ibar = s~_{i-1} + s~_i (+ s~_n when ibar is in Pi1).

    s~_0 is the zero vector and the s~_i term is dropped at i = n.
    """
    n = g.n
    intervals = pi1_intervals(g)
    pi = []
    pi1 = set()
    for i in range(1, n + 1):
        vec = 0
        if i >= 2:
            vec ^= 1 << (i - 2)
        if i <= n - 1:
            vec ^= 1 << (i - 1)
        if any(lo < i <= hi for lo, hi in intervals):
            vec ^= 1 << (n - 1)
            pi1.add(i)
        pi.append(vec)
    return PiSystem(g, tuple(pi), frozenset(pi1))


def pi_system(g: GraphSpec) -> PiSystem:
    """Production builder: the closed form, self-checked against the recursion."""
    closed = build_pi_closed(g)
    assert closed == build_pi_recursive(g), "closed and recursive Pi disagree"
    assert len(closed.pi1) == pi1_size_formula(g), "interval size formula disagrees"
    return closed


@dataclass(frozen=True)
class SimpleBasis:
    """The simple basis with a precomputed change of coordinates.

    labels[i] names basis position i: the index of ibar, or n+1 for s~_n in
    the even case.  inverse_rows solve for simple coordinates: position i of
    the expansion of u is parity(inverse_rows[i] & u).
    """

    pi_system: PiSystem
    labels: tuple[int, ...]
    vectors: tuple[int, ...]
    inverse_rows: tuple[int, ...]

    @property
    def graph(self) -> GraphSpec:
        return self.pi_system.graph

    @property
    def n(self) -> int:
        return self.pi_system.n

    @property
    def parity_odd(self) -> bool:
        return self.pi_system.pi1_size % 2 == 1

    def coords_mask(self, u: int) -> int:
        return gf2.matvec(self.inverse_rows, u)

    def simple_coords(self, u: int) -> frozenset[int]:
        mask = self.coords_mask(u)
        return frozenset(self.labels[i] for i in range(self.n) if (mask >> i) & 1)

    def sw(self, u: int) -> int:
        return self.coords_mask(u).bit_count()

    def in_span_pi(self, u: int) -> bool:
        """Whether u lies in the span of Pi (always true in the odd case)."""
        if self.parity_odd:
            return True
        return not (self.coords_mask(u) >> (self.n - 1)) & 1

    def recombine(self, labels: frozenset[int]) -> int:
        pos = {lab: i for i, lab in enumerate(self.labels)}
        u = 0
        for lab in labels:
            u ^= self.vectors[pos[lab]]
        return u


def build_delta(p: PiSystem) -> SimpleBasis:
    n = p.n
    if p.pi1_size % 2 == 1:
        labels = tuple(range(1, n + 1))
        vectors = p.pi
    else:
        labels = tuple(range(1, n)) + (n + 1,)
        vectors = p.pi[: n - 1] + (1 << (n - 1),)
    b_rows = [0] * n
    for i, vec in enumerate(vectors):
        for j in range(n):
            b_rows[j] |= ((vec >> j) & 1) << i
    inv = gf2.invert(b_rows, n)
    if inv is None:
        raise InternalRankError(f"simple basis is rank-deficient for {p.graph.text}")
    return SimpleBasis(p, labels, tuple(vectors), tuple(inv))


def sw_of_standard(b: SimpleBasis, i: int) -> int:
    """Simple weight of s~_i from the prefix-parity case formulas."""
    n, pp = b.n, b.pi_system.prefix_parity
    if b.parity_odd:
        if i == n:
            return n
        return i if pp[i] == 0 else n - i
    if i == n:
        return 1
    return i if pp[i] == 0 else i + 1


@dataclass(frozen=True)
class WeightIndexSets:
    """Simple weights that admit a Hamming-weight-1 representative (J: on the Ubar side)."""

    I: frozenset[int]
    J: frozenset[int] | None


def weight_index_sets(p: PiSystem) -> WeightIndexSets:
    n, pp = p.n, p.prefix_parity
    if p.pi1_size % 2 == 1:
        members = set()
        for i in range(1, n + 1):
            if pp[i] == 0 or i == n or pp[n - i] == 1:
                members.add(i)
        return WeightIndexSets(frozenset(members), None)
    i_set = frozenset(i for i in range(1, n) if pp[i] == 0)
    j_set = frozenset(j for j in range(1, n + 1) if j == 1 or pp[j - 1] == 1)
    return WeightIndexSets(i_set, j_set)


def sn_weight_after(b: SimpleBasis, u: int) -> int:
    """Predicted simple weight of the apex move applied to u, by the case formulas."""
    p = b.pi_system
    n, p1 = b.n, p.pi1_size
    coords = b.simple_coords(u)
    sw = len(coords)
    k = sum(1 for lab in coords if lab <= n and lab in p.pi1)
    if b.parity_odd:
        return sw if k % 2 == 0 else n - p1 + 2 * k - sw
    nbar_in_pi1 = n in p.pi1
    if (n + 1) not in coords:
        if k % 2 == 0:
            return sw
        return n - p1 + 2 * k - sw if nbar_in_pi1 else sw + p1 - 2 * k
    if k % 2 == 1:
        return sw
    return n - p1 + 2 * k + 2 - sw if nbar_in_pi1 else sw + p1 - 2 * k


def sn_simple_action(b: SimpleBasis, u: int) -> tuple[int, int]:
    """Apply the apex move and return (new config, its simple weight).

    The weight is computed from the basis solve and cross-checked against
    the closed-form prediction.
    """
    moved = apply_move(b.graph, u, b.n)
    sw = b.sw(moved)
    assert sw == sn_weight_after(b, u), "apex-move weight formula disagrees with solve"
    return moved, sw
