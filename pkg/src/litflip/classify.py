"""Closed-form orbit classification.

A configuration's orbit is determined by its side (the span of Pi versus its
complement coset; one side covers everything when |Pi1| is odd) together with
the set of simple weights the orbit occupies.  The weight set comes from a
small case analysis on |Pi1|; where two cases overlap they are evaluated
together and must agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .basis import SimpleBasis, WeightIndexSets, build_delta, pi_system, weight_index_sets
from .core import GraphSpec

SIDE_WHOLE = "WHOLE"
SIDE_U = "U"
SIDE_UBAR = "UBAR"

_SIDE_ORDER = {SIDE_WHOLE: 0, SIDE_U: 0, SIDE_UBAR: 1}


@lru_cache(maxsize=None)
def basis_for(g: GraphSpec) -> SimpleBasis:
    return build_delta(pi_system(g))


@lru_cache(maxsize=None)
def index_sets_for(g: GraphSpec) -> WeightIndexSets:
    return weight_index_sets(basis_for(g).pi_system)


@dataclass(frozen=True)
class OrbitLabel:
    """Canonical orbit identifier: equal labels means same orbit."""

    side: str
    weights: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return self.weights == (0,)

    def to_json(self) -> dict:
        return {"side": self.side, "weights": list(self.weights), "trivial": self.trivial}


@dataclass(frozen=True)
class OrbitInfo:
    label: OrbitLabel
    size: int
    min_weight: int

    def to_json(self) -> dict:
        return {
            "side": self.label.side,
            "weights": list(self.label.weights),
            "size": self.size,
            "min_weight": self.min_weight,
        }


@dataclass(frozen=True)
class OrbitTable:
    orbits: tuple[OrbitInfo, ...]

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def max_orbit_weight(self) -> int:
        return max(o.min_weight for o in self.orbits if not o.label.trivial)

    def to_json(self) -> dict:
        return {
            "orbits": [o.to_json() for o in self.orbits],
            "orbit_count": self.orbit_count,
            "max_orbit_weight": self.max_orbit_weight,
        }


def feasible_weights(n: int, side: str) -> range:
    """Simple weights that actually occur on a side (the coset misses 0; U misses n)."""
    if side == SIDE_WHOLE:
        return range(0, n + 1)
    if side == SIDE_U:
        return range(0, n)
    return range(1, n + 1)


def _mod4_class(lo: int, hi: int, residues: set[int]) -> set[int]:
    return {j for j in range(lo, hi + 1) if j % 4 in residues}


def weight_class(n: int, p1: int, side: str, sw: int) -> frozenset[int]:
    """The full set of simple weights in the orbit of a side-`side` config of weight sw > 0."""
    assert sw in feasible_weights(n, side) and sw > 0
    clauses: list[set[int]] = []
    if side == SIDE_WHOLE:
        if p1 == 1:
            clauses.append({sw, n + 1 - sw})
        if p1 == n - 1:
            clauses.append({sw, sw + 1} if sw % 2 else {sw - 1, sw})
        if p1 == n - 2:
            clauses.append(set(range(1, n + 1, 2)) if sw % 2 else {sw})
        if 3 <= p1 <= n - 3:
            clauses.append(_mod4_class(1, n, {sw % 4, (n + p1 - sw) % 4}))
    elif side == SIDE_U:
        if p1 == 2:
            clauses.append({sw, n - sw})
        if p1 == n - 1:
            j = (sw + 1) // 2
            clauses.append({2 * j - 1, 2 * j, n - 2 * j, n + 1 - 2 * j} & set(range(1, n)))
        if p1 == n - 2:
            clauses.append(set(range(1, n, 2)) if sw % 2 else {sw, n - sw})
        if 4 <= p1 <= n - 3:
            res = {sw % 4, (sw + p1 - 2) % 4, (n - sw) % 4, (n - sw + p1 - 2) % 4}
            clauses.append(_mod4_class(1, n - 1, res))
    else:
        if p1 == n - 1:
            t = (sw + 1) // 2
            clauses.append({2 * t - 1, 2 * t, n + 2 - 2 * t, n + 3 - 2 * t} & set(range(1, n + 1)))
        if p1 == n - 2:
            clauses.append(set(range(1, n + 1, 2)) if sw % 2 else {sw, n + 2 - sw})
        if p1 == 2 or 4 <= p1 <= n - 3:
            res = {sw % 4, (sw + p1) % 4, (n + 2 - sw) % 4, (n + 2 - sw + p1) % 4}
            clauses.append(_mod4_class(1, n, res))
    assert clauses, f"no clause applies for n={n} |Pi1|={p1} side={side}"
    assert all(c == clauses[0] for c in clauses[1:]), (
        f"overlapping clauses disagree for n={n} |Pi1|={p1} side={side} sw={sw}: {clauses}"
    )
    return frozenset(clauses[0])


def classify(b: SimpleBasis, u: int) -> OrbitLabel:
    mask = b.coords_mask(u)
    sw = mask.bit_count()
    if b.parity_odd:
        side = SIDE_WHOLE
    else:
        side = SIDE_UBAR if (mask >> (b.n - 1)) & 1 else SIDE_U
    if sw == 0:
        return OrbitLabel(side, (0,))
    t = weight_class(b.n, b.pi_system.pi1_size, side, sw)
    return OrbitLabel(side, tuple(sorted(t)))


def classify_config(g: GraphSpec, u: int) -> OrbitLabel:
    return classify(basis_for(g), u)


def reachable(g: GraphSpec, u: int, v: int) -> bool:
    b = basis_for(g)
    return classify(b, u) == classify(b, v)


def _orbit_size(n: int, side: str, weights: tuple[int, ...]) -> int:
    if side == SIDE_WHOLE:
        return sum(math.comb(n, t) for t in weights)
    if side == SIDE_U:
        return sum(math.comb(n - 1, t) for t in weights)
    return sum(math.comb(n - 1, t - 1) for t in weights)


def _class_min_weight(sets: WeightIndexSets, side: str, weights: tuple[int, ...]) -> int:
    if weights == (0,):
        return 0
    hits = sets.J if side == SIDE_UBAR else sets.I
    assert hits is not None
    return 1 if set(weights) & hits else 2


def orbit_table(g: GraphSpec) -> OrbitTable:
    b = basis_for(g)
    sets = index_sets_for(g)
    n, p1 = b.n, b.pi_system.pi1_size
    sides = [SIDE_WHOLE] if b.parity_odd else [SIDE_U, SIDE_UBAR]
    seen: dict[OrbitLabel, OrbitInfo] = {}
    for side in sides:
        for sw in feasible_weights(n, side):
            if sw == 0:
                label = OrbitLabel(side, (0,))
            else:
                label = OrbitLabel(side, tuple(sorted(weight_class(n, p1, side, sw))))
            if label not in seen:
                seen[label] = OrbitInfo(
                    label,
                    _orbit_size(n, side, label.weights),
                    _class_min_weight(sets, side, label.weights),
                )
    orbits = sorted(seen.values(), key=lambda o: (_SIDE_ORDER[o.label.side], o.label.weights))
    assert sum(o.size for o in orbits) == 1 << n, "orbit sizes fail to tile the state space"
    return OrbitTable(tuple(orbits))


def orbit_count_formula(n: int, p1: int) -> int:
    """The summary-table |P| column, with feasible-range corrections folded in."""
    if p1 % 2 == 1:
        if p1 == 1:
            return (n + 3) // 2
        if p1 == n - 1:
            return (n + 2) // 2
        if p1 == n - 2:
            return (n + 3) // 2
        return 3 if n % 2 == 0 else 4
    if p1 == 2:
        return (n + 6) // 2 if n % 2 == 0 else (n + 3) // 2
    if p1 == n - 1:
        return (n + 3) // 2
    if p1 == n - 2:
        return (n + 6) // 2
    return 6 if n % 2 == 0 else 4


def orbit_count(g: GraphSpec) -> int:
    b = basis_for(g)
    predicted = orbit_count_formula(b.n, b.pi_system.pi1_size)
    assert predicted == orbit_table(g).orbit_count, "closed-form |P| disagrees with enumeration"
    return predicted


def max_orbit_weight(g: GraphSpec) -> int:
    m = orbit_table(g).max_orbit_weight
    assert m in (1, 2)
    return m
