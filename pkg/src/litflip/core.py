"""Graphs of an induced path plus one attached vertex, configurations, and flipping moves.

Vertices are 1-based: s_1 .. s_{n-1} form the path, s_n is the extra vertex
adjacent to the attachment set.  A configuration is an int whose bit i-1 is
the state of s_i (1 = black); its text form is a bitstring with the leftmost
character belonging to s_1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property


class PuzzleError(Exception):
    """Domain error with a machine-readable code."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class GraphValidationError(PuzzleError):
    pass


class VertexOutOfRangeError(PuzzleError):
    def __init__(self, message: str):
        super().__init__("vertex_out_of_range", message)


class IllegalMoveError(PuzzleError):
    def __init__(self, message: str):
        super().__init__("illegal_move", message)


class ConfigError(PuzzleError):
    def __init__(self, message: str):
        super().__init__("bad_config", message)


class CapExceededError(PuzzleError):
    def __init__(self, message: str):
        super().__init__("cap_exceeded", message)


@dataclass(frozen=True)
class GraphSpec:
    """A validated (n, attach) graph: path s_1..s_{n-1} with s_n joined to each s_j."""

    n: int
    attach: tuple[int, ...]

    @cached_property
    def move_masks(self) -> tuple[int, ...]:
        """masks[v] flips the neighbors of s_v; index 0 is unused."""
        n = self.n
        masks = [0] * (n + 1)
        for v in range(1, n):
            m = 0
            if v > 1:
                m |= 1 << (v - 2)
            if v < n - 1:
                m |= 1 << v
            if v in self.attach_set:
                m |= 1 << (n - 1)
            masks[v] = m
        apex = 0
        for j in self.attach:
            apex |= 1 << (j - 1)
        masks[n] = apex
        return tuple(masks)

    @cached_property
    def attach_set(self) -> frozenset[int]:
        return frozenset(self.attach)

    def neighbors(self, v: int) -> frozenset[int]:
        if not 1 <= v <= self.n:
            raise VertexOutOfRangeError(f"vertex {v} outside [1, {self.n}]")
        mask = self.move_masks[v]
        return frozenset(i + 1 for i in range(self.n) if (mask >> i) & 1)

    def edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for v in range(1, self.n + 1):
            for w in self.neighbors(v):
                out.add((min(v, w), max(v, w)))
        return frozenset(out)

    def move_matrix(self, v: int) -> MoveMatrix:
        return MoveMatrix(self.n, v, self.neighbors(v))

    @property
    def text(self) -> str:
        return f"n={self.n} attach={','.join(str(j) for j in self.attach)}"

    def to_json(self) -> dict:
        return {"n": self.n, "attach": list(self.attach)}


@dataclass(frozen=True)
class MoveMatrix:
    """The flipping move at a vertex: identity plus the neighbor column."""

    n: int
    vertex: int
    column: frozenset[int]

    def rows(self) -> tuple[int, ...]:
        col_bit = 1 << (self.vertex - 1)
        out = []
        for a in range(1, self.n + 1):
            row = 1 << (a - 1)
            if a in self.column:
                row ^= col_bit
            out.append(row)
        return tuple(out)

    def apply(self, u: int) -> int:
        """Left-multiply: flips the neighbors when the vertex is black, else fixes u."""
        if (u >> (self.vertex - 1)) & 1:
            mask = 0
            for a in self.column:
                mask |= 1 << (a - 1)
            return u ^ mask
        return u


def validate_graph(n: int, attach: list[int] | tuple[int, ...]) -> GraphSpec:
    """Check (n, attach) and return the canonical GraphSpec.

    attach is sorted and deduplicated before validation, so only genuine
    violations (n < 2, empty attach, out-of-range attachment) raise.
    """
    cleaned = tuple(sorted(set(int(j) for j in attach)))
    if n < 2:
        raise GraphValidationError("n_below_two", f"need n >= 2, got {n}")
    if not cleaned:
        raise GraphValidationError("empty_attach", "attach is empty: s_n would be isolated")
    if cleaned[0] < 1 or cleaned[-1] > n - 1:
        raise GraphValidationError(
            "attach_out_of_range", f"attach {list(cleaned)} not within [1, {n - 1}]"
        )
    return GraphSpec(int(n), cleaned)


def parse_graph(text: str) -> GraphSpec:
    """Parse 'n=<int> attach=<j1,j2,...>' or the JSON object form."""
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
            return validate_graph(int(obj["n"]), [int(j) for j in obj["attach"]])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise GraphValidationError("bad_graph_text", f"unparseable graph JSON: {exc}") from exc
    fields = {}
    for part in text.split():
        if "=" not in part:
            raise GraphValidationError("bad_graph_text", f"expected key=value, got {part!r}")
        key, _, value = part.partition("=")
        fields[key] = value
    try:
        n = int(fields["n"])
        attach = [int(j) for j in fields["attach"].split(",") if j != ""]
    except (KeyError, ValueError) as exc:
        raise GraphValidationError(
            "bad_graph_text", f"expected 'n=<int> attach=<ints>', got {text!r}"
        ) from exc
    return validate_graph(n, attach)


def parse_config(text: str, n: int) -> int:
    """Strict bitstring parse: exactly n characters of 0/1, leftmost = s_1."""
    if len(text) != n or any(c not in "01" for c in text):
        raise ConfigError(f"config must be {n} characters of 0/1, got {text!r}")
    u = 0
    for i, c in enumerate(text):
        if c == "1":
            u |= 1 << i
    return u


def format_config(u: int, n: int) -> str:
    return "".join("1" if (u >> i) & 1 else "0" for i in range(n))


def hamming_weight(u: int) -> int:
    return u.bit_count()


def apply_move(g: GraphSpec, u: int, v: int, strict: bool = False) -> int:
    """Play the flipping move at s_v; feigning (no-op) on a white vertex unless strict."""
    if not 1 <= v <= g.n:
        raise VertexOutOfRangeError(f"vertex {v} outside [1, {g.n}]")
    if (u >> (v - 1)) & 1:
        return u ^ g.move_masks[v]
    if strict:
        raise IllegalMoveError(f"vertex {v} is white in {format_config(u, g.n)}")
    return u
