import pytest
from hypothesis import given, strategies as st

from litflip import (
    ConfigError,
    GraphValidationError,
    IllegalMoveError,
    VertexOutOfRangeError,
    apply_move,
    format_config,
    hamming_weight,
    parse_config,
    parse_graph,
    validate_graph,
)
from litflip import gf2

P4 = validate_graph(4, [3])
C5 = validate_graph(5, [1, 4])


@st.composite
def graph_specs(draw, max_n=10):
    n = draw(st.integers(2, max_n))
    attach = draw(st.sets(st.integers(1, n - 1), min_size=1))
    return validate_graph(n, sorted(attach))


def test_validate_graph_accepts():
    assert P4.n == 4 and P4.attach == (3,)
    assert C5.attach == (1, 4)
    assert validate_graph(4, [3, 1, 3]).attach == (1, 3)


def test_validate_graph_rejects():
    with pytest.raises(GraphValidationError) as e:
        validate_graph(1, [1])
    assert e.value.code == "n_below_two"
    with pytest.raises(GraphValidationError) as e:
        validate_graph(3, [])
    assert e.value.code == "empty_attach"
    with pytest.raises(GraphValidationError) as e:
        validate_graph(4, [4])
    assert e.value.code == "attach_out_of_range"
    with pytest.raises(GraphValidationError):
        validate_graph(4, [0])


def test_neighbors():
    assert P4.neighbors(2) == {1, 3}
    assert P4.neighbors(4) == {3}
    assert P4.neighbors(3) == {2, 4}
    assert C5.neighbors(5) == {1, 4}
    assert C5.neighbors(1) == {2, 5}
    with pytest.raises(VertexOutOfRangeError):
        P4.neighbors(5)


def test_edge_set_matches_construction():
    for g in (P4, C5, validate_graph(6, [2, 3, 5])):
        expected = {(i, i + 1) for i in range(1, g.n - 1)}
        expected |= {(j, g.n) for j in g.attach}
        assert g.edges() == expected
        for v, w in g.edges():
            assert v != w


def test_degree_bounds():
    for g in (P4, C5, validate_graph(7, [1, 2, 3, 4, 5, 6])):
        for v in range(1, g.n):
            assert len(g.neighbors(v)) <= 3
        assert len(g.neighbors(g.n)) == len(g.attach)


def test_apply_move_examples():
    u = parse_config("1000", 4)
    assert format_config(apply_move(P4, u, 1, strict=True), 4) == "1100"
    with pytest.raises(IllegalMoveError):
        apply_move(P4, 0, 1, strict=True)
    w = parse_config("10001", 5)
    assert format_config(apply_move(C5, w, 1, strict=True), 5) == "11000"


def test_apply_move_feigning_is_noop():
    assert apply_move(P4, 0, 1) == 0
    u = parse_config("0100", 4)
    assert apply_move(P4, u, 1) == u


def test_apply_move_bad_vertex():
    with pytest.raises(VertexOutOfRangeError):
        apply_move(P4, 1, 0)
    with pytest.raises(VertexOutOfRangeError):
        apply_move(P4, 1, 5)


def test_hamming_weight():
    assert hamming_weight(parse_config("0000", 4)) == 0
    assert hamming_weight(parse_config("1100", 4)) == 2
    assert hamming_weight(parse_config("10001", 5)) == 2


def test_parse_graph_text_and_json():
    assert parse_graph("n=4 attach=3") == P4
    assert parse_graph('{"n": 5, "attach": [1, 4]}') == C5
    assert parse_graph("n=5 attach=1,4") == C5
    for bad in ("n=4", "attach=3", "nonsense", '{"n": 4}', "n=x attach=3"):
        with pytest.raises(GraphValidationError) as e:
            parse_graph(bad)
        assert e.value.code == "bad_graph_text"


def test_parse_config_strict():
    assert parse_config("1000", 4) == 1
    assert parse_config("0001", 4) == 8
    for bad in ("100", "10000", "10a0", ""):
        with pytest.raises(ConfigError):
            parse_config(bad, 4)


def test_format_config_roundtrip():
    for u in range(16):
        assert parse_config(format_config(u, 4), 4) == u


def test_move_matrix_matches_apply():
    for g in (P4, C5):
        for v in range(1, g.n + 1):
            m = g.move_matrix(v)
            rows = m.rows()
            for u in range(1 << g.n):
                expected = apply_move(g, u, v)
                if (u >> (v - 1)) & 1:
                    assert gf2.matvec(rows, u) == expected
                assert m.apply(u) == expected


def test_move_matrix_is_involution():
    for g in (P4, C5):
        for v in range(1, g.n + 1):
            rows = g.move_matrix(v).rows()
            assert gf2.matmul(rows, rows) == gf2.identity_rows(g.n)


@given(graph_specs(), st.data())
def test_involution_property(g, data):
    u = data.draw(st.integers(0, 2**g.n - 1))
    v = data.draw(st.integers(1, g.n))
    assert apply_move(g, apply_move(g, u, v), v) == u


@given(graph_specs(), st.data())
def test_move_locality(g, data):
    u = data.draw(st.integers(0, 2**g.n - 1))
    v = data.draw(st.integers(1, g.n))
    moved = apply_move(g, u, v)
    flipped = {i + 1 for i in range(g.n) if (moved ^ u) >> i & 1}
    if (u >> (v - 1)) & 1:
        assert flipped == g.neighbors(v)
        assert v not in flipped
    else:
        assert flipped == set()
