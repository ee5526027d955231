"""Circuit construction, intersections, sub-circuits, and reductions."""

import pytest

from conftest import NESTED2_TOKENS
from nestcirc import (
    circuit_equal,
    external_reduction,
    format_circuit,
    internal_reduction,
    intersections,
    one_step_reductions,
    parse_circuits,
    sub_circuit_refs,
    validate_circuit,
    vertex_of,
)
from nestcirc.errors import (
    BadLabelError,
    NestcircError,
    NotAnIntersectionError,
    NotASubCircuitError,
    NotClosedError,
    RepeatedEdgeError,
    SelfLoopError,
    TooShortError,
)

TRIANGLE = "a b c a".split()

# Start vertex reappearing twice in the interior: two proper sub-circuits
# [0,3] and [3,6] but no intersections.
START_REPEATS = "x a b x c d x".split()


def test_validate_smallest_cycle():
    c = validate_circuit(TRIANGLE)
    assert c.n == 3
    assert c.vertices == ("a", "b", "c", "a")


def test_validate_stores_sequence_verbatim():
    c = validate_circuit(NESTED2_TOKENS)
    assert list(c.vertices) == NESTED2_TOKENS
    assert c.n == 18


def test_validate_rejects_repeated_edge():
    with pytest.raises(RepeatedEdgeError):
        validate_circuit("a b c d a b a".split())


def test_validate_rejects_open_walk():
    with pytest.raises(NotClosedError):
        validate_circuit("a b c d".split())


def test_validate_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        validate_circuit("a b b c a".split())


def test_validate_rejects_short_walk():
    with pytest.raises(TooShortError):
        validate_circuit("a b a".split())
    with pytest.raises(TooShortError):
        validate_circuit([])


def test_validate_rejects_bad_labels():
    with pytest.raises(BadLabelError):
        validate_circuit(["a", "", "c", "a"])
    with pytest.raises(BadLabelError):
        validate_circuit(["a", "b c", "d", "a"])


def test_intersections_nested_pair(nested2):
    assert intersections(nested2) == {(2, 12), (6, 10)}


def test_intersections_triangle_empty():
    assert intersections(validate_circuit(TRIANGLE)) == set()


def test_intersections_petals(petals):
    assert intersections(petals) == {(1, 5), (7, 11), (13, 17)}


def test_intersections_exclude_the_endpoints():
    c = validate_circuit(START_REPEATS)
    assert intersections(c) == set()
    assert sub_circuit_refs(c) == {(0, 3), (3, 6)}


def test_vertex_of_nested_pair(nested2):
    assert vertex_of(nested2, (2, 12)) == "v2"
    assert vertex_of(nested2, (6, 10)) == "v6"


def test_vertex_of_rejects_non_intersection():
    c = validate_circuit(TRIANGLE)
    with pytest.raises(NotAnIntersectionError):
        vertex_of(c, (1, 2))


def test_sub_circuit_refs_of_nested_pair(nested2):
    assert sub_circuit_refs(nested2) == {(2, 12), (6, 10)}


def test_internal_reduction_outer_pair(nested2):
    got = internal_reduction(nested2, (2, 12))
    assert got.vertices == tuple("v0 v1 v2 v13 v14 v15 v16 v17 v0".split())
    assert got.n == 8


def test_internal_reduction_inner_pair(nested2):
    # Hand application of the excision rule: keep 0..6, skip 7..10, keep 11..18.
    expected = "v0 v1 v2 v3 v4 v5 v6 v11 v2 v13 v14 v15 v16 v17 v0".split()
    got = internal_reduction(nested2, (6, 10))
    assert got.vertices == tuple(expected)
    assert len(got.vertices) == 15
    validate_circuit(got.vertices)


def test_internal_reduction_at_position_zero():
    c = validate_circuit(START_REPEATS)
    assert internal_reduction(c, (0, 3)).vertices == ("x", "c", "d", "x")


def test_external_reduction_outer_pair(nested2):
    got = external_reduction(nested2, (2, 12))
    assert got.vertices == tuple("v2 v3 v4 v5 v6 v7 v8 v9 v6 v11 v2".split())


def test_external_reduction_inner_pair(nested2):
    assert external_reduction(nested2, (6, 10)).vertices == ("v6", "v7", "v8", "v9", "v6")


def test_external_reduction_petal(petals):
    assert external_reduction(petals, (1, 5)).vertices == ("v1", "v2", "v3", "v4", "v1")


def test_reductions_reject_bad_ref(nested2):
    with pytest.raises(NotASubCircuitError):
        internal_reduction(nested2, (3, 7))
    with pytest.raises(NotASubCircuitError):
        external_reduction(nested2, (0, 18))


def test_one_step_reductions_triangle_empty():
    assert one_step_reductions(validate_circuit(TRIANGLE)) == set()


def test_one_step_reductions_nested_pair(nested2):
    expected = {
        validate_circuit("v0 v1 v2 v13 v14 v15 v16 v17 v0".split()),
        validate_circuit("v2 v3 v4 v5 v6 v7 v8 v9 v6 v11 v2".split()),
        validate_circuit("v0 v1 v2 v3 v4 v5 v6 v11 v2 v13 v14 v15 v16 v17 v0".split()),
        validate_circuit("v6 v7 v8 v9 v6".split()),
    }
    assert one_step_reductions(nested2) == expected


def test_one_step_reductions_petals(petals):
    spine = "v0 v1 v6 v7 v12 v13 v0"
    got = one_step_reductions(petals)
    expected = {
        # internal reductions: one petal flattened at a time
        validate_circuit("v0 v1 v6 v7 v8 v9 v10 v7 v12 v13 v14 v15 v16 v13 v0".split()),
        validate_circuit("v0 v1 v2 v3 v4 v1 v6 v7 v12 v13 v14 v15 v16 v13 v0".split()),
        validate_circuit("v0 v1 v2 v3 v4 v1 v6 v7 v8 v9 v10 v7 v12 v13 v0".split()),
        # external reductions: the petals themselves
        validate_circuit("v1 v2 v3 v4 v1".split()),
        validate_circuit("v7 v8 v9 v10 v7".split()),
        validate_circuit("v13 v14 v15 v16 v13".split()),
    }
    assert got == expected
    assert validate_circuit(spine.split()) not in got


def test_one_step_reductions_dedupe_start_repeats():
    # [0,3] and [3,6] produce the same two circuits from either side.
    c = validate_circuit(START_REPEATS)
    assert one_step_reductions(c) == {
        validate_circuit("x a b x".split()),
        validate_circuit("x c d x".split()),
    }


def test_every_reduction_is_a_shorter_circuit(nested2, petals):
    for root in (nested2, petals):
        for d in one_step_reductions(root):
            validate_circuit(d.vertices)
            assert d.n < root.n


def test_circuit_equal_is_exact_sequence_equality():
    a = validate_circuit(TRIANGLE)
    assert circuit_equal(a, validate_circuit(TRIANGLE))
    assert not circuit_equal(a, validate_circuit("b c a b".split()))


def test_circuit_not_equal_to_its_reduction(nested2):
    d = internal_reduction(nested2, (2, 12))
    assert not circuit_equal(nested2, d)


def test_parse_and_format_round_trip(nested2):
    text = "# worked example\n\n" + format_circuit(nested2) + "\n a b c a\n"
    circuits = parse_circuits(text)
    assert circuits == [nested2, validate_circuit(TRIANGLE)]


def test_parse_reports_line_numbers():
    with pytest.raises(NestcircError, match="line 3"):
        parse_circuits("# ok\na b c a\na b c d\n")
