"""Text format tests: instance round trips and line-numbered parse errors."""

import pytest

from exactmatch.formats import (
    InstanceFormatError,
    format_em_instance,
    format_matching,
    format_tkpm_instance,
    parse_em_instance,
    parse_matching,
    parse_tkpm_instance,
)
from exactmatch.generator import GenSpec, gen_instance
from exactmatch.graphs import (
    BLUE,
    RED,
    ColoredGraph,
    EmInstance,
    TkpmInstance,
    WeightedGraph,
    validate,
)


def test_round_trip_em():
    g = ColoredGraph(4, ((0, 1, RED), (1, 2, BLUE), (2, 3, BLUE), (0, 3, BLUE)))
    inst = EmInstance(g, 1)
    assert parse_em_instance(format_em_instance(inst)) == inst


def test_round_trip_tkpm():
    g = WeightedGraph(4, ((0, 1, 5), (2, 3, 0)))
    inst = TkpmInstance(g, 2)
    assert parse_tkpm_instance(format_tkpm_instance(inst)) == inst


def test_round_trip_generated_instances():
    for seed in range(20):
        inst = gen_instance(GenSpec(n=6, extra_edges=4, seed=seed))
        assert parse_em_instance(format_em_instance(inst)) == inst


def test_comments_and_blank_lines_skipped():
    text = "# a comment\n\np em 2 1 1\n  # another\ne 0 1 r\n"
    inst = parse_em_instance(text)
    assert inst.graph.n == 2 and inst.k == 1


def test_endpoints_normalized_on_parse():
    inst = parse_em_instance("p em 2 1 0\ne 1 0 b\n")
    assert inst.graph.edges == ((0, 1, BLUE),)


def test_error_empty_input():
    with pytest.raises(InstanceFormatError, match="line 1: empty input"):
        parse_em_instance("   \n# only comments\n")


def test_error_bad_header():
    with pytest.raises(InstanceFormatError, match="line 1: malformed header"):
        parse_em_instance("p matching 2 1 1\ne 0 1 r\n")
    with pytest.raises(InstanceFormatError, match="line 2: malformed header"):
        parse_em_instance("# hi\np em 2 1\n")
    with pytest.raises(InstanceFormatError, match="non-negative"):
        parse_em_instance("p em -2 1 0\ne 0 1 r\n")


def test_error_bad_color():
    with pytest.raises(InstanceFormatError, match="line 2: color must be 'r' or 'b'"):
        parse_em_instance("p em 2 1 0\ne 0 1 g\n")


def test_error_bad_weight():
    with pytest.raises(InstanceFormatError, match="line 2: weight must be non-negative"):
        parse_tkpm_instance("p tkpm 2 1 0\ne 0 1 -4\n")
    with pytest.raises(InstanceFormatError, match="line 2"):
        parse_tkpm_instance("p tkpm 2 1 0\ne 0 1 r\n")


def test_error_vertex_out_of_range():
    with pytest.raises(InstanceFormatError, match=r"line 2: vertex id out of range 0\.\.1"):
        parse_em_instance("p em 2 1 0\ne 0 2 r\n")


def test_error_too_many_edges():
    with pytest.raises(InstanceFormatError, match="line 3: unexpected record after 1 edges"):
        parse_em_instance("p em 4 1 0\ne 0 1 r\ne 2 3 b\n")


def test_error_too_few_edges():
    with pytest.raises(InstanceFormatError, match="expected 2 edge records, found 1"):
        parse_em_instance("p em 4 2 0\ne 0 1 r\n")


def test_error_malformed_edge_record():
    with pytest.raises(InstanceFormatError, match="line 2: malformed edge record"):
        parse_em_instance("p em 2 1 0\nedge 0 1 r\n")


def test_parse_leaves_semantic_checks_to_validate():
    # the parser accepts a self-loop; validate is the layer that names it
    inst = parse_em_instance("p em 2 1 0\ne 1 1 r\n")
    assert validate(inst.graph) == "self-loop at edge 0"


def test_matching_format_and_parse():
    text = format_matching((3, 0, 2))
    assert text == "m 3 0 2 3"
    assert parse_matching(text) == (0, 2, 3)


def test_matching_empty():
    assert parse_matching(format_matching(())) == ()


def test_matching_count_mismatch():
    with pytest.raises(InstanceFormatError, match="declares 2 edges but lists 1"):
        parse_matching("m 2 0\n")
    with pytest.raises(InstanceFormatError, match="declares 1 edges but lists 2"):
        parse_matching("m 1 0 4\n")


def test_matching_bad_prefix():
    with pytest.raises(InstanceFormatError, match="malformed matching"):
        parse_matching("x 1 0")


def test_format_em_instance_layout():
    g = ColoredGraph(2, ((0, 1, RED),))
    text = format_em_instance(EmInstance(g, 1))
    assert text.splitlines() == ["p em 2 1 1", "e 0 1 r"]
