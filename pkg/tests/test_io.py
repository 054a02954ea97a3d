import json

import pytest

from flipwide.bitset import mask_from
from flipwide.errors import LoopError, MalformedInputError, OutOfRangeError
from flipwide.families import complete, path, random_graph
from flipwide.flips import Flip, normalize
from flipwide.graph import from_edge_list
from flipwide.graphio import (
    canonical_json,
    detect_and_parse,
    flips_from_json,
    flips_to_json,
    input_digest,
    instance_from_json,
    normalized_to_json,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from flipwide.witness import FlippableInstance, WidenableInstance


class TestGraph6:
    def test_golden_k4(self):
        assert parse_graph6(b"C~") == complete(4)
        assert write_graph6(complete(4)) == b"C~"

    def test_golden_p3(self):
        assert parse_graph6(b"Bg") == path(3)
        assert write_graph6(path(3)) == b"Bg"

    def test_golden_empty(self):
        g = parse_graph6(b"?")
        assert g.n == 0
        assert write_graph6(g) == b"?"

    def test_single_vertex(self):
        g = parse_graph6(b"@")
        assert g.n == 1 and g.edge_count() == 0
        assert write_graph6(g) == b"@"

    def test_roundtrip_random(self, rng):
        for _ in range(120):
            n = rng.randint(0, 62)
            g = random_graph(n, rng.choice([0.1, 0.5, 0.9]), rng.randint(0, 10**6))
            assert parse_graph6(write_graph6(g)) == g

    def test_roundtrip_multibyte_size(self):
        g = random_graph(100, 0.05, 3)
        data = write_graph6(g)
        assert data[0] == 126
        assert parse_graph6(data) == g

    def test_header_and_newline_tolerated(self):
        assert parse_graph6(b">>graph6<<C~\n") == complete(4)

    def test_malformed(self):
        with pytest.raises(MalformedInputError):
            parse_graph6(b"")
        with pytest.raises(MalformedInputError):
            parse_graph6(b"C~~")  # extra byte
        with pytest.raises(MalformedInputError):
            parse_graph6(b"C")  # truncated
        with pytest.raises(MalformedInputError):
            parse_graph6(b"C\x1f")  # byte below 63
        with pytest.raises(MalformedInputError):
            parse_graph6(b"~~????")  # >= 2^18 vertices
        with pytest.raises(MalformedInputError):
            parse_graph6(b"B`")  # nonzero padding bit for n=3

    def test_padding_bits_zero(self):
        # n=3 has 3 pair bits; the low 3 bits of the byte must be zero.
        assert parse_graph6(b"B_").edge_count() == 1


class TestEdgeList:
    def test_cycle(self):
        g = parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0")
        assert g == from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# top\nn 2\n# empty\n\n")
        assert g.n == 2 and g.edge_count() == 0

    def test_trailing_comment(self):
        g = parse_edge_list("n 3\n0 1  # first\n1 2")
        assert g.edge_count() == 2

    def test_loop_rejected(self):
        with pytest.raises(LoopError):
            parse_edge_list("n 2\n0 0")

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            parse_edge_list("n 2\n0 2")

    def test_malformed(self):
        with pytest.raises(MalformedInputError):
            parse_edge_list("m 2\n0 1")
        with pytest.raises(MalformedInputError):
            parse_edge_list("n 2\n0 1 2")
        with pytest.raises(MalformedInputError):
            parse_edge_list("")

    def test_duplicate_edges_idempotent(self):
        g = parse_edge_list("n 2\n0 1\n0 1\n1 0")
        assert g.edge_count() == 1


class TestDetect:
    def test_autodetect(self):
        assert detect_and_parse(b"C~") == complete(4)
        assert detect_and_parse(b"n 3\n0 1\n") == from_edge_list(3, [(0, 1)])
        assert detect_and_parse(b"# c\nn 3\n0 1\n") == from_edge_list(3, [(0, 1)])


class TestJsonCodecs:
    def test_flips_roundtrip(self):
        flips = [Flip.of([0, 2], [1]), Flip.of([], [3])]
        assert flips_from_json(flips_to_json(flips)) == flips

    def test_flips_malformed(self):
        with pytest.raises(MalformedInputError):
            flips_from_json({"not": "a list"})
        with pytest.raises(MalformedInputError):
            flips_from_json([[1, 2, 3]])

    def test_normalized_json_shape(self):
        nf = normalize([Flip.of([0, 1], [2, 3])], 5)
        payload = normalized_to_json(nf)
        assert payload["atoms"] == [[0, 1], [2, 3], [4]]
        assert payload["toggles"] == [[0, 1]]

    def test_widenable_instance(self):
        inst = instance_from_json(
            {"kind": "widenable", "S": [], "B": [0, 3], "r": 2, "m": 2}, 6
        )
        assert isinstance(inst, WidenableInstance)
        assert inst.a_set == (1 << 6) - 1
        assert inst.witness == mask_from([0, 3])

    def test_flippable_instance(self):
        inst = instance_from_json(
            {"kind": "flippable", "A": [1, 2], "flips": [[[0], [1, 2]]],
             "B": [1], "r": 1, "m": 1}, 3
        )
        assert isinstance(inst, FlippableInstance)
        assert inst.flips == (Flip.of([0], [1, 2]),)

    def test_unknown_kind(self):
        with pytest.raises(MalformedInputError):
            instance_from_json({"kind": "other"}, 3)


class TestReports:
    def test_canonical_json_is_stable(self):
        a = canonical_json({"b": 1, "a": [2, 3]})
        b = canonical_json({"a": [2, 3], "b": 1})
        assert a == b == '{"a":[2,3],"b":1}'

    def test_digest_stable(self):
        assert input_digest(b"C~") == input_digest(b"C~")
        assert input_digest(b"C~") != input_digest(b"Bg")
        assert len(input_digest(b"")) == 64
