import pytest

from ramseykit.construct import BUILTIN_NAMES, SumFreePartition, builtin_witness, shipped_partition
from ramseykit.engine import EXACT, LOWER, UPPER, best_bounds
from ramseykit.fileio import (
    FactLine,
    NoteLine,
    ParseError,
    export_cyclic,
    export_facts,
    export_partition,
    export_witness,
    load_kb,
    parse_facts,
    parse_partition_file,
    parse_witness_file,
    survey_kb,
    survey_text,
)

from conftest import random_coloring


class TestFacts:
    def test_parse_all_forms(self):
        text = '# header\nR(4,3) >= 9 src="x # not a comment"  # trailing\nR(3,3) = 6\nnote R(3,3,3,3) "hi"\n'
        recs = parse_facts(text)
        assert recs == [
            FactLine((3, 4), LOWER, 9, "x # not a comment"),
            FactLine((3, 3), EXACT, 6, ""),
            NoteLine((3, 3, 3, 3), "hi"),
        ]

    @pytest.mark.parametrize(
        "line,lineno",
        [("R(3,3) > 6", 1), ("\nR(3,1) >= 2", 2), ("R(3,3) >= 0", 1), ("S(3,3) = 6", 1), ("R() = 1", 1)],
    )
    def test_errors_carry_line_numbers(self, line, lineno):
        with pytest.raises(ParseError) as info:
            parse_facts(line)
        assert info.value.line == lineno

    def test_round_trip_survey_bytes(self):
        recs = parse_facts(survey_text())
        out = export_facts(recs)
        assert parse_facts(out) == recs
        assert export_facts(parse_facts(out)) == out

    def test_load_kb(self):
        kb = load_kb(['R(3,3) = 6\nnote R(3,3) "classic"\n', "R(3,4) <= 10\n"])
        assert best_bounds(kb, (3, 3)) == (6, 6)
        assert best_bounds(kb, (3, 4)) == (None, 10)
        assert kb.notes[(3, 3)] == ["classic"]

    def test_survey(self):
        kb = survey_kb()
        assert best_bounds(kb, (3,) * 6) == (538, 1838)
        assert best_bounds(kb, (7, 11))[0] == 405
        assert kb.notes[(3, 3, 3, 3)]
        assert kb.inconsistent is None


class TestWitnessFiles:
    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_builtin_round_trip_bytes(self, name):
        c = builtin_witness(name)
        text = export_witness(c)
        assert parse_witness_file(text) == c
        assert export_witness(parse_witness_file(text)) == text

    def test_random_round_trip(self, rng):
        for _ in range(100):
            c = random_coloring(rng, rng.randint(1, 12), rng.randint(1, 4))
            text = export_witness(c)
            assert parse_witness_file(text) == c
            assert export_witness(parse_witness_file(text)) == text

    def test_cyclic_format(self):
        text = export_cyclic(5, [[4, 1], [2, 3]])
        assert text == "cyclic v1\nm=5 r=2\nclass 1: 1 4\nclass 2: 2 3\n"
        assert parse_witness_file(text) == builtin_witness("c5")

    @pytest.mark.parametrize(
        "text,match",
        [
            ("", "empty"),
            ("witness v2\n", "unknown header"),
            ("witness v1\nn=3\n", "n=<int>"),
            ("witness v1\nn=3 r=2\n1 2\n", "expected 2 rows"),
            ("witness v1\nn=3 r=2\n1 2\n3\n", "outside"),
            ("witness v1\nn=3 r=2\n1\n1\n", "row 0 has 1"),
            ("cyclic v1\nm=5 r=2\nclass 1: 1 4\nclass 2: 2\n", "not symmetric"),
            ("cyclic v1\nm=5 r=1\nclass 1: 1 4\n", "not covered"),
        ],
    )
    def test_malformed(self, text, match):
        with pytest.raises(ParseError, match=match):
            parse_witness_file(text)


class TestPartitionFiles:
    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_shipped_round_trip(self, r):
        p = shipped_partition(r)
        text = export_partition(p)
        assert parse_partition_file(text) == p
        assert export_partition(parse_partition_file(text)) == text

    def test_cyclic_round_trip(self):
        p = SumFreePartition(5, "cyclic", ((1, 4), (2, 3)))
        assert parse_partition_file(export_partition(p)) == p

    @pytest.mark.parametrize(
        "text,match",
        [
            ("partition v2\n", "header"),
            ("partition v1\nn=4 r=2\n", "mode"),
            ("partition v1\nn=4 r=2 mode=modular\npart: 1 4\npart: 2 3\n", "linear or cyclic"),
            ("partition v1\nn=4 r=2 mode=linear\npart: 1 4\n", "expected 2 part"),
            ("partition v1\nn=4 r=2 mode=linear\npart: 1 4\npart: 2\n", "not partitioned"),
            ("partition v1\nn=4 r=2 mode=linear\npart: 1 4\nblock: 2 3\n", "part:"),
        ],
    )
    def test_malformed(self, text, match):
        with pytest.raises(ParseError, match=match):
            parse_partition_file(text)
