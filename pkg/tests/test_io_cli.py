import json
import subprocess
import sys

import pytest

from cssep.cli import run_cli
from cssep.errors import InputError, ParseError
from cssep.graph import Graph
from cssep.graphio import (
    parse_dimacs,
    parse_edgelist,
    parse_graph,
    serialize_graph,
    write_graph,
)
from cssep.testbed import gen_random


def c5():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


class TestEdgelist:
    def test_round_trip(self):
        for g in (c5(), Graph.empty(4), Graph.complete(5), Graph.empty(0)):
            assert parse_edgelist(serialize_graph(g, "edgelist")) == g

    def test_comments_and_blanks_ignored(self):
        text = "# a graph\n\n3 2\n0 1\n\n# middle\n1 2\n"
        assert parse_edgelist(text) == Graph.from_edges(3, [(0, 1), (1, 2)])

    def test_duplicate_edges_collapse(self):
        g = parse_edgelist("3 3\n0 1\n1 0\n0 1\n")
        assert g.edges() == [(0, 1)]

    def test_empty_input(self):
        with pytest.raises(ParseError) as exc:
            parse_edgelist("# nothing\n")
        assert "empty edge list" in str(exc.value)

    def test_bad_header(self):
        with pytest.raises(ParseError) as exc:
            parse_edgelist("5\n")
        assert exc.value.line_no == 1

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError) as exc:
            parse_edgelist("3 2\n0 1\n")
        assert "promises 2 edges" in str(exc.value)

    def test_self_loop_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_edgelist("3 1\n0 0\n")
        assert exc.value.line_no == 2
        assert "self-loop at vertex 0" in str(exc.value)

    def test_out_of_range_endpoint(self):
        with pytest.raises(ParseError) as exc:
            parse_edgelist("2 1\n0 5\n")
        assert exc.value.line_no == 2

    def test_non_integer_endpoint(self):
        with pytest.raises(ParseError):
            parse_edgelist("2 1\n0 x\n")


class TestDimacs:
    def test_round_trip(self):
        for g in (c5(), Graph.empty(3), Graph.complete(4)):
            assert parse_dimacs(serialize_graph(g, "dimacs")) == g

    def test_comments_ignored(self):
        text = "c hello\np edge 3 1\nc again\ne 1 2\n"
        assert parse_dimacs(text) == Graph.from_edges(3, [(0, 1)])

    def test_one_based_endpoints(self):
        g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n")
        assert g.edges() == [(0, 1), (1, 2)]

    def test_second_header_rejected(self):
        with pytest.raises(ParseError) as exc:
            parse_dimacs("p edge 2 0\np edge 2 0\n")
        assert exc.value.line_no == 2

    def test_edge_before_header(self):
        with pytest.raises(ParseError):
            parse_dimacs("e 1 2\np edge 3 1\n")

    def test_unrecognized_line(self):
        with pytest.raises(ParseError) as exc:
            parse_dimacs("p edge 2 0\nx 1 2\n")
        assert exc.value.line_no == 2

    def test_self_loop_uses_one_based_label(self):
        with pytest.raises(ParseError) as exc:
            parse_dimacs("p edge 3 1\ne 1 1\n")
        assert "self-loop at vertex 1" in str(exc.value)

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_dimacs("c only comments\n")

    def test_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_dimacs("p edge 3 2\ne 1 2\n")


class TestFileHelpers:
    def test_write_then_parse(self, tmp_path):
        g = gen_random(8, 0.5, seed=4)
        for fmt in ("edgelist", "dimacs"):
            path = tmp_path / f"g.{fmt}"
            write_graph(g, path, fmt)
            assert parse_graph(path, fmt) == g

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            parse_graph(tmp_path / "absent.txt")

    def test_bad_format_name(self):
        with pytest.raises(InputError):
            serialize_graph(c5(), "adjacency")


@pytest.fixture()
def c5_file(tmp_path):
    path = tmp_path / "c5.txt"
    write_graph(c5(), path)
    return str(path)


@pytest.fixture()
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    write_graph(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), path)
    return str(path)


class TestCli:
    def test_check_free_member(self, c5_file):
        code, text, _ = run_cli(["check-free", c5_file, "--p", "2", "--q", "2"])
        doc = json.loads(text)
        assert code == 0
        assert doc["in_class"] is True
        assert doc["stable_tail_embedding"] is None
        assert doc["clique_tail_embedding"] is None

    def test_check_free_non_member_reports_embedding(self, p4_file):
        code, text, _ = run_cli(["check-free", p4_file, "--p", "1", "--q", "1"])
        doc = json.loads(text)
        assert code == 1
        assert doc["in_class"] is False
        emb = doc["stable_tail_embedding"]
        assert set(emb["blocks"]) == {"K", "S1", "S2", "S3"}

    def test_family_reports_bounds(self, c5_file):
        code, text, _ = run_cli(["family", c5_file, "--p", "2", "--q", "2"])
        doc = json.loads(text)
        assert code == 0
        assert doc["bounds_hold"] is True
        assert doc["size"] == len(doc["partitions"])
        assert doc["schema"] == "cssep/family-v1"
        assert all(
            part["provenance"]["kind"] in ("p1-open", "p1-closed", "p2")
            for part in doc["partitions"]
        )

    def test_witness_command(self, c5_file):
        code, text, _ = run_cli(
            ["witness", c5_file, "--p", "2", "--q", "2", "--k", "0,1", "--s", "2,4"]
        )
        doc = json.loads(text)
        assert code == 0
        assert doc["branch"] == "triple-P2"
        assert doc["partition"]["x_side"] == [0, 1]
        assert doc["trace"]["s1"] == [2, 4]

    def test_witness_empty_sets(self, c5_file):
        code, text, _ = run_cli(
            ["witness", c5_file, "--p", "1", "--q", "1", "--k", "", "--s", ""]
        )
        assert code == 0
        assert json.loads(text)["schema"] == "cssep/witness-v1"

    def test_verify_command(self, c5_file):
        code, text, _ = run_cli(["verify", c5_file, "--p", "2", "--q", "2"])
        doc = json.loads(text)
        assert code == 0
        assert doc["covered"] is True
        assert doc["witness_agreement"] == 1.0
        assert doc["uncovered"] == []

    def test_verify_failure_exit_code(self, p4_file):
        code, text, _ = run_cli(
            [
                "verify",
                p4_file,
                "--p",
                "1",
                "--q",
                "1",
                "--p1-singletons",
                "false",
                "--allow-empty-s2",
                "false",
            ]
        )
        doc = json.loads(text)
        assert doc["in_class"] is False
        if doc["covered"] and doc["witness_agreement"] == 1.0:
            assert code == 0
        else:
            assert code == 1

    def test_ramsey_check(self):
        code, text, _ = run_cli(["ramsey-check", "--r", "2", "--q", "2"])
        assert code == 0
        assert json.loads(text)["holds"] is True
        code, text, _ = run_cli(["ramsey-check", "--r", "5", "--q", "3"])
        assert code == 1
        assert json.loads(text)["holds"] is False

    def test_ramsey_check_budget(self):
        code, text, _ = run_cli(["ramsey-check", "--r", "9", "--q", "3"])
        doc = json.loads(text)
        assert code == 3
        assert doc["schema"] == "cssep/error-v1"
        assert doc["error"] == "resource-limit"

    def test_gen_round_trip(self, tmp_path):
        out_graph = str(tmp_path / "gen.txt")
        argv = [
            "gen",
            "--n",
            "8",
            "--edge-prob",
            "0.5",
            "--seed",
            "4",
            "--out-graph",
            out_graph,
        ]
        code, text, _ = run_cli(argv)
        assert code == 0
        assert json.loads(text)["generated"] is True
        assert parse_graph(out_graph) == gen_random(8, 0.5, seed=4)

    def test_gen_require_class_needs_pq(self, tmp_path):
        code, text, _ = run_cli(
            [
                "gen",
                "--n",
                "4",
                "--edge-prob",
                "0.5",
                "--seed",
                "0",
                "--out-graph",
                str(tmp_path / "g.txt"),
                "--require-class",
            ]
        )
        assert code == 2
        assert json.loads(text)["error"] == "input"

    def test_gen_exhausted_tries(self, tmp_path):
        code, text, _ = run_cli(
            [
                "gen",
                "--n",
                "4",
                "--edge-prob",
                "0.5",
                "--seed",
                "0",
                "--out-graph",
                str(tmp_path / "g.txt"),
                "--require-class",
                "--p",
                "1",
                "--q",
                "1",
                "--max-tries",
                "1",
            ]
        )
        assert code == 1
        assert json.loads(text)["generated"] is False

    def test_missing_graph_file(self):
        code, text, _ = run_cli(["check-free", "/nonexistent", "--p", "1", "--q", "1"])
        assert code == 2
        assert json.loads(text)["error"] == "input"

    def test_malformed_graph_file(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("3 1\n0 0\n")
        code, text, _ = run_cli(["check-free", str(bad), "--p", "1", "--q", "1"])
        doc = json.loads(text)
        assert code == 2
        assert "line 2" in doc["message"]

    def test_family_budget_exit(self, c5_file):
        code, text, _ = run_cli(
            ["family", c5_file, "--p", "1", "--q", "1", "--family", "faithful", "--budget", "2"]
        )
        doc = json.loads(text)
        assert code == 3
        assert "budget" in doc["message"]

    def test_out_file_matches_returned_text(self, c5_file, tmp_path):
        out = tmp_path / "report.json"
        code, text, out_path = run_cli(
            ["family", c5_file, "--p", "2", "--q", "2", "--out", str(out)]
        )
        assert code == 0
        assert out_path == str(out)
        assert out.read_text() == text

    def test_reports_are_byte_deterministic(self, c5_file, tmp_path):
        out_graph = str(tmp_path / "g.txt")
        runs = [
            ["check-free", c5_file, "--p", "2", "--q", "2"],
            ["family", c5_file, "--p", "2", "--q", "2"],
            ["witness", c5_file, "--p", "2", "--q", "2", "--k", "0,1", "--s", "2,4"],
            ["verify", c5_file, "--p", "2", "--q", "2"],
            ["ramsey-check", "--r", "4", "--q", "2"],
            ["gen", "--n", "6", "--edge-prob", "0.3", "--seed", "1", "--out-graph", out_graph],
        ]
        for argv in runs:
            code1, text1, _ = run_cli(argv)
            code2, text2, _ = run_cli(argv)
            assert (code1, text1) == (code2, text2)
            assert text1.endswith("\n")
            json.loads(text1)

    def test_console_entry_point(self, c5_file):
        proc = subprocess.run(
            [sys.executable, "-m", "cssep.cli", "check-free", c5_file, "--p", "2", "--q", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["in_class"] is True
