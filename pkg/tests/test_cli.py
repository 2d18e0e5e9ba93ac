import io
import json

import pytest

from grundylab.cli import CliConfig, parse_skeleton, parse_units, run
from grundylab.families.catalog import catalog, catalog_entry
from grundylab.graphs import graph6_encode, write_graph6_lines
from grundylab.utils.error_handler import UsageError
from grundylab.verify.enumeration import enumerate_cubic
from grundylab.verify.models import Check


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _pipe(monkeypatch, text):
    monkeypatch.setattr("sys.stdin", io.StringIO(text))


class TestCompute:
    def test_k4_all(self, capsys):
        code, out, _ = _run(capsys, "compute", "--graph6", "C~", "--all", "--format", "json")
        assert code == 0
        assert json.loads(out) == [
            {"graph6": "C~", "n": 4, "m": 6, "grundy": 1, "zgrundy": 1, "zero_forcing": 3}
        ]

    def test_generate_pipe_petersen(self, capsys, monkeypatch):
        code, out, _ = _run(capsys, "generate", "petersen")
        assert code == 0
        _pipe(monkeypatch, out)
        code, out, _ = _run(capsys, "compute", "--all", "--format", "json")
        record = json.loads(out)[0]
        assert (record["grundy"], record["zgrundy"], record["zero_forcing"]) == (5, 5, 5)

    @pytest.mark.parametrize("name", ["N_YY", "K3xK2", "Q3", "TK", "K33", "diamond", "C7"])
    def test_generate_pipe_reproduces_catalog(self, capsys, monkeypatch, name):
        known = catalog_entry(name).known_values
        _, out, _ = _run(capsys, "generate", name)
        _pipe(monkeypatch, out)
        _, out, _ = _run(capsys, "compute", "--all", "--format", "json")
        record = json.loads(out)[0]
        assert record["zgrundy"] == known.zgrundy
        assert record["zero_forcing"] == known.zero_forcing
        if known.grundy is not None:
            assert record["grundy"] == known.grundy

    def test_single_variant_csv(self, capsys):
        code, out, _ = _run(capsys, "compute", "--graph6", "C~", "--variant", "forcing", "--format", "csv")
        assert code == 0
        assert out == "graph6,n,m,zero_forcing\nC~,4,6,3\n"

    def test_text_is_byte_stable(self, capsys, petersen):
        argv = ["compute", "--graph6", graph6_encode(petersen), "--all", "--witness"]
        first = _run(capsys, *argv)[1]
        second = _run(capsys, *argv)[1]
        assert first == second
        assert "grundy_witness" in first

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "k4.csv"
        code, out, _ = _run(capsys, "compute", "--graph6", "C~", "--format", "csv", "--output", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text() == "graph6,n,m,grundy\nC~,4,6,1\n"

    def test_bad_graph6(self, capsys):
        code, _, err = _run(capsys, "compute", "--graph6", "C!")
        assert code == 2
        assert "error" in err

    def test_empty_stdin(self, capsys, monkeypatch):
        _pipe(monkeypatch, "")
        code, _, err = _run(capsys, "compute")
        assert code == 2
        assert "No graph given" in err

    def test_non_ascii_input_file(self, capsys, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_bytes(b"C\xc3\xa9\n")
        code, _, err = _run(capsys, "compute", "--input", str(path))
        assert code == 2
        assert "Line 1" in err

    def test_undecodable_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"C\xff\n"), encoding="utf-8"))
        code, _, err = _run(capsys, "compute")
        assert code == 2
        assert "not valid text" in err

    def test_z_with_isolated_vertex(self, capsys):
        code, _, _ = _run(capsys, "compute", "--graph6", "B?", "--variant", "zgrundy")
        assert code == 2


class TestWitnessRoundTrip:
    def test_emitted_witnesses_verify(self, capsys, tmp_path, petersen):
        target = tmp_path / "witness.json"
        code, _, _ = _run(
            capsys, "compute", "--graph6", graph6_encode(petersen), "--all", "--witness",
            "--format", "json", "--output", str(target),
        )
        assert code == 0
        records = json.loads(target.read_text())
        assert [w["variant"] for w in records[0]["witnesses"]] == ["grundy", "zgrundy"]
        assert len(records[0]["zero_forcing_seed"]) == 5
        code, out, _ = _run(capsys, "verify", "--witness", str(target))
        assert code == 0
        assert out.count(": ok ") == 2

    def test_tampered_witness_fails(self, capsys, tmp_path, prism):
        target = tmp_path / "witness.jsonl"
        target.write_text(
            json.dumps({"graph": graph6_encode(prism), "order": [0, 1, 2, 3], "variant": "zgrundy"}) + "\n"
        )
        code, out, _ = _run(capsys, "verify", "--witness", str(target))
        assert code == 1
        assert "invalid" in out

    @pytest.mark.parametrize(
        "document",
        [[1, 2], [{"witnesses": [5]}], [{"witnesses": "grundy"}], {"graph": "C~", "variant": "grundy"}, 7],
    )
    def test_malformed_witness_document(self, capsys, tmp_path, document):
        target = tmp_path / "witness.json"
        target.write_text(json.dumps(document))
        code, _, err = _run(capsys, "verify", "--witness", str(target))
        assert code == 2
        assert "error" in err


class TestGenerate:
    def test_named(self, capsys):
        code, out, _ = _run(capsys, "generate", "K4")
        assert code == 0
        assert out == "C~\n"

    def test_family(self, capsys):
        code, out, _ = _run(capsys, "generate", "family", "0-1,0-2,0-3", "1:X,2:Y,3:Y")
        assert code == 0
        assert out == graph6_encode(catalog_entry("XY2").graph) + "\n"

    def test_random_needs_seed(self, capsys):
        code, _, err = _run(capsys, "generate", "random", "--order", "10", "--degree", "3")
        assert code == 2
        assert "--seed" in err

    def test_random_is_reproducible(self, capsys):
        argv = ["generate", "random", "--order", "10", "--degree", "3", "--seed", "4", "--count", "3"]
        first = _run(capsys, *argv)[1]
        assert first == _run(capsys, *argv)[1]
        assert len(first.splitlines()) == 3

    def test_unknown_name(self, capsys):
        code, _, _ = _run(capsys, "generate", "dodecahedron")
        assert code == 2

    def test_catalog(self, capsys):
        code, out, _ = _run(capsys, "generate", "--catalog")
        assert code == 0
        assert len(out.splitlines()) >= 15

    def test_catalog_lines_match_writer(self, capsys):
        out = _run(capsys, "generate", "--catalog")[1]
        assert out == write_graph6_lines(entry.graph for entry in catalog())


class TestVerify:
    def test_thm34_order_eight(self, capsys):
        code, out, _ = _run(capsys, "verify", "thm34", "--enumerate", "8", "--format", "json")
        assert code == 0
        summary = json.loads(out)["summary"]
        assert summary["graphs"] == 5
        assert summary["extremal"] == 4
        assert summary["fail"] == 0

    def test_several_orders_and_checks(self, capsys):
        code, out, _ = _run(
            capsys, "verify", "thm34", "duality", "--enumerate", "4", "--enumerate", "6", "--format", "csv",
        )
        assert code == 0
        assert len(out.splitlines()) == 1 + 2 * 3

    def test_exception_graph_is_excluded(self, capsys, petersen):
        code, out, _ = _run(
            capsys, "verify", "thm21", "--graph6", "D~{", "--graph6", graph6_encode(petersen),
        )
        assert code == 0
        assert "excluded" in out

    def test_random_source(self, capsys):
        code, _, _ = _run(capsys, "verify", "thm34", "--random", "10", "3", "2", "--seed", "1")
        assert code == 0

    def test_failure_exit_code(self, capsys, monkeypatch, petersen):
        from grundylab.verify import harness

        monkeypatch.setattr(harness, "_members", lambda which: ())
        code, _, _ = _run(capsys, "verify", "thm44", "--graph6", graph6_encode(petersen))
        assert code == 1

    def test_missing_source(self, capsys):
        code, _, err = _run(capsys, "verify", "thm34")
        assert code == 2
        assert "input source" in err

    def test_two_sources(self, capsys):
        code, _, err = _run(capsys, "verify", "thm34", "--enumerate", "8", "--catalog")
        assert code == 2
        assert "exactly one input source" in err

    def test_unknown_check(self, capsys):
        code, _, _ = _run(capsys, "verify", "thm99", "--catalog")
        assert code == 2

    def test_workers_must_be_positive(self, capsys):
        code, _, _ = _run(capsys, "verify", "thm34", "--enumerate", "6", "--workers", "0")
        assert code == 2

    def test_input_file(self, capsys, tmp_path, petersen, k4):
        path = tmp_path / "cubic.g6"
        path.write_text(graph6_encode(petersen) + "\n" + graph6_encode(k4) + "\n")
        code, out, _ = _run(capsys, "verify", "thm44", "--input", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out)["summary"]["extremal"] == 1


class TestEnumerateAndRecognize:
    def test_enumerate_six(self, capsys):
        code, out, _ = _run(capsys, "enumerate", "6")
        assert code == 0
        assert len(out.splitlines()) == 2
        assert out == write_graph6_lines(enumerate_cubic(6))

    def test_enumerate_out_of_range(self, capsys):
        code, _, _ = _run(capsys, "enumerate", "12")
        assert code == 2

    def test_recognize_member(self, capsys, monkeypatch):
        _, out, _ = _run(capsys, "generate", "family", "0-1", "0:X,1:Y")
        _pipe(monkeypatch, out)
        code, out, _ = _run(capsys, "recognize", "--format", "json")
        assert code == 0
        record = json.loads(out)[0]
        assert record["member"] is True
        assert record["signature"] == "XY"
        assert record["extremal"] is True

    def test_recognize_non_member(self, capsys, petersen):
        code, out, _ = _run(capsys, "recognize", "--graph6", graph6_encode(petersen), "--format", "json")
        assert code == 0
        assert json.loads(out)[0]["member"] is False

    def test_recognize_not_cubic(self, capsys):
        code, _, _ = _run(capsys, "recognize", "--graph6", "D??")
        assert code == 2


class TestParsing:
    def test_no_subcommand(self, capsys):
        assert _run(capsys)[0] == 2

    def test_help(self, capsys):
        assert _run(capsys, "--help")[0] == 0

    def test_skeleton_and_units(self):
        assert parse_skeleton("0-1,0-2") == [(0, 1), (0, 2)]
        assert parse_units("1:x,2:Y") == {1: "X", 2: "Y"}
        with pytest.raises(UsageError):
            parse_skeleton("0:1")
        with pytest.raises(UsageError):
            parse_units("1-X")

    def test_config_accepts_check_names(self):
        config = CliConfig(command="verify", checks=["thm34"], catalog=True)
        assert config.checks == [Check.THM34]
        assert config.sources == ["--catalog"]
