import json

import pytest

from spanlab import SUITE_IDS, SweepConfig, UnknownSuite, run_all, run_suite
from spanlab.cli import main


SMALL = SweepConfig(max_entry=5, random_trials=30)


class TestSuites:
    def test_unknown_suite(self):
        with pytest.raises(UnknownSuite):
            run_suite("nope")

    def test_all_ids_registered(self):
        assert set(SUITE_IDS) == {
            "prop33", "cor43", "prop41", "prop49_410", "prop51",
            "rem53", "prop44_45", "prop46_47", "thm14_15", "prop37",
        }

    @pytest.mark.parametrize("suite_id", ["prop33", "cor43", "prop41", "prop49_410", "prop37"])
    def test_small_runs_pass(self, suite_id):
        report = run_suite(suite_id, SMALL)
        assert report.passed
        assert report.checked > 0

    def test_deterministic_reports(self):
        a = run_suite("cor43", SMALL).to_dict()
        b = run_suite("cor43", SMALL).to_dict()
        a.pop("seconds"), b.pop("seconds")
        assert a == b

    @pytest.mark.parametrize("suite_id", SUITE_IDS)
    def test_falsified_oracle_is_caught(self, suite_id):
        cfg = SweepConfig(max_entry=5, random_trials=20, falsify_oracle=True)
        report = run_suite(suite_id, cfg)
        assert not report.passed
        assert report.failures[0]["expected"] != report.failures[0]["got"]

    def test_report_written(self, tmp_path):
        path = tmp_path / "report.json"
        report = run_suite("prop37", SweepConfig(report_path=str(path)))
        on_disk = json.loads(path.read_text())
        assert on_disk == report.to_dict()

    def test_run_all_aggregates(self, monkeypatch, tmp_path):
        monkeypatch.setenv("SPANLAB_THREADS", "2")
        path = tmp_path / "all.json"
        cfg = SweepConfig(max_entry=4, random_trials=20, report_path=str(path))
        reports = run_all(cfg)
        assert [r.suite for r in reports] == list(SUITE_IDS)
        assert all(r.passed for r in reports)
        assert len(json.loads(path.read_text())) == len(SUITE_IDS)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCli:
    def test_span_human(self, capsys):
        code, out = run_cli(capsys, "span", "--seq", "0,1,2,4", "--m", "3", "--classify")
        assert code == 0
        assert "12" in out and "NEAR_AP_HIGH" in out

    def test_span_envelope_round_trip(self, capsys):
        code, out = run_cli(capsys, "span", "--seq", "0,1,3", "--m", "2", "--json")
        assert code == 0
        envelope = json.loads(out)
        assert envelope["result"]["span"] == 6
        assert envelope["result"]["values"] == [0, 1, 2, 3, 4, 6]
        again = json.loads(run_cli(capsys, "span",
                                   "--seq", envelope["inputs"]["seq"],
                                   "--m", str(envelope["inputs"]["m"]), "--json")[1])
        assert again["result"] == envelope["result"]

    def test_semigroup(self, capsys):
        code, out = run_cli(capsys, "semigroup", "--gens", "3,5", "--json")
        assert code == 0
        assert json.loads(out)["result"]["gaps"] == [1, 2, 4, 7]

    def test_curve(self, capsys):
        code, out = run_cli(capsys, "curve", "--seq", "0,1,3", "--json")
        result = json.loads(out)["result"]
        assert (result["degree"], result["arithmetic_genus"]) == (3, 1)

    def test_hilbert(self, capsys):
        code, out = run_cli(capsys, "hilbert", "--seq", "0,1,2,4", "--mcap", "16", "--json")
        result = json.loads(out)["result"]
        assert (result["leading"], result["constant"], result["threshold"]) == (4, 0, 1)

    def test_ideal_dims(self, capsys):
        code, out = run_cli(capsys, "ideal", "dims", "--seq", "0,1,2", "--m", "2", "--json")
        result = json.loads(out)["result"]
        assert (result["quotient_dim"], result["relation_dim"]) == (5, 1)

    def test_ideal_gendeg(self, capsys):
        code, out = run_cli(capsys, "ideal", "gendeg", "--seq", "0,1,3", "--mcap", "8", "--json")
        assert json.loads(out)["result"]["generation_degree"] == 3

    def test_game_trace(self, capsys):
        code, out = run_cli(capsys, "game", "trace", "--seq", "0,1,2",
                            "--from", "1,0,1", "--to", "0,2,0", "--json")
        result = json.loads(out)["result"]
        assert result["equivalent"] and result["moves"] == [[[0, 2], [1, 1]]]

    def test_game_trace_split(self, capsys):
        code, out = run_cli(capsys, "game", "trace", "--seq", "0,1,3",
                            "--from", "2,0,1", "--to", "0,3,0", "--json")
        result = json.loads(out)["result"]
        assert code == 0 and not result["equivalent"]
        assert result["components"] is not None

    def test_jets_commands(self, capsys, tmp_path):
        path = tmp_path / "sections.json"
        path.write_text(json.dumps([["1"], ["0", "1"], ["0", "0", "0", "1", "1/2"]]))
        code, out = run_cli(capsys, "jets", "rank", "--sections-file", str(path), "--m", "2", "--json")
        result = json.loads(out)["result"]
        assert (result["adapted"], result["dim"]) == ([0, 1, 3], 6)
        code, out = run_cli(capsys, "jets", "maximal", "--sections-file", str(path), "--m", "2", "--json")
        assert json.loads(out)["result"]["maximal"] is True
        code, out = run_cli(capsys, "jets", "profile", "--sections-file", str(path), "--m", "2", "--json")
        assert json.loads(out)["result"]["kernel_dim"] == 0

    def test_jets_estimate(self, capsys, tmp_path):
        path = tmp_path / "sections.json"
        path.write_text(json.dumps([["1"], ["0", "1"], ["0", "0", "1"], ["0", "0", "0", "0", "1"]]))
        code, out = run_cli(capsys, "jets", "estimate", "--sections-file", str(path),
                            "--mlo", "1", "--mhi", "4", "--json")
        result = json.loads(out)["result"]
        assert (result["degree"], result["arithmetic_genus"]) == (4, 1)

    def test_bounds(self, capsys):
        code, out = run_cli(capsys, "bounds", "hypersurfaces", "--n", "3", "--m", "2", "--json")
        result = json.loads(out)["result"]
        assert (result["max_hypersurfaces"], result["next_hypersurface_bound"]) == (3, 2)
        code, out = run_cli(capsys, "bounds", "pluecker", "--n", "3", "--d", "4", "--g", "1",
                            "--weights", ",".join(["1"] * 16), "--json")
        result = json.loads(out)["result"]
        assert result["budget"] == 16 and result["matches"] is True

    def test_verify_single_suite(self, capsys, tmp_path):
        out_path = tmp_path / "r.json"
        code, out = run_cli(capsys, "verify", "--suite", "prop37", "--out", str(out_path))
        assert code == 0
        assert "pass" in out
        assert json.loads(out_path.read_text())["suite"] == "prop37"

    def test_exit_codes(self, capsys):
        assert run_cli(capsys, "span", "--seq", "0,1,1", "--m", "2")[0] == 1
        assert run_cli(capsys, "verify", "--suite", "prop37", "--falsify-oracle")[0] == 3
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == 2

    def test_precondition_violations_are_domain_errors(self, capsys):
        assert run_cli(capsys, "span", "--seq", "0,1,3", "--m", "0")[0] == 1
        assert run_cli(capsys, "hilbert", "--seq", "0,1,3", "--mcap", "1")[0] == 1
        assert run_cli(capsys, "bounds", "hypersurfaces", "--n", "0", "--m", "2")[0] == 1

    def test_missing_sections_file(self, capsys):
        assert main(["jets", "rank", "--sections-file", "/nonexistent.json", "--m", "2"]) == 1
