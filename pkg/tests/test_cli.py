import json

from approxalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestQueries:
    def test_spec_mod_30(self, capsys):
        code, out, _ = run(capsys, "spec", "--ring", "Z",
                           "--closure", "shift:J=30")
        assert code == 0
        assert "(2), (3), (5)" in out

    def test_vset(self, capsys):
        code, out, _ = run(capsys, "vset", "--ring", "Z",
                           "--closure", "shift:J=30", "--ideal", "12")
        assert code == 0
        assert "(2), (3)" in out

    def test_dset(self, capsys):
        code, out, _ = run(capsys, "dset", "--ring", "Z",
                           "--closure", "shift:J=30", "--ideal", "12")
        assert code == 0
        assert "(5)" in out

    def test_is_prime(self, capsys):
        code, out, _ = run(capsys, "is-prime", "--ring", "Z",
                           "--closure", "shift:J=12", "--ideal", "3")
        assert code == 0
        assert "prime: True" in out

    def test_product(self, capsys):
        code, out, _ = run(capsys, "product", "--ring", "Z",
                           "--closure", "shift:J=12",
                           "--ideal", "2", "--ideal", "3")
        assert code == 0
        assert "product: (6)" in out

    def test_quotient(self, capsys):
        code, out, _ = run(capsys, "quotient", "--ring", "Z",
                           "--closure", "shift:J=6", "--ideal", "4")
        assert code == 0
        assert "classes: 2" in out

    def test_radical(self, capsys):
        code, out, _ = run(capsys, "radical", "--ring", "Z",
                           "--closure", "shift:J=12", "--ideal", "0")
        assert code == 0
        assert "radical: (6)" in out


class TestChecks:
    def test_axioms_exhaustive(self, capsys):
        code, out, _ = run(capsys, "axioms", "--ring", "Zn:12",
                           "--closure", "shift:J=4", "--mode", "exhaustive")
        assert code == 0
        assert out.count("[pass]") == 6

    def test_topology(self, capsys):
        code, out, _ = run(capsys, "topology", "--ring", "Zn:12",
                           "--closure", "gen")
        assert code == 0
        assert "[pass] T0" in out and "[pass] T1" in out

    def test_localize(self, capsys):
        code, out, _ = run(capsys, "localize", "--ring", "Z",
                           "--closure", "shift:J=30", "--mult-set", "2")
        assert code == 0
        assert "classes: 15" in out
        assert "extension-contraction-bijection" in out

    def test_nullstellensatz(self, capsys):
        code, out, _ = run(capsys, "nullstellensatz", "--ring", "Fun:p=2,n=1",
                           "--closure", "pointwise")
        assert code == 0
        assert "[pass] radical-equals-vanishing-ideal" in out

    def test_modules(self, capsys, tmp_path):
        doc = {"module": {"scalars": "Z", "orders": [12]},
               "closure": {"name": "shift", "shift": [[6]]},
               "check": "cm-axioms", "mode": "exhaustive"}
        path = tmp_path / "mod.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "modules", "--file", str(path))
        assert code == 0
        assert "[pass] CM4" in out

    def test_modules_inline_spec(self, capsys):
        doc = {"module": {"scalars": "Z", "orders": [24]},
               "closure": {"name": "gen"}, "check": "iso3",
               "N": [[12]], "K": [[6]]}
        code, out, _ = run(capsys, "modules", "--spec", json.dumps(doc))
        assert code == 0
        assert "[pass] class-counts-equal" in out


class TestExitCodes:
    def test_parse_error_is_usage_error(self, capsys):
        code, _, err = run(capsys, "spec", "--ring", "What:3",
                           "--closure", "gen")
        assert code == 2
        assert "error" in err

    def test_resource_guard_is_exit_3(self, capsys):
        code, _, err = run(capsys, "axioms", "--ring", "Zn:40",
                           "--closure", "gen", "--mode", "exhaustive")
        assert code == 3
        assert "resource limit" in err

    def test_failed_verdict_is_exit_1(self, capsys, tmp_path):
        suite = [{"name": "wrong", "ring": "Z", "closure": "shift:J=12",
                  "operation": "is-prime", "params": {"generators": "3"},
                  "expected": False}]
        path = tmp_path / "suite.json"
        path.write_text(json.dumps(suite))
        code, out, _ = run(capsys, "scenario", str(path))
        assert code == 1
        assert "expected" in out and "got" in out


class TestScenarios:
    def test_scenarios_round_trip_through_json(self):
        from importlib import resources
        text = resources.files("approxalg.data").joinpath(
            "paper_examples.json").read_text(encoding="utf-8")
        suite = json.loads(text)
        assert json.loads(json.dumps(suite)) == suite

    def test_bundled_suite_passes(self, capsys):
        code, out, _ = run(capsys, "scenario", "paper-examples")
        assert code == 0
        assert out.count("[pass]") == 10

    def test_empty_suite_trivially_passes(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text("[]")
        code, out, _ = run(capsys, "scenario", str(path))
        assert code == 0
        assert "scenario-count: 0" in out

    def test_broken_scenario_is_isolated(self, capsys, tmp_path):
        suite = [
            {"name": "bad", "ring": "Nope", "operation": "spec",
             "closure": "gen"},
            {"name": "good", "ring": "Z", "closure": "shift:J=12",
             "operation": "is-prime", "params": {"generators": "3"},
             "expected": True},
        ]
        path = tmp_path / "suite.json"
        path.write_text(json.dumps(suite))
        code, out, err = run(capsys, "scenario", str(path))
        assert code == 2
        assert "[pass] good" in out  # the other scenario still ran


class TestJsonOutput:
    def test_byte_stable_reports(self, capsys):
        _, out1, _ = run(capsys, "spec", "--ring", "Z",
                         "--closure", "shift:J=30", "--format", "json")
        _, out2, _ = run(capsys, "spec", "--ring", "Z",
                         "--closure", "shift:J=30", "--format", "json")
        assert out1 == out2
        doc = json.loads(out1)
        assert doc["tool-version"]
        assert doc["command"] == "spec"
        assert doc["timing"] is None
        assert doc["primes"] == ["(2)", "(3)", "(5)"]

    def test_axiom_report_fields(self, capsys):
        _, out, _ = run(capsys, "axioms", "--ring", "Zn:12",
                        "--closure", "shift:J=4", "--mode", "exhaustive",
                        "--format", "json")
        doc = json.loads(out)
        first = doc["verdicts"][0]
        assert set(first) == {"axiom", "verdict", "counterexample", "mode",
                              "seed", "details"}
