import csv
import io
import json
from fractions import Fraction as F

import pytest

from anticonc import Dist, bernoulli, uniform_on
from anticonc.cli import _dump_witness, build_parser, main
from anticonc.errors import AssertionFailed


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_dists(tmp_path, name, *dists):
    path = tmp_path / name
    payload = [d.to_json_obj() for d in dists]
    path.write_text(json.dumps(payload[0] if len(payload) == 1 else payload))
    return str(path)


class TestDistCommands:
    def test_conv_atom_q_round_trip(self, tmp_path, capsys):
        b = bernoulli(F(1, 2))
        path = write_dists(tmp_path, "pair.json", b, b.negate())
        code, out, _ = run(capsys, "dist", "conv", "--in", path)
        assert code == 0
        conv = Dist.from_json_obj(json.loads(out))
        assert conv.atom(0) == F(1, 2)

        single = write_dists(tmp_path, "single.json", conv)
        code, out, _ = run(capsys, "dist", "atom", "--in", single, "--x", "0")
        assert code == 0
        assert json.loads(out) == {"x": [0], "mass": "1/2"}

        code, out, _ = run(capsys, "dist", "q", "--in", single)
        assert code == 0
        assert json.loads(out) == {"value": "1/2", "argmax": [0]}

    def test_output_file_and_determinism(self, tmp_path, capsys):
        out1 = tmp_path / "a.json"
        out2 = tmp_path / "b.json"
        assert main(["family", "ualpha", "--alpha", "2/5", "--out", str(out1)]) == 0
        assert main(["family", "ualpha", "--alpha", "2/5", "--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        obj = json.loads(out1.read_text())
        assert obj["atoms"] == [[[0], "2/5"], [[1], "2/5"], [[2], "1/5"]]


class TestFamilyCommands:
    def test_tn(self, capsys):
        code, out, _ = run(capsys, "family", "tn", "--n", "4", "--p", "1/2")
        assert code == 0
        assert Dist.from_json_obj(json.loads(out)).atom(0) == F(3, 8)

    def test_binom(self, capsys):
        code, out, _ = run(capsys, "family", "binom", "--n", "2", "--p", "1/3")
        assert code == 0
        assert json.loads(out)["atoms"] == [[[0], "4/9"], [[1], "4/9"], [[2], "1/9"]]


class TestRearrangeCommands:
    def test_left_right_sym(self, capsys):
        code, out, _ = run(capsys, "rearrange", "left", "--values", "1/5,1/2,3/10")
        assert (code, json.loads(out)) == (0, ["3/10", "1/2", "1/5"])
        code, out, _ = run(capsys, "rearrange", "right", "--values", "1/5,1/2,3/10")
        assert (code, json.loads(out)) == (0, ["1/5", "1/2", "3/10"])
        code, out, _ = run(capsys, "rearrange", "sym", "--values", "0,1,0")
        assert (code, json.loads(out)) == (0, ["0/1", "1/1", "0/1"])

    def test_sym_failure_is_input_error(self, capsys):
        code, _, err = run(capsys, "rearrange", "sym", "--values", "1/5,1/2,3/10")
        assert code == 1
        assert "rearrangement" in err


class TestCheckCommands:
    def test_balancing_fixed_instance(self, tmp_path, capsys):
        b = bernoulli(F(1, 3))
        path = write_dists(tmp_path, "pair.json", b, b)
        code, out, _ = run(capsys, "check", "balancing", "--in", path, "--x", "0")
        assert code == 0
        report = json.loads(out)
        assert report == {"index": 0, "lhs": "4/9", "rhs": "5/9", "strict": True, "holds": True}

    def test_theorem2_fixed_instance(self, tmp_path, capsys):
        u = uniform_on([0, 1, 2])
        path = write_dists(tmp_path, "pair.json", u, u)
        code, out, _ = run(capsys, "check", "theorem2", "--in", path, "--alpha", "1/3", "--x", "2")
        assert code == 0
        assert json.loads(out) == {"lhs": "1/3", "rhs": "1/3", "holds": True}

    def test_birnbaum_fixed_instance(self, tmp_path, capsys):
        u = uniform_on([-1, 0, 1])
        path = write_dists(tmp_path, "trip.json", u, u, Dist.from_entries([(0, 1)]))
        code, out, _ = run(capsys, "check", "birnbaum", "--in", path, "--k", "0")
        assert code == 0
        assert json.loads(out) == {"lhs": "1/3", "rhs": "1/3", "holds": True}

    def test_monotone_fixed_instance(self, tmp_path, capsys):
        b = bernoulli(F(1, 2))
        path = write_dists(tmp_path, "chain.json", b, b, b, b)
        code, out, _ = run(capsys, "check", "monotone", "--in", path)
        assert code == 0
        assert json.loads(out)["maxima"] == ["1/2", "1/2", "3/8", "3/8"]

    def test_gabriel_fixed_instance(self, tmp_path, capsys):
        path = tmp_path / "seqs.json"
        path.write_text(json.dumps([["1/5", "1/2", "3/10"], ["1/4", "1/4", "1/2"]]))
        code, out, _ = run(capsys, "check", "gabriel", "--in", str(path))
        assert code == 0
        report = json.loads(out)
        assert report["holds"] is True
        assert F(report["lhs"]) <= F(report["rhs"])

    def test_trials_mode(self, capsys):
        for sub in ("gabriel", "birnbaum", "balancing", "theorem2", "monotone"):
            code, out, _ = run(capsys, "check", sub, "--trials", "10", "--seed", "3")
            assert code == 0, sub
            report = json.loads(out)
            assert report == {"trials": 10, "seed": 3, "violations": 0, "holds": True}

    def test_missing_inputs_are_usage_errors(self, capsys):
        code, _, err = run(capsys, "check", "balancing")
        assert code == 1
        assert "give --in or --trials" in err


class TestDecompose:
    def test_mixture_output(self, tmp_path, capsys):
        d = Dist.from_entries([(0, "1/2"), (1, "3/10"), (2, "1/5")])
        path = write_dists(tmp_path, "mu.json", d)
        code, out, _ = run(capsys, "decompose", "--in", path, "--alpha", "1/2")
        assert code == 0
        report = json.loads(out)
        assert report["kind"] == "mixture"
        assert report["p"] == "2/3"
        assert Dist.from_json_obj(report["mu2"]).atoms == (((0,), F(1, 2)), ((1,), F(1, 2)))

    def test_extremal_output(self, tmp_path, capsys):
        path = write_dists(tmp_path, "mu.json", uniform_on([4, 7]))
        code, out, _ = run(capsys, "decompose", "--in", path, "--alpha", "1/2")
        assert code == 0
        assert json.loads(out) == {"kind": "extremal", "alpha": "1/2", "points": [[4], [7]], "rest": None}


class TestAsymCommands:
    def parse_csv(self, text):
        rows = list(csv.reader(io.StringIO(text)))
        return rows[0], rows[1:]

    def test_tnzero_row_shape(self, capsys):
        code, out, _ = run(capsys, "asym", "tnzero", "--n", "20", "--p", "1/2")
        assert code == 0
        header, rows = self.parse_csv(out)
        assert header == ["quantity", "n", "param", "exact", "asym", "residual", "scaled_residual"]
        assert rows[0][0] == "alternating_zero"
        assert rows[0][3] == "46189/262144"

    def test_largeodd_emits_two_rows(self, capsys):
        code, out, _ = run(capsys, "asym", "largeodd", "--m", "5", "--p", "1/3")
        assert code == 0
        _, rows = self.parse_csv(out)
        assert [r[0] for r in rows] == ["odd_tail_double_pair", "odd_tail_triple"]
        assert all(r[1] == "8" for r in rows)

    def test_corollary2_reports_exact_and_bound(self, capsys):
        code, out, _ = run(capsys, "asym", "corollary2", "--n", "8", "--alpha", "1/2")
        assert code == 0
        _, rows = self.parse_csv(out)
        assert rows[0][2] == "1/2"
        assert F(rows[0][3]) <= F(1)

    def test_smalldev_json_format(self, capsys):
        code, out, _ = run(capsys, "asym", "smalldev", "--n", "10", "--p", "1/2", "--k", "1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["exact"] == "10/11"

    def test_wagner_param_column(self, capsys):
        code, out, _ = run(capsys, "asym", "wagner", "--n", "20", "--b", "2", "--c", "1")
        assert code == 0
        _, rows = self.parse_csv(out)
        assert rows[0][2] == "b=2/1;c=1/1"
        assert float(rows[0][5]) < 1e-3


class TestScanCommands:
    def test_kphase_csv(self, capsys):
        code, out, _ = run(capsys, "scan", "kphase", "--n", "3", "--grid", "4")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "p_num", "p_den", "best_k_set", "best_value"]
        assert rows[-1] == ["3", "1", "2", "0;1", "3/8"]
        ps = [F(int(r[1]), int(r[2])) for r in rows[1:]]
        assert ps == sorted(ps)

    def test_kphase_json(self, capsys):
        code, out, _ = run(capsys, "scan", "kphase", "--n", "3", "--grid", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 3
        assert payload["cells"][-1]["best_ks"] == [0, 1]

    def test_signs(self, tmp_path, capsys):
        path = write_dists(tmp_path, "u.json", uniform_on([0, 1, 2]))
        code, out, _ = run(capsys, "scan", "signs", "--in", path, "--n", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == "7/27"
        assert payload["signs"] == [-1, -1, -1]

    def test_weights(self, tmp_path, capsys):
        path = write_dists(tmp_path, "u.json", uniform_on([0, 1, 2]))
        code, out, _ = run(capsys, "scan", "weights", "--in", path, "--n", "3", "--grid-values=-2,-1,1,2")
        assert code == 0
        payload = json.loads(out)
        assert payload["exceeds_signs"] is False
        assert payload["value"] == payload["sign_value"] == "7/27"


class TestErrorPaths:
    def test_bad_rational_is_usage_error(self, capsys):
        code, _, err = run(capsys, "family", "ualpha", "--alpha", "zero")
        assert code == 1
        assert "not a rational" in err

    def test_domain_error_is_input_error(self, capsys):
        code, _, err = run(capsys, "family", "binom", "--n", "3", "--p", "7/5")
        assert code == 1
        assert "success mass" in err

    def test_missing_file_is_input_error(self, capsys):
        code, _, err = run(capsys, "dist", "q", "--in", "/nonexistent/d.json")
        assert code == 1
        assert "error" in err

    def test_unknown_flag_is_usage_error(self, capsys):
        code, _, err = run(capsys, "family", "ualpha", "--alpha", "1/2", "--bogus")
        assert code == 1

    def test_witness_dump(self, tmp_path):
        args = build_parser().parse_args(
            ["check", "balancing", "--trials", "1", "--witness", str(tmp_path / "w.json")]
        )
        failure = AssertionFailed("synthetic", witness={"lhs": F(2, 3), "x": (0,)})
        path = _dump_witness(args, failure)
        payload = json.loads((tmp_path / "w.json").read_text())
        assert path == str(tmp_path / "w.json")
        assert payload == {"error": "synthetic", "witness": {"lhs": "2/3", "x": [0]}}

    def test_violation_exit_code_and_witness(self, tmp_path, capsys, monkeypatch):
        # force a fake violation to exercise the exit-2 path end to end
        import anticonc.cli as cli

        def broken(dists, x):
            raise AssertionFailed("forced", witness={"x": list(x)})

        monkeypatch.setattr(cli, "balancing_bound", broken)
        b = bernoulli(F(1, 2))
        path = write_dists(tmp_path, "pair.json", b, b)
        witness = tmp_path / "w.json"
        code, _, err = run(
            capsys, "check", "balancing", "--in", path, "--x", "0", "--witness", str(witness)
        )
        assert code == 2
        assert "violated" in err
        assert json.loads(witness.read_text())["error"] == "forced"
