import json

import pytest

from corrkit.cli import main, parse_sweep_stat, rows_to_csv, sweep_rows
from corrkit.io import read_integers, read_points, write_points
from corrkit import FormatError, PointSequence


@pytest.fixture()
def points_file(tmp_path):
    path = tmp_path / "pts.txt"
    main(["gen", "--kind", "uniform_random", "--n", "5000", "--seed", "1729",
          "--out", str(path)])
    return path


@pytest.fixture()
def integers_file(tmp_path):
    path = tmp_path / "ints.txt"
    path.write_text("# integers\n" + "\n".join(str(i) for i in range(1, 129)) + "\n")
    return path


def test_gen_roundtrip(tmp_path):
    path = tmp_path / "p.txt"
    assert main(["gen", "--kind", "dyadic_counterexample", "--n", "8", "--out", str(path)]) == 0
    seq = read_points(path)
    assert seq.points.tolist() == [0.0, 0.0, 0.5, 0.5, 0.25, 0.25, 0.75, 0.75]


def test_point_file_rejects_out_of_range(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0.5\n1.0\n")
    with pytest.raises(FormatError):
        read_points(path)


def test_point_file_comments_and_roundtrip(tmp_path):
    path = tmp_path / "c.txt"
    seq = PointSequence([0.125, 0.625, 0.0009765625])
    write_points(path, seq)
    again = read_points(path)
    assert again.points.tolist() == seq.points.tolist()  # repr round-trips floats


def test_integer_file_validation(tmp_path):
    good = tmp_path / "g.txt"
    good.write_text("1\n2\n5\n")
    assert read_integers(good) == [1, 2, 5]
    for text in ("2\n1\n", "0\n1\n", "x\n"):
        bad = tmp_path / "b.txt"
        bad.write_text(text)
        with pytest.raises(FormatError):
            read_integers(bad)


def test_corr_json_output(points_file, capsys):
    assert main(["corr", "--input", str(points_file), "--k", "2", "--s", "1.0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == "corrkit/1"
    assert payload["k"] == 2
    assert payload["value"] == payload["raw_count"] / payload["n"]
    assert abs(payload["value"] - 2.0) < 0.3
    assert json.loads(json.dumps(payload)) == payload


def test_corr_star_and_box(points_file, capsys):
    assert main(["corr", "--input", str(points_file), "--k", "2", "--s", "1.0", "--star"]) == 0
    star = json.loads(capsys.readouterr().out)
    assert star["statistic"] == "r_k_star"
    assert main(["corr", "--input", str(points_file), "--k", "2", "--box", "0:1"]) == 0
    box = json.loads(capsys.readouterr().out)
    assert box["statistic"] == "r_k_box"
    assert abs(box["value"] - 1.0) < 0.3


def test_corr_csv_format(points_file, capsys):
    assert main(["corr", "--input", str(points_file), "--k", "3", "--s", "1.0",
                 "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "statistic,k,N,raw_count,value"
    assert len(lines) == 2


def test_corr_parameter_exit_codes(points_file, capsys):
    assert main(["corr", "--input", str(points_file), "--k", "2", "--s", "99999"]) == 2
    capsys.readouterr()
    assert main(["corr", "--input", "missing.txt", "--k", "2", "--s", "1.0"]) == 3
    capsys.readouterr()
    assert main(["corr", "--input", str(points_file), "--k", "2"]) == 2
    capsys.readouterr()
    assert main(["corr", "--input", str(points_file), "--k", "2", "--box", "0:1",
                 "--star"]) == 2
    capsys.readouterr()


def test_cstar_and_moments(points_file, capsys):
    assert main(["cstar", "--input", str(points_file), "--k", "2", "--s", "2.0"]) == 0
    cstar = json.loads(capsys.readouterr().out)
    assert main(["moments", "--input", str(points_file), "--s", "2.0", "--k", "2"]) == 0
    mom = json.loads(capsys.readouterr().out)
    # the pair average equals the second power moment of the window count
    assert cstar["value"] == pytest.approx(mom["i_k_star"], rel=1e-9)
    assert mom["bell_prediction"] == 6.0
    assert mom["factorial_target"] == 4.0


def test_cstar_local(points_file, capsys):
    assert main(["cstar", "--input", str(points_file), "--k", "3", "--s", "1.0",
                 "--interval", "0:0.5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["interval"] == [0.0, 0.5]
    assert payload["value"] >= 0.0


def test_energy_and_metric(integers_file, capsys):
    assert main(["energy", "--input", str(integers_file)]) == 0
    e = json.loads(capsys.readouterr().out)
    assert e["additive_energy"] == 128 * 129 * 257 // 3 - 128**2
    assert e["three_ap_count"] == 2 * 64 * 63  # two orderings per progression in 1..128
    assert main(["metric", "--input", str(integers_file), "--s", "0.2", "--n", "128",
                 "--trials", "10", "--seed", "3"]) == 0
    m = json.loads(capsys.readouterr().out)
    assert m["trials"] == 10 and m["lower_bound"] > 0


def test_dist_reports_masses(points_file, capsys):
    assert main(["dist", "--input", str(points_file), "--r", "2", "--k", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["masses"]) == 4
    assert sum(payload["masses"]) == pytest.approx(1.0)
    assert 0 < payload["star_discrepancy"] < 0.1


def test_sweep_stat_parsing():
    assert parse_sweep_stat("r2") == ("r", 2, False)
    assert parse_sweep_stat("r3star") == ("r", 3, True)
    assert parse_sweep_stat("i4") == ("i", 4, False)
    assert parse_sweep_stat("bell2") == ("bell", 2, False)
    assert parse_sweep_stat("c2star") == ("c", 2, True)
    for bad in ("r1", "c3star", "c2", "x2", "r2 star"):
        with pytest.raises(Exception):
            parse_sweep_stat(bad)


def test_sweep_csv_shape_and_final_deviation(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--stat", "r2", "--s", "1.0", "--N", "1000,10000,60000",
                 "--seed", "1729", "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "N,statistic,target,deviation"
    assert len(lines) == 4
    final_dev = float(lines[-1].split(",")[-1])
    assert final_dev < 0.1


def test_sweep_bell_constant_deviation_zero(capsys):
    assert main(["sweep", "--stat", "bell2", "--s", "2.0", "--N", "10,100"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    for line in lines[1:]:
        assert line.split(",")[-1] == "0.0"


def test_sweep_dyadic_triple_identically_zero(capsys):
    assert main(["sweep", "--stat", "r3", "--s", "1.5", "--N", "4,8,16,32",
                 "--kind", "dyadic_counterexample"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    for line in lines[1:]:
        assert line.split(",")[1] == "0.0"


def test_sweep_rows_deterministic():
    a = rows_to_csv(sweep_rows("r2star", 1.0, [500, 2000], "uniform_random", 5))
    b = rows_to_csv(sweep_rows("r2star", 1.0, [500, 2000], "uniform_random", 5))
    assert a == b


def test_verify_quick_passes(capsys):
    assert main(["verify", "--seed", "1729"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out
    assert "FAIL" not in out


def test_verify_json_report(tmp_path, capsys):
    out = tmp_path / "verify.json"
    assert main(["verify", "--seed", "1729", "--json", str(out)]) == 0
    capsys.readouterr()
    payload = json.loads(out.read_text())
    assert payload["schema"] == "corrkit/1"
    assert payload["ok"] is True
    names = [c["name"] for c in payload["checks"]]
    assert len(names) == len(set(names))  # each check appears exactly once


def test_verify_catalog_complete():
    from corrkit.verify import CHECK_CATALOG

    # 4 core + 3 seqgen + 8 correlations + 3 averaged + 5 intervalstats
    # + 4 arithmetic + 2 distribution + 3 cli-level invariants
    assert len(CHECK_CATALOG) == 32
    tiers = {t for t, _ in CHECK_CATALOG}
    assert tiers == {"quick", "full"}


def test_cli_threads_flag_invariant(points_file, capsys):
    assert main(["--threads", "1", "corr", "--input", str(points_file),
                 "--k", "2", "--box", "0:1"]) == 0
    one = capsys.readouterr().out
    assert main(["--threads", "4", "corr", "--input", str(points_file),
                 "--k", "2", "--box", "0:1"]) == 0
    four = capsys.readouterr().out
    assert one == four
