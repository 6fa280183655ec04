import json
from fractions import Fraction

import pytest

from brackops.cli import main
from brackops.trees import caterpillar
from brackops.operads import bo_element, bo_to_json
from brackops.cacti import Cactus, cactus_to_json, cactus_to_obj

F = Fraction


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_brackets_enumerate_counts(capsys):
    code, out = run(capsys, "brackets", "enumerate",
                    "--tree", "caterpillar:4", "--max")
    assert code == 0
    assert json.loads(out)["count"] == 5
    code, out = run(capsys, "brackets", "enumerate", "--tree", "corolla:3")
    assert json.loads(out)["count"] == 1


def test_brackets_fvector(capsys):
    code, out = run(capsys, "brackets", "enumerate",
                    "--tree", "caterpillar:3", "--fvector")
    data = json.loads(out)
    assert code == 0 and data["chi"] == 1


def test_bo_compose(tmp_path, capsys):
    e = bo_element(caterpillar(3), (0, 1, 2), (0, 1, 2, 3),
                   {frozenset({1, 2}): F(1, 2)})
    u = bo_element(caterpillar(1), (0,), (0, 1))
    lhs = write(tmp_path, "lhs.json", bo_to_json(e))
    rhs = write(tmp_path, "rhs.json", bo_to_json(u))
    code, out = run(capsys, "bo", "compose", "--lhs", lhs,
                    "--slot", "1", "--rhs", rhs)
    assert code == 0
    assert json.loads(out)["brackets"] == [
        {"vertices": [1, 2], "w": "1/2"}]


def test_cacti_compose_and_metric(tmp_path, capsys):
    x = Cactus(2, [(0, F(1, 2), 1), (F(1, 2), 1, 2)])
    y = Cactus(2, [(0, F(1, 4), 1), (F(1, 4), F(3, 4), 2), (F(3, 4), 1, 1)])
    xp = write(tmp_path, "x.json", cactus_to_json(x))
    yp = write(tmp_path, "y.json", cactus_to_json(y))
    code, out = run(capsys, "cacti", "compose", "--lhs", xp,
                    "--slot", "1", "--rhs", yp)
    assert code == 0 and json.loads(out)["k"] == 3
    code, out = run(capsys, "cacti", "metric", "--lhs", xp, "--rhs", xp)
    assert json.loads(out)["distance"] == "0/1"


def test_cacti_validate_rejects_bad_input(tmp_path, capsys):
    bad = write(tmp_path, "bad.json",
                json.dumps({"k": 2, "arcs": [["0/1", "1/1", 1]]}))
    code, out = run(capsys, "cacti", "validate", "--input", bad)
    assert code == 1 and json.loads(out)["valid"] is False
    good = write(tmp_path, "good.json",
                 cactus_to_json(Cactus(1, [(0, 1, 1)])))
    code, out = run(capsys, "cacti", "validate", "--input", good)
    assert code == 0 and json.loads(out)["valid"] is True


def test_witness_nonassoc(capsys):
    code, out = run(capsys, "witness", "nonassoc")
    assert code == 0
    data = json.loads(out)
    assert data["distance"] == "1/4"
    # the recorded pair of 4-lobe cacti
    assert data["left"]["k"] == 4 and data["right"]["k"] == 4
    assert data["left"] != data["right"]


def test_witness_unknown_name():
    with pytest.raises(SystemExit):
        main(["witness", "pentagon"])


def test_omega_segal_terminal(capsys):
    code, out = run(capsys, "omega", "segal", "--tree", "caterpillar:3")
    assert code == 0 and json.loads(out)["segal"] is True


def test_bo_action_eval_with_trace(tmp_path, capsys):
    e = bo_element(caterpillar(3), (0, 1, 2), (0, 1, 2, 3),
                   {frozenset({1, 2}): F(1, 2)})
    xs = [Cactus(2, [(0, F(1, 2), 1), (F(1, 2), 1, 2)])] * 3
    ep = write(tmp_path, "e.json", bo_to_json(e))
    xp = write(tmp_path, "xs.json",
               json.dumps([cactus_to_obj(x) for x in xs]))
    code, out = run(capsys, "bo-action", "eval",
                    "--element", ep, "--inputs", xp)
    assert code == 0
    assert json.loads(out)["result"]["k"] == 4
    code, out = run(capsys, "bo-action", "eval",
                    "--element", ep, "--inputs", xp, "--trace")
    data = json.loads(out)
    tr = data["trace"]
    assert len(tr["g"]) == 3
    assert len(tr["h"]) == 1
    assert tr["brackets"] == [[1, 2]]
    assert set(tr["ms"]) == {"cactus", "reparam"}


def test_verify_exit_codes_and_determinism(capsys):
    code, out1 = run(capsys, "verify", "nonassoc-witness",
                     "--samples", "10", "--json")
    assert code == 0
    code, out2 = run(capsys, "verify", "nonassoc-witness",
                     "--samples", "10", "--json")
    assert out1 == out2
    report = json.loads(out1)
    assert report["passed"] is True


def test_verify_summary_lines(capsys):
    code, out = run(capsys, "verify", "omega-tilde", "--samples", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "omega-tilde: PASS"
    assert all(": pass (" in ln for ln in lines[:-1])


def test_verify_unknown_suite():
    with pytest.raises(SystemExit):
        main(["verify", "bogus"])


def test_figure_export(tmp_path, capsys):
    code, out = run(capsys, "figure", "pentagon", "--out", str(tmp_path))
    assert code == 0
    data = json.loads((tmp_path / "pentagon.json").read_text())
    assert len(data["vertices"]) == 5 and len(data["edges"]) == 5
    svg = (tmp_path / "pentagon.svg").read_text()
    assert svg.startswith("<svg")
    code, _ = run(capsys, "figure", "hexagon", "--out", str(tmp_path))
    assert len(json.loads((tmp_path / "hexagon.json").read_text())
               ["vertices"]) == 6
    code, _ = run(capsys, "figure", "cact-composition", "--out",
                  str(tmp_path))
    assert (tmp_path / "cact-composition.svg").exists()


def test_figure_unknown_name(tmp_path):
    with pytest.raises(SystemExit):
        main(["figure", "heptagon", "--out", str(tmp_path)])
