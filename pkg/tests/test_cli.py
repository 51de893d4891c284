import json

import pytest

from krcrystal.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate", "--n", "2", "--i", "1", "--m", "1", "--model", "polytope")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert all(json.loads(ln)["model"] == "polytope" for ln in lines)


def test_enumerate_tableaux(capsys):
    code, out, _ = call(capsys, "enumerate", "--n", "3", "--i", "2", "--m", "1", "--model", "tableau")
    assert code == 0 and len(out.splitlines()) == 6


def test_iso(capsys):
    code, out, _ = call(capsys, "iso", "--n", "2", "--i", "1", "--m", "1", "--element", "(0,1)")
    assert code == 0
    assert out.strip() == '{"model":"tableau","rows":[[3]]}'


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "--n-max", "3", "--m-max", "2")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")
    assert "FAIL" not in out


def test_apply(capsys):
    code, out, _ = call(capsys, "apply", "--n", "5", "--i", "3", "--m", "9", "--element", "[[0,0,0],[0,0,0],[0,0,0]]", "--word", "f1 f2^9 f3^9")
    assert code == 0
    assert json.loads(out)["rows"][0] == [1, 8, 0]


def test_path_and_apply_agree(capsys, tmp_path):
    elem = '{"model":"polytope","rows":[[0,1,1],[1,3,4],[1,3,1]]}'
    src = tmp_path / "a.json"
    src.write_text(elem)
    code, word, _ = call(capsys, "path", "--n", "5", "--i", "3", "--m", "9", "--element", str(src))
    assert code == 0
    code, out, _ = call(capsys, "apply", "--n", "5", "--i", "3", "--m", "9", "--element", "(0,0,0,0,0,0,0,0,0)", "--word", word.strip())
    assert out.strip() == elem


def test_stats(capsys):
    code, out, _ = call(capsys, "stats", "--n", "6", "--i", "3", "--m", "12", "--column", "1", "--element", "[[2,0,2],[0,1,2],[1,2,1],[1,0,5]]")
    doc = json.loads(out)
    assert code == 0
    assert doc["R"] == [2, 5, 6] and doc["x"]["5"] == 1


def test_graph_dot(capsys, tmp_path):
    target = tmp_path / "g.dot"
    code, out, _ = call(capsys, "graph", "--n", "2", "--i", "1", "--m", "1", "--affine", "--format", "dot", "--out", str(target))
    assert code == 0 and out == ""
    assert "style=dashed" in target.read_text()


def test_graph_json(capsys):
    code, out, _ = call(capsys, "graph", "--n", "3", "--i", "2", "--m", "1", "--model", "tableau")
    assert code == 0 and len(json.loads(out)["vertices"]) == 6


def test_output_is_deterministic(capsys):
    argv = ("graph", "--n", "3", "--i", "2", "--m", "2", "--affine", "--format", "dot")
    assert call(capsys, *argv)[1] == call(capsys, *argv)[1]


@pytest.mark.parametrize(
    "argv, needle",
    [
        (("iso", "--n", "2", "--i", "1", "--m", "1", "--element", "(1,1)"), "Dyck path bound"),
        (("apply", "--n", "2", "--i", "1", "--m", "1", "--element", "(0,0)", "--word", "e1"), "annihilated"),
        (("apply", "--n", "2", "--i", "1", "--m", "1", "--element", "(0,0)", "--word", "f1^{phi1-3}"), "undefined"),
        (("path", "--n", "5", "--i", "3", "--m", "2", "--element", "(0,0,0,0,0,0,0,0,0)", "--method", "P"), "i <= 2"),
        (("enumerate", "--n", "2", "--i", "3", "--m", "1"), "i out of range"),
        (("enumerate", "--n", "2"), "missing"),
        (("stats", "--n", "3", "--i", "2", "--m", "1", "--element", "(0,0,0,0)"), "--column"),
    ],
)
def test_domain_errors(capsys, argv, needle):
    code, _, err = call(capsys, *argv)
    assert code == 1
    assert needle in err


def test_usage_errors(capsys):
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "enumerate", "--n", "x")[0] == 2
    assert call(capsys)[0] == 2
