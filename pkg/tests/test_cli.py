import json

import pytest

from crossbound.cli import main

K5 = "".join(f"{u} {v}\n" for u in range(5) for v in range(u + 1, 5))


@pytest.fixture
def k5(tmp_path):
    p = tmp_path / "k5.txt"
    p.write_text(K5)
    return p


def test_every_subcommand_runs(k5, tmp_path, capsys):
    for cmd in ["planar", "skewness", "crossnum", "critical", "rt-cycle", "lemma2", "redraw"]:
        out = tmp_path / f"{cmd}.json"
        assert main([cmd, "--input", str(k5), "--k", "1", "--json", str(out)]) == 0, cmd
        json.loads(out.read_text())
    assert "crossing number 1" in capsys.readouterr().out


def test_render_from_graph_and_drawing(k5, tmp_path):
    assert main(["crossnum", "--input", str(k5), "--json", str(tmp_path / "d.json")]) == 0
    assert main(["render", "--drawing", str(tmp_path / "d.json"), "--svg", str(tmp_path / "a.svg")]) == 0
    assert main(["render", "--input", str(k5), "--svg", str(tmp_path / "b.svg")]) == 0
    assert (tmp_path / "a.svg").read_text() == (tmp_path / "b.svg").read_text()


def test_graph6_input(tmp_path, capsys):
    p = tmp_path / "k5.g6"
    p.write_text("D~{\n")
    assert main(["crossnum", "--input", str(p), "--format", "graph6"]) == 0
    assert "crossing number 1" in capsys.readouterr().out


def test_budget_and_usage_errors(k5, tmp_path):
    assert main(["crossnum", "--input", str(k5), "--budget", "0"]) == 2
    assert main(["planar", "--input", str(tmp_path / "missing.txt")]) == 2
    assert main(["planar"]) == 2
    assert main(["redraw", "--input", str(k5), "--k", "2"]) == 2  # not 2-critical
    with pytest.raises(SystemExit) as exc:
        main(["crossnum", "--format", "dot"])
    assert exc.value.code == 2


def test_non_planarizing_edges_rejected(tmp_path):
    p = tmp_path / "k6.txt"
    p.write_text("".join(f"{u} {v}\n" for u in range(6) for v in range(u + 1, 6)))
    assert main(["rt-cycle", "--input", str(p), "--edges", "0,1"]) == 2


def test_failed_check_exits_one(k5, monkeypatch):
    from crossbound import cli
    from crossbound.errors import TheoremViolation

    def broken(*args, **kwargs):
        raise TheoremViolation("forced")

    monkeypatch.setattr(cli, "build_lemma2", broken)
    assert main(["lemma2", "--input", str(k5)]) == 1


def test_campaign_command(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"instances": [{"name": "K5", "family": "complete", "params": {"n": 5}, "k": 1}]}))
    out = tmp_path / "r.json"
    assert main(["campaign", "--config", str(cfg), "--json", str(out), "--seed", "3"]) == 0
    data = json.loads(out.read_text())
    assert data["config"]["seed"] == 3 and data["rows"][0]["pass"] is True
    assert "K5" in capsys.readouterr().out
