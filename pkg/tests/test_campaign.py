import json

from crossbound.arith import within_main_bound
from crossbound.campaign import (
    NOT_CRITICAL,
    OK,
    UNKNOWN,
    find_critical,
    load_config,
    run_campaign,
)
from crossbound.generators import complete, complete_bipartite, circulant

SMALL = {
    "seed": 1,
    "instances": [
        {"name": "K6", "family": "complete", "params": {"n": 6}, "k": 3},
        {"name": "K5", "family": "complete", "params": {"n": 5}, "k": 1},
        {"name": "K3,3", "family": "complete_bipartite", "params": {"a": 3, "b": 3}, "k": 1},
    ],
}


def test_find_critical():
    got = find_critical([("K4", complete(4)), ("K5", complete(5)), ("K3,3", complete_bipartite(3, 3))], 1)
    assert [c.name for c in got if c.status == OK] == ["K5", "K3,3"]
    assert find_critical([("C6", circulant(6, [1]))], 1)[0].status == NOT_CRITICAL
    assert find_critical([("K6", complete(6))], 3)[0].status == OK
    big = find_critical([("K13", complete(13))], 1)[0]
    assert big.status == UNKNOWN and "vertices" in big.reason


def test_campaign_rows_sorted_and_passing():
    rep = run_campaign(SMALL)
    assert [r.name for r in rep.rows] == ["K3,3", "K5", "K6"]
    assert all(r.status == OK and r.passed for r in rep.rows)
    for row in rep.to_dict()["rows"]:
        assert row["pass"] == within_main_bound(row["final_crossings"], row["k"])
    assert rep.exit_code == 0


def test_empty_and_non_critical():
    assert run_campaign({"instances": []}).rows == ()
    rep = run_campaign({"instances": [{"name": "K4", "family": "complete", "params": {"n": 4}, "k": 1}]})
    assert rep.rows[0].status == NOT_CRITICAL and rep.rows[0].passed is None


def test_row_failure_is_isolated():
    cfg = {"instances": SMALL["instances"][1:2] + [{"name": "bad", "family": "nope", "params": {}, "k": 1}]}
    rep = run_campaign(cfg)
    assert {r.name: r.status for r in rep.rows} == {"K5": OK, "bad": UNKNOWN}
    assert rep.exit_code == 2


def test_parallel_equals_serial():
    assert run_campaign(SMALL, workers=2).to_json() == run_campaign(SMALL).to_json()


def test_report_formats(tmp_path):
    rep = run_campaign(SMALL)
    data = json.loads(rep.to_json())
    assert data["summary"]["passed"] == 3 and "runtime" not in data["rows"][0]
    table = rep.to_table().splitlines()
    assert table[0].split()[:4] == ["name", "n", "m", "k"] and len(table) == 4
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(SMALL))
    assert load_config(p) == SMALL
