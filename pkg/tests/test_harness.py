import copy
import json

import numpy as np
import pytest

from rmtlab import harness
from rmtlab.harness import (
    DEFAULT_MASTER_SEED,
    ExperimentConfig,
    ResourceLimitError,
    counting_local,
    run_experiment,
    seed_sweep,
)


def _cfg(**overrides):
    base = dict(
        ensemble={"name": "gue"},
        sizes=(60,),
        trials=3,
        statistic="esm_vs_law",
        law={"name": "semicircle"},
        tolerance=0.5,
        master_seed=DEFAULT_MASTER_SEED,
    )
    base.update(overrides)
    return ExperimentConfig(**base)


def _strip_wall_time(d):
    d = copy.deepcopy(d)
    d.pop("wall_time", None)
    return d


def test_report_is_deterministic_modulo_wall_time():
    a = run_experiment(_cfg())
    b = run_experiment(_cfg())
    assert _strip_wall_time(a.to_json_dict()) == _strip_wall_time(b.to_json_dict())


def test_report_independent_of_thread_count():
    a = run_experiment(_cfg(trials=6), threads=1)
    b = run_experiment(_cfg(trials=6), threads=4)
    assert _strip_wall_time(a.to_json_dict()) == _strip_wall_time(b.to_json_dict())


def test_different_master_seed_changes_records():
    a = run_experiment(_cfg())
    b = run_experiment(_cfg(master_seed=1))
    va = [r.values["ks"] for r in a.records]
    vb = [r.values["ks"] for r in b.records]
    assert va != vb


def test_records_sorted_by_stream_and_unique():
    cfg = _cfg(trials=4, sizes=(30, 40))
    rep = run_experiment(cfg)
    ids = [r.stream_id for r in rep.records]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids) == 8


def test_composite_members_get_disjoint_streams():
    cfg = _cfg(
        ensemble={
            "name": "composite",
            "members": [
                {"name": "gue"},
                {"name": "wigner", "offdiag": "rademacher"},
            ],
        },
    )
    rep = run_experiment(cfg)
    ids = [r.stream_id for r in rep.records]
    assert len(set(ids)) == len(ids)
    members = {r.member for r in rep.records}
    assert members == {"gue", "wigner"}


def test_json_schema_and_shape():
    rep = run_experiment(_cfg())
    d = rep.to_json_dict()
    assert d["schema"] == "rmt-report/1"
    for key in ("config", "records", "aggregates", "criteria", "verdict",
                "wall_time", "preamble"):
        assert key in d
    json.dumps(d)  # must be serializable as-is
    assert d["verdict"] == all(c["passed"] for c in d["criteria"])


def test_verdict_recomputable_from_criteria():
    rep = run_experiment(_cfg(tolerance=1e-9))
    assert rep.verdict is False
    assert any(not c["passed"] for c in rep.criteria)


def test_aggregates_contain_summary_stats():
    rep = run_experiment(_cfg(trials=4))
    agg = rep.aggregates["gue"]["60"]["ks"]
    for stat in ("mean", "median", "q25", "q75", "min", "max", "count"):
        assert stat in agg
    assert agg["count"] == 4
    assert agg["min"] <= agg["median"] <= agg["max"]


def test_resource_limits_refused_by_name():
    with pytest.raises(ResourceLimitError, match="n = 2001"):
        run_experiment(_cfg(sizes=(2001,)))
    with pytest.raises(ResourceLimitError, match="trials"):
        run_experiment(_cfg(trials=10_001))
    # wishart sizes hold p; n = p / alpha, so a tiny alpha blows the p*n cap
    with pytest.raises(ResourceLimitError, match="p·n"):
        run_experiment(_cfg(
            ensemble={"name": "wishart", "alpha": 0.001}, sizes=(2000,),
            law={"name": "marchenko_pastur", "alpha": 0.001}))


def test_refusal_happens_before_any_work():
    # an absurd trial count must fail fast, not run
    import time
    t0 = time.perf_counter()
    with pytest.raises(ResourceLimitError):
        run_experiment(_cfg(trials=10_001))
    assert time.perf_counter() - t0 < 0.5


def test_config_validation():
    with pytest.raises(ValueError):
        _cfg(trials=0)
    with pytest.raises(ValueError):
        _cfg(sizes=())
    with pytest.raises(ValueError):
        _cfg(tolerance=0.0)
    with pytest.raises(ValueError):
        _cfg(statistic="not_a_statistic")


def test_trial_errors_carry_stream_context():
    # negative alpha passes the resource gate but breaks in the sampler,
    # so the failure must surface with its trial stream attached
    cfg = _cfg(ensemble={"name": "wishart", "alpha": -1.0},
               law={"name": "semicircle"})
    with pytest.raises(RuntimeError, match="stream"):
        run_experiment(cfg)


def test_counting_local_report_only_when_window_too_small():
    # n^(2 eps) < 5 downgrades the criterion to report-only
    rep = counting_local(n=50, epsilon=0.1, trials=3)
    names = {c["name"]: c for c in rep.criteria}
    assert "count_median" in names
    assert names["count_median"]["comparator"] == "report"
    assert rep.verdict is True


def test_counting_local_window_criterion():
    rep = counting_local(n=200, epsilon=0.45, trials=10)
    names = {c["name"]: c for c in rep.criteria}
    assert "count_window_frac" in names
    assert names["count_window_frac"]["passed"]


def test_counting_local_epsilon_validation():
    with pytest.raises(ValueError):
        counting_local(n=100, epsilon=0.6, trials=2)
    with pytest.raises(ValueError):
        counting_local(n=100, epsilon=0.0, trials=2)


def test_seed_sweep_runs_all_seeds():
    res = seed_sweep(harness.verify_quarter_circle, seeds=[1, 2, 3],
                     n=150, trials=2)
    assert [s for s, _ in res] == [1, 2, 3]
    assert all(isinstance(v, bool) for _, v in res)


def test_preamble_mentions_finite_size_caveat():
    rep = run_experiment(_cfg())
    assert "asymptotic" in rep.preamble


def test_gumbel_standardization_uses_per_size_constants():
    from rmtlab import laws
    recs = [
        harness.TrialRecord(0, "ginibre", 500, {"y": 1.0}),
        harness.TrialRecord(1, "ginibre", 1000, {"y": 1.0}),
    ]
    zs = harness._gumbel_standardized(recs)
    l5, s5 = laws.rider_correction(500)
    l10, s10 = laws.rider_correction(1000)
    assert zs[0] == pytest.approx((1.0 - l5) / s5)
    assert zs[1] == pytest.approx((1.0 - l10) / s10)
