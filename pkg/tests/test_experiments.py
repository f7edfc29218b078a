from fractions import Fraction

import pytest

from cliquetop.experiments import (
    COLUMNS, CSV_VERSION_LINE, TOGGLES, ConfigError, ExperimentConfig, TrialRecord, dumps_csv,
    format_rational, loads_csv, p_of, read_csv, render_fraction, run_sweep, summarize, summary_table,
)


def _cfg(**kw):
    base = dict(n=20, alphas=["0.5"], trials=3, seed=1, toggles={"homology"})
    base.update(kw)
    return ExperimentConfig(**base)


def test_three_rows_deterministic():
    a, b = run_sweep(_cfg()), run_sweep(_cfg())
    assert len(a) == 3 and a == b
    assert dumps_csv(a) == dumps_csv(b)


def test_alpha_must_be_positive():
    with pytest.raises(ConfigError):
        _cfg(n=5, alphas=["0"])


@pytest.mark.parametrize("kw", [
    dict(trials=0), dict(alphas=[]), dict(toggles={"bogus"}), dict(model="gnp"),
    dict(ps=[0.5]), dict(alphas=[], ps=[1.5]), dict(n=0),
])
def test_config_validation(kw):
    with pytest.raises(ConfigError):
        _cfg(**kw)


def test_unreachable_output(tmp_path):
    with pytest.raises(ConfigError):
        run_sweep(_cfg(out=str(tmp_path / "nope" / "x.csv")))


def test_row_count_and_order():
    recs = run_sweep(_cfg(alphas=["0.6", "0.4"], trials=4, toggles=set()))
    assert len(recs) == 8
    assert [(r.alpha, r.trial) for r in recs] == [(Fraction(3, 5), j) for j in range(4)] + \
        [(Fraction(2, 5), j) for j in range(4)]


def test_p_rounding():
    assert p_of(20, Fraction(1, 2)) == 0.22360679775
    rec = run_sweep(_cfg(trials=1))[0]
    assert rec.p == float(f"{20 ** -0.5:.12g}")


def test_raw_p_entry():
    recs = run_sweep(_cfg(alphas=[], ps=[1.0], n=5, trials=1))
    assert recs[0].alpha is None and recs[0].f1 == 10


def test_untoggled_fields_blank():
    rec = run_sweep(_cfg(trials=1))[0]
    assert rec.b0 is not None and rec.e01_num is None and rec.min_link_gap is None


def test_all_toggles_and_roundtrip(tmp_path):
    out = tmp_path / "s.csv"
    recs = run_sweep(_cfg(n=14, alphas=["0.3", "0.6"], trials=3, toggles=set(TOGGLES), m=5, out=str(out)))
    text = out.read_text()
    assert text.splitlines()[0] == CSV_VERSION_LINE
    assert text.splitlines()[1].split(",") == COLUMNS
    assert read_csv(out) == recs
    assert dumps_csv(loads_csv(text)) == text


def test_k4_model_runs():
    recs = run_sweep(_cfg(n=10, alphas=["0.3"], trials=2, toggles=set(TOGGLES), model="k4np", m=5))
    assert all(r.b0 is not None and r.certificate_issued is None for r in recs)


def test_trial_errors_are_recorded():
    # sparsity beyond its guard fails inside the trial, not the sweep
    recs = run_sweep(_cfg(trials=2, toggles={"sparsity"}, m=30))
    assert all("guard" in r.error and r.sparse_flag is None for r in recs)


def test_infinite_density_written_as_one_over_zero():
    rec = run_sweep(_cfg(n=4, alphas=[], ps=[0.0], trials=1, toggles={"density"}))[0]
    assert (rec.e01_num, rec.e01_den) == (1, 0)


def _rec(alpha, **kw):
    return TrialRecord(n=10, alpha=Fraction(alpha), p=0.1, seed=0, **kw)


def test_summary_examples():
    rows = summarize([_rec("1/2", b1=0, components=1)] * 3)
    assert rows[0].rendered()["b1_zero"] == "1.000000"
    rows = summarize([_rec("1/2", b1=0), _rec("1/2", b1=2)])
    assert rows[0].rendered()["b1_zero"] == "0.500000"
    rows = summarize([_rec("1/2"), _rec("3/5")])
    assert len(rows) == 2


def test_summary_exact_and_blank():
    rows = summarize([_rec("1/2", sparse_flag=True)] * 2 + [_rec("1/2", sparse_flag=False)])
    assert rows[0].fraction("sparse") == Fraction(2, 3)
    assert rows[0].rendered()["sparse"] == "0.666667"
    assert rows[0].rendered()["connected"] == ""
    assert "garland_pass" in summary_table(rows)


def test_summary_garland_counts_vacuous():
    rows = summarize([_rec("1/2", min_link_gap=float("inf")), _rec("1/2", min_link_gap=0.25)])
    assert rows[0].fraction("garland_pass") == Fraction(1, 2)


def test_summary_empty():
    with pytest.raises(ValueError):
        summarize([])


def test_rendering_helpers():
    assert render_fraction(Fraction(1, 3)) == "0.333333"
    assert render_fraction(Fraction(2, 3)) == "0.666667"
    assert format_rational(Fraction(7, 20)) == "0.35"
    assert format_rational(Fraction(1, 3)) == "1/3"
    assert format_rational(Fraction(2)) == "2"


def test_csv_rejects_bad_header():
    with pytest.raises(ValueError):
        loads_csv("n,alpha\n")


def test_workers_give_same_rows():
    a = run_sweep(_cfg(trials=4))
    b = run_sweep(_cfg(trials=4, workers=2))
    assert dumps_csv(a) == dumps_csv(b)


def test_b1_vanishing_decreases_in_alpha():
    alphas = [Fraction(30 + 5 * i, 100) for i in range(7)]
    rows = summarize(run_sweep(ExperimentConfig(n=40, alphas=alphas, trials=200, seed=3,
                                                toggles={"homology"})))
    frac = {r.alpha: r.fraction("b1_zero") for r in rows}
    assert frac[alphas[0]] > frac[alphas[-1]]
