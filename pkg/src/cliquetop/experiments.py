"""Monte Carlo sweeps over p = n^(-alpha) and CSV output for threshold plots."""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .certificates import CertificateRefused, certify_pi1_nontrivial, find_rooted_six_cycle, is_sparse
from .complex import CellComplex2, Complex2, component_vertex_sets, connected_components, euler_characteristic
from .density import THIRD, density_flow
from .homology import betti_f2
from .random_models import sample_k4np, sample_knp, trial_seed
from .spectral import garland_scan
from .wedge import Inconsistency, wedge_signature

log = logging.getLogger(__name__)

CSV_VERSION_LINE = "# cliquetop-csv v1"
TOGGLES = ("homology", "density", "certificate", "sparsity", "spectral", "wedge")
MODELS = ("knp", "k4np")


class ConfigError(ValueError):
    pass


def parse_rational(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x).strip())


def format_rational(q: Fraction) -> str:
    """Finite decimal when exact (up to 12 places), else num/den."""
    for places in range(13):
        scaled = q * 10**places
        if scaled.denominator == 1:
            s = f"{scaled.numerator * (1 if q >= 0 else -1):0{places + 1}d}"
            if places:
                s = s[:-places] + "." + s[-places:]
            return ("-" if q < 0 else "") + s
    return f"{q.numerator}/{q.denominator}"


def p_of(n: int, alpha: Fraction) -> float:
    """n^(-alpha) rounded to 12 significant digits."""
    return float(f"{n ** -float(alpha):.12g}")


@dataclass
class ExperimentConfig:
    n: int
    alphas: list[Fraction] = field(default_factory=list)
    trials: int = 1
    seed: int = 0
    toggles: set[str] = field(default_factory=set)
    model: str = "knp"
    ps: list[float] = field(default_factory=list)   # raw p values, used instead of alphas
    eps: Fraction = Fraction(7, 20)
    m: int = 8
    r: int = 0
    out: str | None = None
    workers: int = 1

    def __post_init__(self):
        self.alphas = [parse_rational(a) for a in self.alphas]
        self.eps = parse_rational(self.eps)
        self.toggles = set(self.toggles)
        self.validate()

    def validate(self) -> None:
        if self.n < 1:
            raise ConfigError("n must be positive")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if not self.alphas and not self.ps:
            raise ConfigError("give alphas or raw p values")
        if self.alphas and self.ps:
            raise ConfigError("give alphas or raw p values, not both")
        if any(a <= 0 for a in self.alphas):
            raise ConfigError("alphas must be > 0")
        if any(not 0 <= p <= 1 for p in self.ps):
            raise ConfigError("p values must lie in [0, 1]")
        bad = self.toggles - set(TOGGLES)
        if bad:
            raise ConfigError(f"unknown toggles {sorted(bad)}")
        if self.model not in MODELS:
            raise ConfigError(f"model must be one of {MODELS}")

    def grid(self) -> list[tuple[Fraction | None, float]]:
        if self.alphas:
            return [(a, p_of(self.n, a)) for a in self.alphas]
        return [(None, float(p)) for p in self.ps]

    @classmethod
    def from_json(cls, path) -> "ExperimentConfig":
        data = json.loads(Path(path).read_text())
        return cls(**data)


@dataclass
class TrialRecord:
    n: int
    alpha: Fraction | None
    p: float
    seed: int
    trial: int = 0
    f0: int | None = None
    f1: int | None = None
    f2: int | None = None
    components: int | None = None
    chi: int | None = None
    b0: int | None = None
    b1: int | None = None
    b2: int | None = None
    e01_num: int | None = None
    e01_den: int | None = None
    e01r3_num: int | None = None
    e01r3_den: int | None = None
    has_rooted_6cycle: bool | None = None
    certificate_issued: bool | None = None
    sparse_flag: bool | None = None
    min_link_gap: float | None = None
    wedge_consistent: bool | None = None
    error: str = ""


COLUMNS = [f.name for f in fields(TrialRecord)]
_INT_COLS = {"n", "seed", "trial", "f0", "f1", "f2", "components", "chi", "b0", "b1", "b2",
             "e01_num", "e01_den", "e01r3_num", "e01r3_den"}
_BOOL_COLS = {"has_rooted_6cycle", "certificate_issued", "sparse_flag", "wedge_consistent"}


def _graph_part(X: Complex2 | CellComplex2) -> Complex2:
    return X if isinstance(X, Complex2) else Complex2(X.n, X.edges, ())


def run_trial(cfg: ExperimentConfig, i: int, j: int) -> TrialRecord:
    alpha, p = cfg.grid()[i]
    seed = trial_seed(cfg.seed, i, j)
    rec = TrialRecord(cfg.n, alpha, p, seed, j)
    errors = []
    X = sample_knp(cfg.n, p, seed) if cfg.model == "knp" else sample_k4np(cfg.n, p, seed)
    rec.f0, rec.f1, rec.f2 = X.f_vector()
    rec.chi = euler_characteristic(X)
    rec.components = len(component_vertex_sets(X))
    simplicial = isinstance(X, Complex2)
    G = _graph_part(X)

    def attempt(name, fn):
        try:
            fn()
        except Exception as exc:  # per-trial failures are data
            log.debug("trial %s/%s %s failed: %s", i, j, name, exc)
            errors.append(f"{name}: {exc}")

    if "homology" in cfg.toggles:
        def _h():
            rec.b0, rec.b1, rec.b2 = betti_f2(X)
        attempt("homology", _h)

    if "density" in cfg.toggles:
        def _d():
            d = density_flow(G)
            rec.e01_num, rec.e01_den = d.value_num, d.value_den
            if G.n >= 3:
                d3 = density_flow(G, 3)
                rec.e01r3_num, rec.e01r3_den = d3.value_num, d3.value_den
        attempt("density", _d)

    if "certificate" in cfg.toggles and simplicial:
        def _c():
            rec.has_rooted_6cycle = find_rooted_six_cycle(X) is not None
            try:
                certify_pi1_nontrivial(X)
                rec.certificate_issued = True
            except CertificateRefused:
                rec.certificate_issued = False
        attempt("certificate", _c)

    if "sparsity" in cfg.toggles:
        def _s():
            rec.sparse_flag = is_sparse(G, cfg.eps, cfg.m, cfg.r, exact_worst=False).sparse
        attempt("sparsity", _s)

    if "spectral" in cfg.toggles and simplicial:
        def _g():
            rep = garland_scan(X)
            rec.min_link_gap = float("inf") if rep.min_gap is None else rep.min_gap
        attempt("spectral", _g)

    if "wedge" in cfg.toggles and simplicial:
        def _w():
            ok = True
            for comp in connected_components(X):
                d = density_flow(comp)
                if d.exceeds(THIRD) and isinstance(wedge_signature(comp, d), Inconsistency):
                    ok = False
            rec.wedge_consistent = ok
        attempt("wedge", _w)

    rec.error = "; ".join(errors)
    return rec


def _run_point(args):
    cfg, i, j = args
    return run_trial(cfg, i, j)


def run_sweep(cfg: ExperimentConfig) -> list[TrialRecord]:
    """All trials of the grid, sorted by (grid index, trial index)."""
    cfg.validate()
    if cfg.out is not None:
        parent = Path(cfg.out).resolve().parent
        if not parent.is_dir():
            raise ConfigError(f"output directory {parent} does not exist")
    jobs = [(cfg, i, j) for i in range(len(cfg.grid())) for j in range(cfg.trials)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as ex:
            records = list(ex.map(_run_point, jobs, chunksize=8))
    else:
        records = [_run_point(job) for job in jobs]
    order = {id(r): (i, j) for (_, i, j), r in zip(jobs, records)}
    records.sort(key=lambda r: order[id(r)])
    if cfg.out is not None:
        write_csv(records, cfg.out)
    return records


# -- CSV ---------------------------------------------------------------------

def _fmt(name, v) -> str:
    if v is None:
        return ""
    if name == "alpha":
        return format_rational(v)
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _parse(name, s: str):
    if s == "":
        return "" if name == "error" else None
    if name == "alpha":
        return Fraction(s)
    if name in _INT_COLS:
        return int(s)
    if name in _BOOL_COLS:
        return s == "1"
    if name in ("p", "min_link_gap"):
        return float(s)
    return s


def dumps_csv(records: Iterable[TrialRecord]) -> str:
    buf = io.StringIO()
    buf.write(CSV_VERSION_LINE + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in records:
        w.writerow([_fmt(c, getattr(r, c)) for c in COLUMNS])
    return buf.getvalue()


def loads_csv(text: str) -> list[TrialRecord]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != CSV_VERSION_LINE:
        raise ValueError("missing '# cliquetop-csv v1' header")
    rows = list(csv.reader(lines[1:]))
    header, body = rows[0], rows[1:]
    if header != COLUMNS:
        raise ValueError("unexpected column layout")
    return [TrialRecord(**{c: _parse(c, s) for c, s in zip(header, row)}) for row in body]


def write_csv(records, path) -> None:
    Path(path).write_text(dumps_csv(records))


def read_csv(path) -> list[TrialRecord]:
    return loads_csv(Path(path).read_text())


# -- summary -----------------------------------------------------------------

def render_fraction(q: Fraction | None, places: int = 6) -> str:
    """Decimal rendering of an exact fraction, rounding half up."""
    if q is None:
        return ""
    scaled = q * 10**places
    k = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if k < 0 else ""
    k = abs(k)
    return f"{sign}{k // 10**places}.{k % 10**places:0{places}d}"


SUMMARY_FIELDS = {
    "connected": lambda r: None if r.components is None else r.components == 1,
    "b1_zero": lambda r: None if r.b1 is None else r.b1 == 0,
    "certificate_issued": lambda r: r.certificate_issued,
    "sparse": lambda r: r.sparse_flag,
    "garland_pass": lambda r: None if r.min_link_gap is None else r.min_link_gap > 0.5,
}


@dataclass
class SummaryRow:
    alpha: Fraction | None
    p: float
    rows: int
    counts: dict[str, tuple[int, int]]   # field -> (hits, rows where computed)

    def fraction(self, name: str) -> Fraction | None:
        hits, total = self.counts[name]
        return Fraction(hits, total) if total else None

    def rendered(self) -> dict[str, str]:
        out = {"alpha": "" if self.alpha is None else format_rational(self.alpha),
               "p": repr(self.p), "rows": str(self.rows)}
        for name in SUMMARY_FIELDS:
            out[name] = render_fraction(self.fraction(name))
        return out


def summarize(records: list[TrialRecord]) -> list[SummaryRow]:
    if not records:
        raise ValueError("no records to summarize")
    groups: dict[tuple, list[TrialRecord]] = {}
    for r in records:
        groups.setdefault((r.alpha, r.p), []).append(r)
    out = []
    for (alpha, p), rs in groups.items():
        counts = {}
        for name, get in SUMMARY_FIELDS.items():
            vals = [get(r) for r in rs]
            vals = [v for v in vals if v is not None]
            counts[name] = (sum(vals), len(vals))
        out.append(SummaryRow(alpha, p, len(rs), counts))
    return out


def summary_table(rows: list[SummaryRow]) -> str:
    cols = ["alpha", "p", "rows"] + list(SUMMARY_FIELDS)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for row in rows:
        d = row.rendered()
        w.writerow([d[c] for c in cols])
    return buf.getvalue()
