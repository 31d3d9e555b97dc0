"""Experiment configuration, data simulation, seeded runs and reports.

A configuration is a JSON document::

    {
      "schema_version": 1,
      "name": "bernoulli-0.4-desk",
      "model": {"name": "bernoulli", "sigma": 0.4, "dt": 0.3, "T": 50},
      "truth": [0.0001],
      "algorithm": {"M": 5000, "algorithm": "enkf_smcs_wr"},
      "seeds": [0, 1, 2],
      "output": "runs/bernoulli-0.4"
    }

For seed ``s`` the data realization is drawn from ``SeedSequence([s, 1])``
and the particle streams from ``SeedSequence(s)``, so every algorithm run
with the same seed sees the same data.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field, fields, replace
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from .exceptions import ConfigError
from .model import (
    BernoulliModel,
    ERKModel,
    ForwardModel,
    LinearGaussianModel,
    Lorenz63Model,
    ObservationRecord,
    PriorSpec,
    observations_array,
    simulate_observations,
    write_observations,
)
from .records import RunResult
from .smcs import ALGORITHMS, SmcsConfig, run

SCHEMA_VERSION = 1
DATA_STREAM = 1
RESULTS_HEADER = ["t", "param_index", "mean", "std", "bias", "ess", "refined", "resampled",
                  "model_evals"]

MODEL_KEYS = {
    "bernoulli": {"sigma", "dt", "T", "prior"},
    "lorenz63": {"observed", "x0", "noise_std", "dt", "T", "substeps", "prior"},
    "erk": {"observed", "x0", "noise_std", "dt", "T", "substeps", "prior"},
    "linear_gaussian": {"n_x", "n_y", "T", "noise_var", "matrix_seed", "prior"},
}


def _prior_from_dict(spec, where="model.prior") -> PriorSpec:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError("expected an object with a 'kind' key", field=where)
    try:
        if spec["kind"] == "uniform":
            return PriorSpec.uniform(spec["lower"], spec["upper"])
        if spec["kind"] == "gaussian":
            if "cov" in spec:
                return PriorSpec.gaussian(spec["mean"], cov=spec["cov"])
            return PriorSpec.gaussian(spec["mean"], std=spec["std"])
    except KeyError as exc:
        raise ConfigError(f"missing key {exc.args[0]!r}", field=where) from None
    except ValueError as exc:
        raise ConfigError(str(exc), field=where) from None
    raise ConfigError(f"unknown prior kind {spec['kind']!r}", field=where + ".kind")


def build_model(spec: dict) -> ForwardModel:
    """Instantiate a forward model from the ``model`` section of a config."""
    if not isinstance(spec, dict):
        raise ConfigError("expected an object", field="model")
    name = spec.get("name")
    if name not in MODEL_KEYS:
        raise ConfigError(f"unknown model {name!r}; known: {sorted(MODEL_KEYS)}", field="model.name")
    kwargs = {k: v for k, v in spec.items() if k != "name"}
    unknown = set(kwargs) - MODEL_KEYS[name]
    if unknown:
        raise ConfigError(f"unknown keys {sorted(unknown)}", field="model")
    if "prior" in kwargs:
        kwargs["prior"] = _prior_from_dict(kwargs["prior"])
    try:
        if name == "bernoulli":
            return BernoulliModel(**kwargs)
        if name == "lorenz63":
            return Lorenz63Model(**kwargs)
        if name == "erk":
            return ERKModel(**kwargs)
        rng = np.random.default_rng(kwargs.pop("matrix_seed", 0))
        prior = kwargs.pop("prior", None)
        model = LinearGaussianModel.random(rng, **kwargs)
        if prior is not None:
            model = LinearGaussianModel(model.A, model.noise_cov(1), prior)
        return model
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc), field="model") from None


@dataclass
class ExperimentConfig:
    """A model, its true parameters, sampler settings and the seed list."""

    name: str
    model: dict
    truth: List[float]
    algorithm: SmcsConfig
    seeds: List[int]
    output: Optional[str] = None
    schema_version: int = SCHEMA_VERSION
    _model: Optional[ForwardModel] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.schema_version != SCHEMA_VERSION:
            raise ConfigError(f"unsupported version {self.schema_version}", field="schema_version")
        if not self.seeds:
            raise ConfigError("at least one seed is required", field="seeds")
        if any(int(s) != s or s < 0 for s in self.seeds):
            raise ConfigError("seeds must be non-negative integers", field="seeds")
        self.seeds = [int(s) for s in self.seeds]
        self.truth = [float(v) for v in np.atleast_1d(self.truth)]
        model = self.build_model()
        if len(self.truth) != model.n_x:
            raise ConfigError(f"has length {len(self.truth)}, model has n_x = {model.n_x}",
                              field="truth")

    @classmethod
    def from_dict(cls, doc: dict) -> "ExperimentConfig":
        if not isinstance(doc, dict):
            raise ConfigError("top level must be an object")
        missing = [k for k in ("name", "model", "truth", "algorithm", "seeds") if k not in doc]
        if missing:
            raise ConfigError(f"missing keys {missing}")
        known = {f.name for f in fields(cls)} - {"_model"}
        unknown = set(doc) - known
        if unknown:
            raise ConfigError(f"unknown keys {sorted(unknown)}")
        algo = doc["algorithm"]
        if not isinstance(algo, dict):
            raise ConfigError("expected an object", field="algorithm")
        try:
            smcs = SmcsConfig(**algo)
        except TypeError as exc:
            raise ConfigError(str(exc), field="algorithm") from None
        except ConfigError as exc:
            raise ConfigError(str(exc), field="algorithm." + (exc.field or "")) from None
        return cls(
            name=str(doc["name"]),
            model=dict(doc["model"]),
            truth=doc["truth"],
            algorithm=smcs,
            seeds=list(doc["seeds"]),
            output=doc.get("output"),
            schema_version=doc.get("schema_version", SCHEMA_VERSION),
        )

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "name": self.name,
            "model": self.model,
            "truth": self.truth,
            "algorithm": asdict(self.algorithm),
            "seeds": self.seeds,
            "output": self.output,
        }

    def build_model(self) -> ForwardModel:
        if self._model is None:
            self._model = build_model(self.model)
        return self._model

    def with_overrides(self, seed=None, algorithm=None, particles=None, output=None):
        """Copy with CLI-style overrides applied."""
        algo = self.algorithm
        if algorithm is not None or particles is not None:
            try:
                algo = replace(
                    algo,
                    algorithm=algorithm if algorithm is not None else algo.algorithm,
                    M=particles if particles is not None else algo.M,
                )
            except ConfigError as exc:
                raise ConfigError(str(exc), field="algorithm." + (exc.field or "")) from None
        return ExperimentConfig(
            name=self.name,
            model=self.model,
            truth=self.truth,
            algorithm=algo,
            seeds=[seed] if seed is not None else self.seeds,
            output=output if output is not None else self.output,
            schema_version=self.schema_version,
            _model=self._model,
        )


def parse_config(text: str, source: str = "<config>") -> ExperimentConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return ExperimentConfig.from_dict(doc)


def preset_names() -> List[str]:
    root = resources.files(__package__) / "presets"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_preset(name: str) -> ExperimentConfig:
    path = resources.files(__package__) / "presets" / f"{name}.json"
    if not path.is_file():
        raise ConfigError(f"unknown preset {name!r}; available: {preset_names()}")
    return parse_config(path.read_text(), source=name)


def load_config(ref) -> ExperimentConfig:
    """Read a config file, or a bundled preset when ``ref`` is a preset name."""
    path = Path(ref)
    if path.is_file():
        return parse_config(path.read_text(), source=str(path))
    if str(ref) in preset_names():
        return load_preset(str(ref))
    raise ConfigError(f"no such config file or preset: {ref}")


def data_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), DATA_STREAM]))


def simulate(config: ExperimentConfig, seed: int) -> List[ObservationRecord]:
    """Data realization for ``seed`` at the configured truth."""
    return simulate_observations(config.build_model(), np.array(config.truth), data_rng(seed))


def data_sidecar(config: ExperimentConfig, seed: int) -> dict:
    model = config.build_model()
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config.name,
        "model": model.describe(),
        "truth": config.truth,
        "seed": int(seed),
        "noise_cov": model.noise_cov(1).tolist(),
    }


def simulate_to_file(config: ExperimentConfig, seed: int, path) -> List[ObservationRecord]:
    records = simulate(config, seed)
    write_observations(path, records, data_sidecar(config, seed))
    return records


def check_data(config: ExperimentConfig, data: Sequence[ObservationRecord]):
    model = config.build_model()
    ys = observations_array(data)
    if ys.shape != (model.T, model.n_y):
        raise ConfigError(
            f"data has shape {ys.shape}, model expects ({model.T}, {model.n_y})", field="data"
        )
    steps = sorted(r.t for r in data)
    if steps != list(range(1, model.T + 1)):
        raise ConfigError("data steps must be exactly 1..T", field="data")


def infer(config: ExperimentConfig, data: Sequence[ObservationRecord], seed: int) -> RunResult:
    """Run the configured algorithm on ``data`` with particle seed ``seed``."""
    check_data(config, data)
    smcs = replace(config.algorithm, seed=int(seed))
    return run(config.build_model(), data, smcs, truth=np.array(config.truth))


def results_rows(result: RunResult) -> List[list]:
    rows = []
    for rec in result.records:
        for i in range(len(rec.mean)):
            bias = "" if rec.bias is None else repr(float(rec.bias[i]))
            rows.append([rec.t, i, repr(float(rec.mean[i])), repr(float(rec.std[i])), bias,
                         repr(float(rec.ess)), int(rec.refined), int(rec.resampled),
                         rec.model_evals])
    return rows


def results_csv(result: RunResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RESULTS_HEADER)
    writer.writerows(results_rows(result))
    return buf.getvalue()


@dataclass
class ResultsTable:
    """A results CSV parsed back into arrays indexed ``[step, parameter]``."""

    t: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    bias: np.ndarray
    ess: np.ndarray
    refined: np.ndarray
    resampled: np.ndarray
    model_evals: np.ndarray

    @classmethod
    def parse(cls, text: str) -> "ResultsTable":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header != RESULTS_HEADER:
            raise ValueError(f"unexpected results header {header}")
        rows = [r for r in reader if r]
        steps = sorted({int(r[0]) for r in rows})
        n_x = max(int(r[1]) for r in rows) + 1
        pos = {t: i for i, t in enumerate(steps)}
        shape = (len(steps), n_x)
        mean, std, bias = np.empty(shape), np.empty(shape), np.full(shape, np.nan)
        ess = np.empty(len(steps))
        refined = np.zeros(len(steps), dtype=bool)
        resampled = np.zeros(len(steps), dtype=bool)
        evals = np.zeros(len(steps), dtype=np.int64)
        for r in rows:
            i, j = pos[int(r[0])], int(r[1])
            mean[i, j], std[i, j] = float(r[2]), float(r[3])
            if r[4] != "":
                bias[i, j] = float(r[4])
            ess[i] = float(r[5])
            refined[i], resampled[i] = r[6] == "1", r[7] == "1"
            evals[i] = int(r[8])
        return cls(np.array(steps), mean, std, bias, ess, refined, resampled, evals)

    @classmethod
    def read(cls, path) -> "ResultsTable":
        return cls.parse(Path(path).read_text())

    def final(self) -> dict:
        return {
            "t": int(self.t[-1]),
            "mean": self.mean[-1].tolist(),
            "std": self.std[-1].tolist(),
            "bias": self.bias[-1].tolist(),
            "ess": float(self.ess[-1]),
        }


def summary_from_table(table: ResultsTable, config: ExperimentConfig, algorithm: str, seed: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "summary",
        "config": config.name,
        "algorithm": algorithm,
        "seed": int(seed),
        "M": config.algorithm.M,
        "truth": config.truth,
        "final": table.final(),
        "model_evals": int(table.model_evals[-1]),
        "refinement_steps": table.t[table.refined].tolist(),
        "resampling_steps": table.t[table.resampled].tolist(),
        "degenerate_steps": table.t[table.refined & (table.ess < 2.0)].tolist(),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def infer_to_dir(config: ExperimentConfig, data, seed: int, out_dir) -> dict:
    """Write ``results.csv`` and ``summary.json`` under ``out_dir``; return the summary."""
    result = infer(config, data, seed)
    text = results_csv(result)
    summary = summary_from_table(ResultsTable.parse(text), config, config.algorithm.algorithm, seed)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "results.csv").write_text(text)
    (out / "summary.json").write_text(dumps(summary))
    return summary


def aggregate_report(
    tables: Dict[str, Dict[int, ResultsTable]], config: ExperimentConfig, baseline="enkf_only"
) -> dict:
    """Seed-averaged ``|bias|`` per step and per-parameter win counts.

    ``tables[algorithm][seed]`` are parsed results.  An algorithm wins a
    parameter when its seed-averaged final ``|bias|`` is at most the
    baseline's.  The report is a pure function of the tables.
    """
    algorithms = [a for a in ALGORITHMS if a in tables] + sorted(set(tables) - set(ALGORITHMS))
    report = {
        "schema_version": SCHEMA_VERSION,
        "kind": "report",
        "config": config.name,
        "truth": config.truth,
        "seeds": sorted({s for per in tables.values() for s in per}),
        "algorithms": {},
    }
    finals = {}
    for algo in algorithms:
        per_seed = tables[algo]
        seeds = sorted(per_seed)
        abs_bias = np.stack([np.abs(per_seed[s].bias) for s in seeds])
        finals[algo] = abs_bias[:, -1].mean(axis=0)
        report["algorithms"][algo] = {
            "steps": per_seed[seeds[0]].t.tolist(),
            "mean_abs_bias": abs_bias.mean(axis=0).tolist(),
            "final": {
                "mean": np.mean([per_seed[s].mean[-1] for s in seeds], axis=0).tolist(),
                "std": np.mean([per_seed[s].std[-1] for s in seeds], axis=0).tolist(),
                "bias": np.mean([per_seed[s].bias[-1] for s in seeds], axis=0).tolist(),
                "mean_abs_bias": finals[algo].tolist(),
            },
            "model_evals": {str(s): int(per_seed[s].model_evals[-1]) for s in seeds},
            "refinement_steps": {str(s): per_seed[s].t[per_seed[s].refined].tolist() for s in seeds},
        }
    if baseline in finals:
        wins = {}
        for algo in algorithms:
            if algo == baseline:
                continue
            better = finals[algo] <= finals[baseline]
            wins[algo] = {"wins": int(better.sum()), "losses": int((~better).sum()),
                          "per_parameter": better.tolist()}
        report["wins_vs_" + baseline] = wins
    return report


def compare(
    config: ExperimentConfig,
    algorithms: Iterable[str] = ALGORITHMS,
    seeds: Optional[Sequence[int]] = None,
    out_dir=None,
) -> dict:
    """Run each algorithm on each seed's data realization and aggregate.

    With ``out_dir`` every run's results CSV is written to
    ``out_dir/<algorithm>/seed_<s>.csv`` and the report to ``report.json``.
    """
    seeds = list(config.seeds if seeds is None else seeds)
    algorithms = list(algorithms)
    tables: Dict[str, Dict[int, ResultsTable]] = {a: {} for a in algorithms}
    for seed in seeds:
        data = simulate(config, seed)
        for algo in algorithms:
            cfg = config.with_overrides(algorithm=algo)
            text = results_csv(infer(cfg, data, seed))
            tables[algo][seed] = ResultsTable.parse(text)
            if out_dir is not None:
                path = Path(out_dir) / algo
                path.mkdir(parents=True, exist_ok=True)
                (path / f"seed_{seed}.csv").write_text(text)
    report = aggregate_report(tables, config)
    if out_dir is not None:
        (Path(out_dir) / "report.json").write_text(dumps(report))
    return report


def report_from_dir(config: ExperimentConfig, out_dir) -> dict:
    """Rebuild the aggregate report from the results CSVs written by :func:`compare`."""
    tables: Dict[str, Dict[int, ResultsTable]] = {}
    for algo_dir in sorted(p for p in Path(out_dir).iterdir() if p.is_dir()):
        for path in sorted(algo_dir.glob("seed_*.csv")):
            seed = int(path.stem.split("_", 1)[1])
            tables.setdefault(algo_dir.name, {})[seed] = ResultsTable.read(path)
    if not tables:
        raise ConfigError(f"no results found under {out_dir}")
    return aggregate_report(tables, config)
