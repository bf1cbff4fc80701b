"""End-to-end runs: config in, a ResultBundle of plain JSON data out.

Every stage result is stored as JSON-ready data (rationals as "p/q"
strings) so that a cached bundle and a fresh one render identically.
"""

import hashlib
import json
import logging
import os
import time
from dataclasses import dataclass, field

from . import checks
from .cohomology import (admissible_basis, enumerate_sectors, pairing_matrix,
                         resolve_extension, validate_target)
from .errors import EngineError
from .extended_git import build_extended_git
from .ifunction import assemble_I, dump_I
from .mirror import (build_mirror_map, check_J_shape, extract_F, extract_mu,
                     invert_mirror_map, j_components, validate_extension)
from .rational import format_rational

__all__ = ["ResultBundle", "run_pipeline", "series_records", "CACHE_ENV", "cache_key"]

log = logging.getLogger(__name__)

CACHE_ENV = "ORBIGW_CACHE_DIR"
_ANALYTIC = {"i-function", "mirror-map", "invariants", "cross-checks"}


@dataclass
class ResultBundle:
    config: dict
    stages: dict
    version: str
    content_hash: str
    timings: dict = field(default_factory=dict)
    from_cache: bool = False

    def as_json_data(self):
        """The rendered payload; timings are left out so output is reproducible."""
        return {"version": self.version, "contentHash": self.content_hash,
                "config": self.config, **self.stages}


def _version():
    from . import __version__
    return __version__


def _hash(config, stages, version):
    blob = json.dumps({"config": config, "stages": stages, "version": version},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_key(config):
    blob = json.dumps({"config": config.canonical(), "version": _version()},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:32]


def series_records(ser):
    return [{"exponents": list(e), "value": format_rational(c)} for e, c in ser.items()]


def _series_data(ser):
    return {"display": ser.to_string(), "terms": series_records(ser)}


def _sectors_data(target):
    return [{"alpha": s.label, "order": s.r, "dimension": s.dimension, "age": s.age,
             "fixedCoordinates": list(s.fixed_coordinates),
             "fixedEquations": list(s.fixed_equations)} for s in enumerate_sectors(target)]


def _class_data(c):
    return {"label": c.label, "kind": c.kind, "alpha": format_rational(c.alpha),
            "power": c.power, "cycle": None if c.cycle is None else list(c.cycle),
            "crDegree": c.cr_degree}


def _basis_data(target, phis, normalization):
    full, _ = admissible_basis(target)
    pm = pairing_matrix(target, full, normalization)
    return {"classes": [_class_data(c) for c in full],
            "extension": [c.label for c in phis],
            "pairing": [[format_rational(v) for v in row] for row in pm.entries]}


def _git_data(git):
    return {"extension": [c.label for c in git.phis], "w": git.w,
            "weightMatrix": [[format_rational(v) for v in row] for row in git.A],
            "multidegrees": [[format_rational(v) for v in x] for x in git.xi],
            "calabiYau": True}


def _invariants_data(F):
    data = {"variables": list(F.variables), "truncation": F.truncation,
            "coefficients": F.records()}
    if F.m == 1:
        # rows d, columns k: the correlators <phi^k>, null where unstable;
        # the square d, k <= D/2 lies entirely inside the truncation
        half = F.truncation // 2
        data["table"] = [[None if v is None else format_rational(v) for v in row]
                         for row in F.table(half, half)]
    return data


class _Timer:
    def __init__(self, timings, name):
        self.timings, self.name = timings, name

    def __enter__(self):
        self.t0 = time.perf_counter()

    def __exit__(self, kind, exc, tb):
        if isinstance(exc, EngineError) and exc.stage is None:
            exc.stage = self.name
        dt = time.perf_counter() - self.t0
        self.timings[self.name] = dt
        log.info("stage %s: %.3f s", self.name, dt)


def _compute(config, timings):
    with _Timer(timings, "config"):
        target = validate_target(config.weights, config.degrees)
    wanted = set(config.outputs)
    stages = {}
    with _Timer(timings, "sectors"):
        sectors = _sectors_data(target)
        phis = resolve_extension(target, config.extension)
    if "sectors" in wanted:
        stages["sectors"] = sectors
    if "basis" in wanted:
        with _Timer(timings, "basis"):
            stages["basis"] = _basis_data(target, phis, config.normalization)
    with _Timer(timings, "git"):
        git = build_extended_git(target, phis)
    if "git" in wanted:
        stages["git"] = _git_data(git)
    if not wanted & _ANALYTIC:
        return stages
    D = config.truncationTotalDegree
    with _Timer(timings, "i-function"):
        I = assemble_I(git, D)
    if "i-function" in wanted:
        stages["i-function"] = {"variables": list(I.variables), "truncation": D,
                                "terms": dump_I(I)}
    with _Timer(timings, "mirror-map"):
        mu = extract_mu(I, git)
        validate_extension(mu)
        mmap = build_mirror_map(mu, git)
        inverse = invert_mirror_map(mmap)
    if "mirror-map" in wanted:
        stages["mirror-map"] = {
            "map": {q: _series_data(s) for q, s in mmap.items()},
            "inverse": {v: _series_data(s) for v, s in zip(mmap, inverse.values())}}
    if not wanted & {"invariants", "cross-checks"}:
        return stages
    with _Timer(timings, "invariants"):
        J = j_components(I, mu, inverse)
        check_J_shape(J, git)
        F = extract_F(J, git, config.normalization)
    if "invariants" in wanted:
        stages["invariants"] = _invariants_data(F)
    if "cross-checks" in wanted:
        with _Timer(timings, "cross-checks"):
            stages["cross-checks"] = [
                checks.calabi_yau_columns(git), checks.age_duality(target),
                checks.mass_consistency(target), checks.derivative_identity(I, git),
                checks.round_trip(mmap, inverse),
                checks.record("J shape", True, "J = 1 + t/z + O(z^-2) in the extension classes"),
                checks.record("extraction consistency", True,
                              "every mixed partial of F agrees across rows")]
    return stages


def _cache_dir(config, use_cache):
    if not use_cache:
        return None
    return config.cacheDir or os.environ.get(CACHE_ENV) or None


def run_pipeline(config, use_cache=True):
    """Run every stage needed for ``config.outputs``.

    Errors propagate as EngineError subclasses carrying their exit codes.
    With a cache directory (``cacheDir`` or $ORBIGW_CACHE_DIR) finished
    bundles are stored under a hash of the computational config.
    """
    version = _version()
    canonical = config.canonical()
    cdir = _cache_dir(config, use_cache)
    path = os.path.join(cdir, cache_key(config) + ".json") if cdir else None
    if path and os.path.exists(path):
        with open(path) as fh:
            stored = json.load(fh)
        if stored.get("config") == canonical and stored.get("version") == version:
            log.info("cache hit %s", path)
            return ResultBundle(canonical, stored["stages"], version,
                                stored["contentHash"], {}, True)
    timings = {}
    t0 = time.perf_counter()
    stages = _compute(config, timings)
    timings["total"] = time.perf_counter() - t0
    bundle = ResultBundle(canonical, stages, version, _hash(canonical, stages, version), timings)
    if path:
        os.makedirs(cdir, exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump({"config": canonical, "version": version, "stages": stages,
                       "contentHash": bundle.content_hash}, fh)
        os.replace(tmp, path)
    return bundle
