"""Run configuration: parsing and validation of the JSON input."""

import json
from dataclasses import dataclass, replace

from .cohomology import NORMALIZATIONS
from .errors import ValidationError
from .series import MAX_TRUNCATION

__all__ = ["RunConfig", "OUTPUTS", "FORMATS", "parse_config", "load_config"]

OUTPUTS = ("sectors", "basis", "git", "i-function", "mirror-map", "invariants", "cross-checks")
FORMATS = ("text", "json", "csv")
_KEYS = {"weights", "degrees", "truncationTotalDegree", "truncation", "extension",
         "outputs", "format", "cacheDir", "normalization", "name"}


@dataclass(frozen=True)
class RunConfig:
    weights: tuple
    degrees: tuple
    truncationTotalDegree: int
    extension: object = "auto"          # "auto" or a tuple of {"alpha", "cycle"} dicts
    outputs: tuple = ("invariants",)
    format: str = "text"
    cacheDir: str = None
    normalization: str = "unit"
    name: str = None

    def with_overrides(self, **kw):
        kw = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **kw) if kw else self

    def canonical(self):
        """The fields that determine the computed result, as plain JSON data."""
        ext = self.extension if self.extension == "auto" else [
            {"alpha": e["alpha"], **({"cycle": list(e["cycle"])} if "cycle" in e else {})}
            for e in self.extension]
        return {"weights": list(self.weights), "degrees": list(self.degrees),
                "truncationTotalDegree": self.truncationTotalDegree,
                "extension": ext, "outputs": list(self.outputs),
                "normalization": self.normalization}


def _fail(errors):
    raise ValidationError("invalid configuration:\n" + "\n".join("  " + e for e in errors))


def _int_list(raw, key, errors):
    v = raw.get(key)
    if not isinstance(v, list) or not v or not all(isinstance(x, int) and not isinstance(x, bool)
                                                  for x in v):
        errors.append("%s: expected a non-empty list of integers, got %s" % (key, json.dumps(v)))
        return ()
    return tuple(v)


def _extension(v, errors):
    if v is None or v == "auto":
        return "auto"
    if not isinstance(v, list):
        errors.append('extension: expected "auto" or a list of {"alpha", "cycle"} objects')
        return "auto"
    out = []
    for i, e in enumerate(v):
        if isinstance(e, str):
            e = {"alpha": e}
        if not isinstance(e, dict) or "alpha" not in e or set(e) - {"alpha", "cycle"}:
            errors.append("extension[%d]: expected {\"alpha\": \"p/q\"} with an optional "
                          "\"cycle\" list, got %s" % (i, json.dumps(e)))
            continue
        alpha = str(e["alpha"])
        item = {"alpha": alpha}
        if "cycle" in e:
            cyc = e["cycle"]
            if not isinstance(cyc, list) or not all(isinstance(x, int) for x in cyc):
                errors.append("extension[%d].cycle: expected a list of coordinate indices" % i)
                continue
            item["cycle"] = tuple(cyc)
        out.append(item)
    return tuple(out)


def parse_config(raw):
    """Validate a decoded JSON object and build a RunConfig."""
    if not isinstance(raw, dict):
        _fail(["top level: expected a JSON object"])
    errors = ["%s: unknown field" % k for k in sorted(set(raw) - _KEYS)]
    weights = _int_list(raw, "weights", errors)
    degrees = _int_list(raw, "degrees", errors)
    if "truncationTotalDegree" in raw and "truncation" in raw:
        errors.append("truncation: give either truncationTotalDegree or truncation, not both")
    D = raw.get("truncationTotalDegree", raw.get("truncation"))
    if not isinstance(D, int) or isinstance(D, bool) or not 0 <= D <= MAX_TRUNCATION:
        errors.append("truncationTotalDegree: expected an integer in [0, %d], got %s"
                      % (MAX_TRUNCATION, json.dumps(D)))
    ext = _extension(raw.get("extension", "auto"), errors)
    outputs = raw.get("outputs", ["invariants"])
    if not isinstance(outputs, list) or not outputs or any(o not in OUTPUTS for o in outputs):
        errors.append("outputs: expected a non-empty subset of %s, got %s"
                      % (", ".join(OUTPUTS), json.dumps(outputs)))
        outputs = ["invariants"]
    fmt = raw.get("format", "text")
    if fmt not in FORMATS:
        errors.append("format: expected one of %s, got %s" % (", ".join(FORMATS), json.dumps(fmt)))
    cache = raw.get("cacheDir")
    if cache is not None and not isinstance(cache, str):
        errors.append("cacheDir: expected a path string")
    norm = raw.get("normalization", "unit")
    if norm not in NORMALIZATIONS:
        errors.append("normalization: expected one of %s, got %s"
                      % (", ".join(sorted(NORMALIZATIONS)), json.dumps(norm)))
    name = raw.get("name")
    if name is not None and not isinstance(name, str):
        errors.append("name: expected a string")
    if errors:
        _fail(errors)
    ordered = tuple(o for o in OUTPUTS if o in outputs)
    return RunConfig(weights, degrees, D, ext, ordered, fmt, cache, norm, name)


def load_config(text):
    """Parse JSON text, reporting syntax errors with line and column."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError("configuration is not valid JSON: %s at line %d column %d"
                              % (exc.msg, exc.lineno, exc.colno))
    return parse_config(raw)
