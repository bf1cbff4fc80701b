import json

import pytest

from orbigw import RunConfig, ValidationError, load_config, parse_config, run_pipeline
from orbigw import corpus
from orbigw.cli import main
from orbigw.pipeline import CACHE_ENV, cache_key
from orbigw.render import render

X7 = {"weights": [1, 1, 1, 1, 3], "degrees": [7], "truncationTotalDegree": 4}


def _write(tmp_path, data, name="run.json"):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(p)


@pytest.fixture(autouse=True)
def no_ambient_cache(monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)


def test_defaults():
    c = parse_config(X7)
    assert c.extension == "auto" and c.outputs == ("invariants",) and c.format == "text"
    assert c.normalization == "unit"


def test_truncation_alias():
    assert parse_config({**{k: v for k, v in X7.items() if k != "truncationTotalDegree"},
                         "truncation": 3}).truncationTotalDegree == 3
    with pytest.raises(ValidationError, match="not both"):
        parse_config({**X7, "truncation": 3})


def test_every_field_problem_is_reported_together():
    with pytest.raises(ValidationError) as exc:
        parse_config({"weights": [1, "a"], "degrees": [], "truncationTotalDegree": -1,
                      "format": "xml", "outputs": ["everything"], "colour": 1})
    msg = str(exc.value)
    for field in ("weights", "degrees", "truncationTotalDegree", "format", "outputs",
                  "colour: unknown field"):
        assert field in msg


def test_json_errors_carry_position():
    with pytest.raises(ValidationError, match="line 2 column"):
        load_config('{"weights": [1],\n  "degrees": [7,, }')


def test_outputs_are_put_in_pipeline_order():
    c = parse_config({**X7, "outputs": ["invariants", "sectors"]})
    assert c.outputs == ("sectors", "invariants")


def test_cache_key_ignores_presentation():
    a = parse_config(X7)
    b = parse_config({**X7, "format": "json", "cacheDir": "/tmp/x"})
    assert cache_key(a) == cache_key(b)
    assert cache_key(a) != cache_key(a.with_overrides(truncationTotalDegree=5))


def test_corpus_configs_parse():
    for name in corpus.NAMES:
        assert isinstance(corpus.load(name), RunConfig)


def test_x7_json_records(capsys, tmp_path):
    path = _write(tmp_path, X7)
    assert main(["compute", "--config", path, "--emit", "json", "--no-cache"]) == 0
    out = capsys.readouterr().out
    assert '{"d":1,"k":[1],"value":"28"}' in out
    data = json.loads(out)
    assert data["invariants"]["variables"] == ["Q", "t1"]


def test_x17_json_record():
    bundle = run_pipeline(corpus.load("x17", truncationTotalDegree=4), use_cache=False)
    assert '{"d":2,"k":[0,0,1,0,1,0],"value":"1"}' in render(bundle, "json")


def test_text_grid(capsys, tmp_path):
    assert main(["compute", "--config", _write(tmp_path, X7), "--no-cache"]) == 0
    out = capsys.readouterr().out
    assert "== invariants ==" in out and "28" in out


def test_csv_header_only_when_F_is_empty(capsys, tmp_path):
    path = _write(tmp_path, X7)
    assert main(["compute", "--config", path, "--emit", "csv", "--truncation", "0"]) == 0
    assert capsys.readouterr().out.strip() == "d,k1,value"


def test_inspection_verbs(capsys, tmp_path):
    path = _write(tmp_path, X7)
    assert main(["sectors", "--config", path, "--emit", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert "sectors" in data and "invariants" not in data
    assert main(["git", "--config", path, "--emit", "json"]) == 0
    git = json.loads(capsys.readouterr().out)["git"]
    assert git["weightMatrix"] == [["1", "1", "1", "1", "3", "0"], ["0", "0", "0", "0", "1", "1"]]
    assert git["multidegrees"] == [["7", "2"]]
    assert main(["basis", "--config", path, "--emit", "csv"]) == 0
    assert "1_{1/3}" in capsys.readouterr().out


def test_validation_exit_code(capsys, tmp_path):
    path = _write(tmp_path, {**X7, "degrees": [6]})
    assert main(["compute", "--config", path]) == 2
    assert "ValidationError in stage" in capsys.readouterr().err


def test_bad_json_and_missing_file_exit_code(capsys, tmp_path):
    assert main(["compute", "--config", _write(tmp_path, "{")]) == 2
    assert main(["compute", "--config", str(tmp_path / "missing.json")]) == 2
    assert main(["compute", "--config", _write(tmp_path, X7), "--truncation", "-1"]) == 2


def test_non_invertible_extension_exit_code(capsys, tmp_path):
    path = _write(tmp_path, corpus.config_text("x24-ambient"))
    assert main(["compute", "--config", path, "--no-cache"]) == 3
    err = capsys.readouterr().err
    assert "NonInvertibleExtension" in err and "1_{1/3}[x3]" in err


def test_other_engine_errors_exit_code(capsys, tmp_path):
    raw = json.loads(corpus.config_text("x17"))
    raw.update(truncationTotalDegree=4, normalization="gerbe-order")
    assert main(["compute", "--config", _write(tmp_path, raw), "--no-cache"]) == 4
    assert "ExtractionInconsistency" in capsys.readouterr().err


def test_stdin_config(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(X7)))
    assert main(["compute", "--emit", "csv"]) == 0
    assert "1,1,28" in capsys.readouterr().out


def test_render_is_deterministic_and_cache_is_byte_identical(tmp_path):
    config = parse_config({**X7, "cacheDir": str(tmp_path)})
    fresh = run_pipeline(config)
    cached = run_pipeline(config)
    assert not fresh.from_cache and cached.from_cache
    uncached = run_pipeline(config, use_cache=False)
    for fmt in ("text", "json", "csv"):
        assert render(fresh, fmt) == render(cached, fmt) == render(uncached, fmt)


def test_cache_directory_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    run_pipeline(parse_config(X7))
    assert any(tmp_path.iterdir())
    assert run_pipeline(parse_config(X7)).from_cache


def test_all_outputs_render(tmp_path):
    config = parse_config({**X7, "outputs": ["sectors", "basis", "git", "i-function",
                                             "mirror-map", "invariants", "cross-checks"]})
    bundle = run_pipeline(config, use_cache=False)
    text = render(bundle, "text")
    for name in ("sectors", "basis", "git", "i-function", "mirror-map", "invariants",
                 "cross-checks"):
        assert "== %s ==" % name in text
    assert all(r["passed"] for r in bundle.stages["cross-checks"])
    assert render(bundle, "csv").count("# ") == 7


def test_unknown_format_raises():
    bundle = run_pipeline(parse_config(X7), use_cache=False)
    with pytest.raises(ValueError):
        render(bundle, "xml")


def test_module_entry_point(tmp_path):
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "orbigw", "compute", "--config",
                           _write(tmp_path, X7), "--emit", "csv", "--no-cache"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "1,1,28" in proc.stdout
