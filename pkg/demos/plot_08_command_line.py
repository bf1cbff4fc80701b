"""
Command line and JSON configs
=============================

The same runs from a JSON config, as ``orbigw compute --config run.json``
would do them.
"""

import json

from orbigw import corpus, load_config, run_pipeline
from orbigw.cli import main
from orbigw.render import render

print(corpus.config_text("x7"))

config = load_config(json.dumps({"weights": [1, 1, 1, 1, 3], "degrees": [7],
                                 "truncationTotalDegree": 6,
                                 "outputs": ["sectors", "invariants"]}))
bundle = run_pipeline(config, use_cache=False)
print(render(bundle, "text"))
print(render(bundle, "csv"))

# exit codes: 0 ok, 2 bad config, 3 extension too small, 4 other engine errors
with open("/tmp/orbigw_demo.json", "w") as fh:
    fh.write(corpus.config_text("x24-ambient"))
print("exit code", main(["compute", "--config", "/tmp/orbigw_demo.json", "--no-cache"]))
