"""Deterministic text, JSON and CSV renderings of a ResultBundle."""

import csv
import io
import json

__all__ = ["render", "render_text", "render_json", "render_csv"]


_INLINE = 96


def _dump(value, indent=0):
    """Indented JSON that keeps short lists and objects on one line."""
    flat = json.dumps(value, separators=(",", ":"))
    if len(flat) + indent <= _INLINE or not isinstance(value, (list, dict)) or not value:
        return flat
    pad = " " * (indent + 2)
    if isinstance(value, list):
        items = [pad + _dump(v, indent + 2) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"
    items = [pad + json.dumps(k) + ": " + _dump(v, indent + 2) for k, v in value.items()]
    return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"


def render_json(bundle):
    return _dump(bundle.as_json_data()) + "\n"


def _grid(table):
    cells = [["d\\k"] + [str(k) for k in range(len(table[0]))]]
    for d, row in enumerate(table):
        cells.append([str(d)] + ["." if v is None else v for v in row])
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells)


def _monomial(variables, d, k):
    parts = [] if d == 0 else [variables[0] if d == 1 else "%s^%d" % (variables[0], d)]
    parts += [v if e == 1 else "%s^%d" % (v, e) for v, e in zip(variables[1:], k) if e]
    return "*".join(parts) or "1"


def _text_sections(stages):
    out = []
    if "sectors" in stages:
        lines = ["%-6s order %-3d dim %d  age %d  fixed coordinates %s"
                 % (s["alpha"], s["order"], s["dimension"], s["age"], s["fixedCoordinates"])
                 for s in stages["sectors"]]
        out.append(("sectors", lines))
    if "basis" in stages:
        b = stages["basis"]
        lines = ["%-16s %-18s deg %d" % (c["label"], c["kind"], c["crDegree"])
                 for c in b["classes"]]
        lines.append("extension: %s" % ", ".join(b["extension"]))
        out.append(("basis", lines))
    if "git" in stages:
        g = stages["git"]
        lines = ["extension: %s" % ", ".join(g["extension"]), "w = %d" % g["w"], "A ="]
        lines += ["  " + " ".join(v.rjust(3) for v in row) for row in g["weightMatrix"]]
        lines += ["xi_%d = (%s)" % (j, ", ".join(x)) for j, x in enumerate(g["multidegrees"])]
        out.append(("git", lines))
    if "i-function" in stages:
        lines = ["%s  %s z^%d  %s" % (t["d"], t["class"], t["z"], t["value"])
                 for t in stages["i-function"]["terms"]]
        out.append(("i-function", lines))
    if "mirror-map" in stages:
        mm = stages["mirror-map"]
        lines = ["%s = %s" % (k, v["display"]) for k, v in mm["map"].items()]
        lines += ["%s = %s" % (k, v["display"]) for k, v in mm["inverse"].items()]
        out.append(("mirror-map", lines))
    if "invariants" in stages:
        inv = stages["invariants"]
        lines = []
        if "table" in inv:
            lines += ["invariants <phi^k>_{0,k,d}:", _grid(inv["table"]), ""]
        expr = ""
        for r in inv["coefficients"]:
            v = r["value"]
            sign, mag = ("-", v[1:]) if v.startswith("-") else ("+", v)
            mono = _monomial(inv["variables"], r["d"], r["k"])
            term = mono if mag == "1" else "%s*%s" % (mag, mono)
            expr = ("-" + term if sign == "-" else term) if not expr else \
                "%s %s %s" % (expr, sign, term)
        lines.append("F = %s + O(%d)" % (expr or "0", inv["truncation"] + 1))
        out.append(("invariants", lines))
    if "cross-checks" in stages:
        lines = ["%s %s: %s" % ("PASS" if c["passed"] else "FAIL", c["check"], c["detail"])
                 for c in stages["cross-checks"]]
        out.append(("cross-checks", lines))
    return out


def render_text(bundle):
    cfg = bundle.config
    head = "target weights %s degrees %s, truncation %d" % (
        cfg["weights"], cfg["degrees"], cfg["truncationTotalDegree"])
    blocks = [head]
    for name, lines in _text_sections(bundle.stages):
        blocks.append("== %s ==\n%s" % (name, "\n".join(lines)))
    return "\n\n".join(blocks) + "\n"


def _csv_rows(name, data):
    if name == "invariants":
        m = len(data["variables"]) - 1
        head = ["d"] + ["k%d" % i for i in range(1, m + 1)] + ["value"]
        return head, [[r["d"]] + r["k"] + [r["value"]] for r in data["coefficients"]]
    if name == "sectors":
        head = ["alpha", "order", "dimension", "age"]
        return head, [[s[h] for h in head] for s in data]
    if name == "basis":
        head = ["label", "kind", "alpha", "power", "crDegree"]
        return head, [[c[h] for h in head] for c in data["classes"]]
    if name == "i-function":
        head = ["d", "class", "z", "value"]
        return head, [[" ".join(map(str, t["d"])), t["class"], t["z"], t["value"]]
                      for t in data["terms"]]
    if name == "cross-checks":
        head = ["check", "passed", "detail"]
        return head, [[c[h] for h in head] for c in data]
    if name == "git":
        return ["row"] + ["c%d" % i for i in range(len(data["weightMatrix"][0]))], \
            [[i] + row for i, row in enumerate(data["weightMatrix"])]
    if name == "mirror-map":
        head = ["series", "exponents", "value"]
        rows = []
        for part in ("map", "inverse"):
            for k, v in data[part].items():
                rows += [[k, " ".join(map(str, t["exponents"])), t["value"]] for t in v["terms"]]
        return head, rows
    raise KeyError(name)


def render_csv(bundle):
    """One table per stage; with several stages each is preceded by '# name'."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    names = [n for n in bundle.stages]
    for name in names:
        if len(names) > 1:
            buf.write("# %s\n" % name)
        head, rows = _csv_rows(name, bundle.stages[name])
        writer.writerow(head)
        writer.writerows(rows)
    return buf.getvalue()


_RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def render(bundle, fmt="text"):
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise ValueError("unsupported format %r (use %s)" % (fmt, ", ".join(_RENDERERS))) from None
    return renderer(bundle)
