"""
Consistency checks
==================

The identities the pipeline checks on every run, and a comparison of two
targets that share the local model C^3/mu_3 at Q = 0.
"""

from orbigw import (F_along_line, assemble_I, build_extended_git, resolve_extension,
                    validate_target)
from orbigw.checks import age_duality, calabi_yau_columns, mass_consistency


def line(weights, degrees, D):
    target = validate_target(weights, degrees)
    git = build_extended_git(target, resolve_extension(target, "auto"))
    for rec in (age_duality(target), mass_consistency(target), calabi_yau_columns(git)):
        print("%-28s %s" % (rec["check"], "ok" if rec["passed"] else "FAILED"))
    return F_along_line(assemble_I(git, D, fixed_zero=[0]), git, [1])


a = line((1, 1, 1, 1, 3), (7,), 12)
b = line((1, 1, 1, 1, 1, 3), (4, 4), 12)
print("X_7   F(0, s) =", a.to_string())
print("X_44  F(0, s) =", b.to_string())
print("equal:", a == b)
