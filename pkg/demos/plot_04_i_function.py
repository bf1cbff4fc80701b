"""
The extended I-function
=======================

Coefficients of I for X_7, split by class and power of z.
"""

from orbigw import assemble_I, build_extended_git, resolve_extension, validate_target
from orbigw.ifunction import components

target = validate_target((1, 1, 1, 1, 3), (7,))
git = build_extended_git(target, resolve_extension(target, "auto"))
I = assemble_I(git, 5)

for (cls, s), ser in components(I).items():
    print("%-8s z^%-3d %s" % (cls.label, s, ser.to_string()))

# the quintic: I_0 = sum (5d)!/(d!)^5 q^d
quintic = validate_target((1, 1, 1, 1, 1), (5,))
I = assemble_I(build_extended_git(quintic, ()), 4)
print("quintic I_0:", [str(c) for _, c in next(iter(components(I).values())).items()])
