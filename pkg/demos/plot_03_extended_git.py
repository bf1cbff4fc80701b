"""
Extended GIT presentation
=========================

One extra C*-factor per degree-2 twisted class.  The Calabi-Yau condition
reappears as equal column and multi-degree sums in every row.
"""

from orbigw import build_extended_git, enumerate_curve_classes, resolve_extension, validate_target
from orbigw.extended_git import curve_class

target = validate_target((1, 1, 1, 1, 3), (7,))
git = build_extended_git(target, resolve_extension(target, "auto"))
print("weight matrix:", git.A)
print("multi-degrees:", git.xi)

# a lattice point d becomes a curve class e, and -e_0 names the sector it lands on
for d in [(1, 0), (3, 0), (0, 1), (4, 1)]:
    cc = curve_class(git, d)
    print(d, "-> e =", [str(v) for v in cc.e], "sector", cc.alpha)

print(sum(1 for _ in enumerate_curve_classes(git, 6)), "curve classes up to total degree 6")
