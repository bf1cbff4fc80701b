"""
Exact truncated power series
============================

Multivariate series over exact rationals, cut off at a total degree.
"""

from orbigw import TruncatedSeries, invert_triangular_map
from orbigw.series import Substitution, series_exp, series_log, series_reciprocal

# two variables, everything above total degree 6 is dropped
x = TruncatedSeries.variable("x", ("x", "y"), 6)
y = TruncatedSeries.variable("y", ("x", "y"), 6)
f = 1 - x - y
print("1/(1-x-y) =", series_reciprocal(f).to_string())

# exp and log undo each other on series without constant term
g = x + x * y.scale(3)
assert series_log(series_exp(g)) == g
print("exp(x + 3xy) =", series_exp(g).to_string())

# reversion of y -> y + y^2 gives the Catalan numbers with alternating signs
s = TruncatedSeries.variable("s", ("s",), 8)
inv = invert_triangular_map({"s": s + s * s})
print("inverse of s + s^2:", inv["s"].to_string())
back = Substitution(("s",), inv).apply(s + s * s)
print("round trip:", back.to_string())
