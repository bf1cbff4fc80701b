"""
An extension that is too small
==============================

With only the ambient twisted classes, the I-function of X_24 has a z^-1
term on the class of the second point of the 1/3 sector.  The mirror map
cannot absorb it and the run stops, naming the class and the lattice
points where it shows up.
"""

from orbigw import NonInvertibleExtension, compute_F

ambient = [{"alpha": a} for a in ["1/4", "1/2", "1/9", "1/3", "5/9", "7/9"]]
try:
    compute_F((1, 4, 4, 6, 9), (24,), 3, ambient)
except NonInvertibleExtension as exc:
    print(exc)

F = compute_F((1, 4, 4, 6, 9), (24,), 4, ambient + [{"alpha": "1/3", "cycle": [3]}])
print(F)
