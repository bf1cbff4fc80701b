"""
Twisted sectors and the admissible basis
========================================

Sectors of X_24 in P(1,4,4,6,9), their ages and dimensions, and the
Chen-Ruan degrees of the basis classes.
"""

from orbigw import (admissible_basis, enumerate_sectors, enumerate_special_cycles,
                    pairing_matrix, sector, validate_target)

target = validate_target((1, 4, 4, 6, 9), (24,))

for sec in enumerate_sectors(target):
    print("alpha=%-4s dim=%d age=%d" % (sec.label, sec.dimension, sec.age))

# the 1/3 sector is two points with different isotropy; the cycle x3 = 0
# picks out the one with the larger group
for cyc in enumerate_special_cycles(target, sector(target, "1/3")):
    print("1/3 sector, vanishing", cyc.vanishing, "mass", cyc.open_mass)

full, degree_two = admissible_basis(target)
print("basis:", ", ".join("%s(%d)" % (c.label, c.cr_degree) for c in full))
print("degree-2 twisted classes:", [c.label for c in degree_two])

# the pairing is symmetric and invertible
pm = pairing_matrix(target)
pm.inverse()
print("pairing matrix is %dx%d and nondegenerate" % (len(pm.basis), len(pm.basis)))
