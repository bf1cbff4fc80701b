"""
Mirror map and invariants
=========================

From I to the mirror map, its inverse, J, and the generating function F.
"""

from orbigw import (build_extended_git, build_mirror_map, extract_F, extract_mu, assemble_I,
                    invert_mirror_map, j_components, resolve_extension, validate_extension,
                    validate_target)

target = validate_target((1, 1, 1, 1, 3), (7,))
git = build_extended_git(target, resolve_extension(target, "auto"))
I = assemble_I(git, 8)
mu = extract_mu(I, git)
validate_extension(mu)

mirror_map = build_mirror_map(mu, git)
print("Q  =", mirror_map["q0"].truncate(4).to_string())
print("t1 =", mirror_map["q1"].truncate(4).to_string())

inverse = invert_mirror_map(mirror_map)
J = j_components(I, mu, inverse)
F = extract_F(J, git)
print(F)

# the invariants are correlators: coefficients times prod k_i!
for d, row in enumerate(F.table(4, 4)):
    print(d, ["." if v is None else str(v) for v in row])
