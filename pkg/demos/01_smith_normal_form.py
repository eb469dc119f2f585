"""Exact integer linear algebra: Smith form, cokernels, presented groups.

Every matrix is a numpy object array of Python ints, so nothing here ever
rounds.  The Smith normal form U @ M @ V = D is the engine behind all the
homology computations in this package.
"""

from derham import intlinalg as la

# A matrix with interesting invariant factors.
m = la.intmat([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
u, d, v = la.smith_normal_form(m)
print("M =")
print(m)
print("diagonal of D:", la.smith_normal_form(m).diagonal)
print("U M V == D:", la.is_zero(la.mat_mul(la.mat_mul(u, m), v) - d))
print("det U, det V:", la.det_exact(u), la.det_exact(v))

# The cokernel Z^3 / im(M) read off the diagonal.
print("\ncoker(M):", la.invariants_of_cokernel(m))

# Divisor chains normalize automatically: Z/2 + Z/3 is cyclic of order 6.
print("coker(diag(2, 3)):", la.invariants_of_cokernel([[2, 0], [0, 3]]))

# Homology of a two-step complex  Z --2--> Z --0--> Z.
h = la.homology_invariants(la.intmat([[2]]), la.intmat([[0]]))
print("\nmiddle homology of (Z -2-> Z -0-> Z):", h)

# The same group, as generators and relations on a kernel basis.
pres, kernel = la.homology_presentation(la.intmat([[2]]), la.intmat([[0]]))
print("presentation: generators =", pres.gens, "invariants =", pres.invariants())
print("kernel basis columns:")
print(kernel.vectors)

# Exact coordinates inside a sublattice.
basis = la.LatticeBasis(2, la.intmat([[2], [4]]))
print("\n(6,12) in the lattice spanned by (2,4):",
      list(la.coordinates_in_lattice([6, 12], basis)))

# Finite presented groups can be compared through explicit maps.
z6 = la.PresentedGroup(1, la.intmat([[6]]))
z2_z3 = la.PresentedGroup(2, la.intmat([[2, 0], [0, 3]]))
f = la.intmat([[1], [1]])
print("Z/6 -> Z/2 + Z/3 by g -> (1,1) is an isomorphism:",
      la.presented_map_is_iso(f, z6, z2_z3))
