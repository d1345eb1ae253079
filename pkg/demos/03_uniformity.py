"""
c-differential uniformity
=========================

Counts solutions of F(x+a) + c F(x) = b and takes the maximum.
"""

from carlitz_cdu import Permutation, car3_family, cdiff_uniformity, compose, inverse_map, make_field

F = make_field(4, 0b10011)
g = 0b0010
inv = inverse_map(F)

# the inverse map at c = g
rep = cdiff_uniformity(inv, g)
print("inverse map: max", rep.max_count, " witness (a, b) =", tuple(map(F.fmt, rep.witness)))
print("spectrum:", dict(sorted(rep.spectrum.items())))

# a degree-one affine change leaves the value alone; x^4 + g x does not
A = Permutation(F, [F.pow(x, 4) ^ F.mul(g, x) for x in F.elements])
print("after x^4 + g x:", cdiff_uniformity(compose(A, inv), g).max_count)

# the three-point modification of inversion, over every c outside GF(2)
f = car3_family(F, 0b0110)
print("Inv o (0, 1, 6):", [cdiff_uniformity(f, c).max_count for c in range(2, F.order)])
