"""
Arithmetic in GF(2^4)
=====================

Elements are ints whose bits are polynomial coefficients.
"""

from carlitz_cdu import make_field

# the field modulo X^4+X+1; g = 0b0010 is a root of the modulus
F = make_field(4, 0b10011)
g = 0b0010
print(F)

# g^4 = g + 1
print("g^4 =", F.fmt(F.pow(g, 4)))

# inversion, with 0 sent to 0
print("1/g =", F.fmt(F.inv(g)), " check:", F.mul(g, F.inv(g)))

# the absolute trace is balanced: half the field has trace 0
print("trace zeros:", int((F.trace_table == 0).sum()), "of", F.order)

# roots of a quadratic, counted from the trace and then found
a2, a1, a0 = 1, 1, 0b0110
print("roots of x^2 + x + 6:", F.quad_count(a2, a1, a0), sorted(map(F.fmt, F.quad_roots(a2, a1, a0))))
