"""
Carlitz forms and their normal form
===================================

A form (a_0, ..., a_{m+1}) alternates affine maps with inversion.  Up to
degree-one affine maps on both sides it agrees with inversion (or the
identity) away from at most m points.
"""

from carlitz_cdu import CarlitzForm, affine_deg1, convergents, from_carlitz, make_field, normalize

F = make_field(6)
form = CarlitzForm(F, (0x05, 0x11, 0x2a, 0x07, 0x13))
f = from_carlitz(form)
print("m =", form.m, " first values:", [F.fmt(v) for v in f.table[:8].tolist()])

# the convergents give a rational map that matches f off the poles
data = convergents(form)
print("poles:", sorted(map(F.fmt, data.poles)))

# normalization: outer o f o inner differs from the reference in few points
norm = normalize(form)
print("kind:", norm.kind, " exceptional points:", sorted(map(F.fmt, norm.points)))
g = affine_deg1(F, *norm.outer) @ f @ affine_deg1(F, *norm.inner)
print("reconstructs g:", g == norm.g)
print("differs from reference at:", sorted(map(F.fmt, norm.g.differs_from(norm.reference))))
