"""
Derivatives with respect to the order
=====================================

The dispatcher picks the right closed form for each order class and tags it;
a Richardson finite difference over the order serves as the cross-check.
"""

from kelvinfn import dkelvin, kelvin_all


def fd_oracle(nu, x, h=1e-3):
    """Finite-difference order derivatives, Richardson over h and h/2."""
    def central(step):
        hi = kelvin_all(nu + step, x)
        lo = kelvin_all(nu - step, x)
        return [(a - b) / (2 * step) for a, b in
                ((hi.ber, lo.ber), (hi.bei, lo.bei), (hi.ker, lo.ker), (hi.kei, lo.kei))]
    c1 = central(h)
    c2 = central(h / 2)
    return [(4 * b - a) / 3 for a, b in zip(c1, c2)]


x = 2.0
print(f"order derivatives at x = {x}\n")
print("  nu     d ber/d nu     d kei/d nu    method                    |closed - FD|")
for nu in (0.3, 0.5, 2.0, 5.3, -0.75, -2.0):
    q = dkelvin(nu, x)
    fd = fd_oracle(nu, x)
    worst = max(abs(g - w) for g, w in zip((q.dber, q.dbei, q.dker, q.dkei), fd))
    print(f"{nu:+5.2f}  {q.dber:+13.9f}  {q.dkei:+13.9f}   {q.method:24s} {worst:.2e}")

# Order classes at a glance:
#   non-integer nu >= 0 ........ rotation of the closed-form dJ/dnu, dK/dnu
#   integer nu >= 0 ............ finite sums over lower-order Kelvin values
#   half-integers (K side) ..... delta^2 extrapolation across the excluded order
#   nu < 0 ..................... derivatives of the reflection formulas
print("\nevery value above is checked against the finite difference to ~1e-6")
