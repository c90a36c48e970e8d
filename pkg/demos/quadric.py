# A quadric cone and its F-pure threshold
#
# x^2 + yz is a Gorenstein hypersurface.  For such rings the Fedder colon is
# principal, generated by f^(p-1), and the threshold is known exactly.  The
# lower bounds b(p^e)/p^e climb toward it.

from fthresh import (
    FrobeniusContext,
    Ideal,
    RingContext,
    a_invariants,
    f_pure_sequence,
    fpt_report,
    gorenstein_fpt,
)

for p in (3, 5, 7):
    S = RingContext(p, ("x", "y", "z"))
    R = FrobeniusContext(Ideal.parse(S, "x^2 + y*z"))
    rep = fpt_report(R, 2, gorenstein=True)
    cert = gorenstein_fpt(R)
    print(f"p={p}  lower bounds {[str(x) for x in rep.fpt_lower]}  exact {cert.fpt_exact}")

# The exact value agrees with -a_d, where d is the dimension.

S = RingContext(5, ("x", "y", "z"))
R = FrobeniusContext(Ideal.parse(S, "x^2 + y*z"))
print("a_d =", a_invariants(R.I).top)

# Cutting by a general linear form keeps the ring F-pure and lowers the
# threshold by one.  One cut is enough here.

seq = f_pure_sequence(R)
for step in seq.steps:
    print("cut by", step.form, " a_d afterwards:", step.a_top)
