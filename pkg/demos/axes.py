# The three coordinate axes in 3-space
#
# The ideal (xy, xz, yz) cuts out the union of the x, y and z axes.  The ring
# is F-pure in every characteristic but it is not Gorenstein, which makes it a
# good first example: the Frobenius invariants are all as small as possible.

from fthresh import (
    FrobeniusContext,
    Ideal,
    RingContext,
    a_invariants,
    b_invariant,
    betti_table,
    classify,
    free_resolution,
    is_f_pure,
    splitting_prime_estimate,
)

# Pick a prime and build the ring.

S = RingContext(5, ("x", "y", "z"))
I = Ideal.parse(S, "x*y, x*z, y*z")
R = FrobeniusContext(I)

print("F-pure:", bool(is_f_pure(R)))

# b(p^e) measures how far into n^[q] the Fedder colon reaches.  Here it is 0
# at every level, so the F-pure threshold is 0 too.

for e in (1, 2, 3):
    print(f"b({5**e}) =", b_invariant(R, e))

# The splitting ideals shrink to the maximal ideal right away.

data = splitting_prime_estimate(R, 3)
print("splitting prime:", data.stabilized_prime, "sdim:", data.sdim)

# On the homological side: a free resolution, its Betti table and the
# a-invariants read off from the dual complex.

print(betti_table(free_resolution(I)).format())
a = a_invariants(I)
# None stands for -infinity: that local cohomology module vanishes.
print("a_0 =", a[0], " a_1 =", a[1])

c = classify(I)
print("Cohen-Macaulay:", c.is_cm, " type:", c.type, " Gorenstein:", c.is_gorenstein)
