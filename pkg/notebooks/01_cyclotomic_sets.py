# %% [markdown]
# # Cyclotomic FHS sets
#
# A walk through the finite-field side: build GF(13), split its nonzero
# elements into 4 cyclotomic classes, and turn the classes into a set of
# 4 hopping patterns of length 13.  Then measure every Hamming correlation
# and see where the closed forms for the peaks hold.

# %%
import numpy as np

from fhset import build_field, build_scheme, full_report, gen_cyclotomic_a, mhc_verdict, ahc_verdict

ctx = build_field(13)
print("alpha =", ctx.alpha)
print("powers:", ctx.exp.tolist())

# %% [markdown]
# Class C_r holds alpha^(4l + r).  The cyclotomic number (i, j) counts the x
# in C_i with x + 1 in C_j.

# %%
scheme = build_scheme(ctx, 4)
for r in range(4):
    print(f"C_{r} =", sorted(scheme.cls(r).tolist()))
print(scheme.numbers)

# %% [markdown]
# Summing the table along each wrapped diagonal gives f - 1 once and f elsewhere:

# %%
from fhset.cyclotomy import class_sums

print("f =", scheme.f, " diagonal sums:", class_sums(scheme))

# %% [markdown]
# ## The set
#
# Position 0 carries the sequence index; position t != 0 carries the class of
# t shifted by the index.

# %%
fset = gen_cyclotomic_a(13, 4)
print(fset.symbols)

rep = full_report(fset)
print("per-sequence peaks:", rep.auto_max)
print("H_a =", rep.H_a, " H_c =", rep.H_c)
print("A_a =", rep.A_a, " A_c =", rep.A_c)
print("Peng-Fan:", mhc_verdict(rep, *fset.shape).verdict)
print("AHC:     ", ahc_verdict(rep, *fset.shape).verdict)

# %% [markdown]
# The autocorrelation peak is 3 here, not f + 1 = 4.  For f odd, -1 sits in
# class M/2, so tau and -tau are never both in C_0 and the "+2" boundary
# term can contribute at most 1.  Sweeping all small primes shows the
# pattern:

# %%
from fhset.algebra import divisors, is_prime

rows = []
for p in (p for p in range(3, 60) if is_prime(p)):
    for M in (m for m in divisors(p - 1) if m >= 2):
        f = (p - 1) // M
        r = full_report(gen_cyclotomic_a(p, M))
        rows.append((p, M, f, r.H_a - f, r.H_c - f))

for p, M, f, da, dc in rows[:16]:
    print(f"p={p:3d} M={M:3d} f={f:3d}   H_a=f+{da}  H_c=f+{dc}")

# %%
agree = all(da == (f % 2 == 0) and dc == 1 + (M % 2 == 0 and (f % 2 == 0 or M % 4 == 0))
            for p, M, f, da, dc in rows)
print("H_a = f + [f even], H_c = f + 1 + [M even and (f even or 4 | M)]:", agree)

# %% [markdown]
# Same idea over an extension field.  GF(9) is built on the first monic
# irreducible quadratic whose root is primitive, x^2 + x + 2, and the set has
# length q - 1.

# %%
from fhset import gen_cyclotomic_b

ctx9 = build_field(9)
print("modulus (low first):", ctx9.modulus)
b = gen_cyclotomic_b(9, 4)
print(b.symbols)
rb = full_report(b)
print("H =", rb.H, " bound f+2 =", (9 - 1) // 4 + 2)
print(np.bincount(b.symbols[0], minlength=4), "<- perfectly balanced")
