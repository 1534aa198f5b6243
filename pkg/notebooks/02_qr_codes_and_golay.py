# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
"""
# Quadratic residue codes over R

For a prime p with 2 a square mod p, the idempotents e1 and e2 of the binary
QR codes lift to idempotents over R.  Length 7 already gives something
familiar: the Gray image of the extended code is the Golay code.
"""

# %%
from ringcodes import gf2, qr, weights

fam = qr.qr_family(7)
print("Q1' idempotent:", [str(v) for v in map(int, fam.idempotents["q1p"])])
ext = qr.extend_qr(fam, 1)
print(ext)

# %%
golay = gf2.gray_image(ext)
prof = weights.weight_enumerator(golay)
print(golay, "self-dual:", gf2.is_self_dual(golay), "doubly-even:", gf2.is_doubly_even(golay))
print(prof.counts)

# %% [markdown]
"""
Deleting the two coordinates where the codewords agree gives the
subtracted codes, still self-dual.
"""

# %%
sqr = gf2.gray_image(qr.subtract_sqr(ext))
bsqr = qr.bsqr(7)
for name, code in (("SQR(7)", sqr), ("BSQR(7)", bsqr)):
    print(name, code.shape, "d =", weights.min_distance(code), "self-dual:", gf2.is_self_dual(code))

# %% [markdown]
"""
At p = 23 the extended code is a [72,36,12] Type II code.  Its number of
weight-12 words fixes the free parameter of the length-72 enumerator.
Counting words of weight at most 16 from two disjoint information sets takes
a few seconds instead of walking all 2^36 codewords.
"""

# %%
g23 = gf2.gray_image(qr.extend_qr(qr.qr_family(23), 1))
low = weights.weight_enumerator(g23, upto=16, method="infosets")
print(low.counts, weights.identify_form(low).as_dict())
