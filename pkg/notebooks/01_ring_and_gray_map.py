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
# The ring F2 + uF2 + u^2F2 and its Gray map

Elements a + bu + cu^2 are stored as 3-bit integers `a | b<<1 | c<<2`.
Multiplication folds u^3 back to u, so the ring has zero divisors and only
two units.
"""

# %%
import numpy as np

from ringcodes import ring
from ringcodes.ring import ELEMENTS, GRAY, LEE, MUL

print([str(x) for x in ELEMENTS])
print("units:", sorted(str(x) for x in ring.UNITS))
print("u * u * u =", ring.U * ring.U * ring.U)

# %% [markdown]
"""
The multiplication table, with rows and columns in the order above.
"""

# %%
print(MUL)

# %% [markdown]
"""
The Gray map sends a + bu + cu^2 to (a+b, b+c, c).  It is additive and
bijective, and the Hamming weight of the image is the Lee weight.
"""

# %%
for x in ELEMENTS:
    print(f"{str(x):>8} -> {GRAY[x].tolist()}  Lee weight {LEE[x]}")

# %% [markdown]
"""
For a vector of length n the image has length 3n and is laid out in three
blocks: all first bits, then all second bits, then all third bits.
"""

# %%
from ringcodes import gf2

v = ring.as_codes("1 u u^2 1+u+u^2")
print(gf2.gray_vector(v).reshape(3, -1))
assert np.array_equal(gf2.gray_preimage(gf2.gray_vector(v)), v)
