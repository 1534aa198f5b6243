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
# Double circulant codes and their extensions

Q_p(r,s,t) puts r on the diagonal, s on residue offsets and t on the rest.
[I | Q] is self-dual exactly when Q Q^T = I; the closed form for Q Q^T
makes that a check on three ring elements.
"""

# %%
from ringcodes import circulant as C
from ringcodes import extend as E
from ringcodes import gf2, weights
from ringcodes.ring import as_codes

spec = C.CirculantSpec(11, *as_codes("0 u^2 1+u^2").tolist())
print(spec, "Q Q^T =", C.qdc_identity_check(spec))
g = C.qdc_code(spec)
b = gf2.gray_image(g)
print(b.shape, "self-dual:", gf2.is_self_dual(b), "d =", weights.min_distance(b))

# %% [markdown]
"""
`extend_idext` grows [I | A] by one R-coordinate pair.  With the vector
below the Gray image is an extremal [72,36,12] code in the second length-72
Type I family.
"""

# %%
x = as_codes("u^2 0 u^2 0 u^2 u^2 0 0 u+u^2 u u")
d72 = E.extend_idext(g, x, 1)
b72 = gf2.gray_image(d72)
prof = weights.weight_enumerator(b72, upto=16, method="infosets")
print(prof.counts)
print(weights.identify_form(prof, doubly_even=False).as_dict())

# %% [markdown]
"""
The binary route: extend the [66,33,12] Gray image by two coordinates with a
vector given in hex.
"""

# %%
x68 = E.decode_hex_x("1366E7855836D5F97", b.ncols)
c68 = E.extend_ext(b, x68)
prof = weights.weight_enumerator(c68, upto=14, method="infosets")
print(c68.shape, prof.counts, weights.identify_form(prof).as_dict())
