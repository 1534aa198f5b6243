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
# Rebuilding the reference tables, and searching for more

Every table row knows its construction and expected parameters.
"""

# %%
from ringcodes import tables

report = tables.verify_tables(8)
print(tables.format_report(report))

# %% [markdown]
"""
A search samples extension vectors from a seeded stream per trial, so the
result set does not depend on the number of workers.  Uniformly random
vectors rarely reach d = 12 at length 68; here the first trial is seeded
with a known vector.
"""

# %%
import tempfile
from pathlib import Path

from ringcodes.search import SearchSpec, search_extensions
from ringcodes.store import store_query

store = Path(tempfile.mkdtemp()) / "codes.jsonl"
spec = SearchSpec("gray(C11(0,u^2,1+u^2))", "ext", trials=4, seed=1, target=(68, 34, 12),
                  store=str(store), candidates=("1366E7855836D5F97",))
for rec in search_extensions(spec):
    print(rec.construction, rec.form, rec.params)
print(store_query(store, n=68, gamma=0))

# %% [markdown]
"""
At length 30 uniform sampling finds plenty of codes, and the store keeps
one per distinct weight profile.
"""

# %%
small = search_extensions(SearchSpec("QRbar(7)", "ext", trials=40, seed=3, target=(30, 15, 4)))
for rec in small:
    print(rec.d, rec.params)
