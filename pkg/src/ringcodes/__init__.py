"""Self-dual codes over F2 + uF2 + u^2F2 (u^3 = u) and their binary Gray images."""

import os

# numba's TBB layer is unusable with the system TBB; omp tolerates concurrent callers
os.environ.setdefault("NUMBA_THREADING_LAYER", "omp")
if os.environ.get("RINGCODES_THREADS"):
    os.environ.setdefault("NUMBA_NUM_THREADS", os.environ["RINGCODES_THREADS"])

__version__ = "0.1.0"
