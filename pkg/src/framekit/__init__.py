"""
framekit: R-duals of finite frames.

Sequences are numpy arrays whose columns are the vectors.  The main entry
points live in the submodules:

* :mod:`framekit.linalg`  -- Hermitian eigendecomposition, PSD square roots, rank
* :mod:`framekit.frames`  -- frame operators, bounds, classification, canonical duals
* :mod:`framekit.rduals`  -- R-duals of types I-IV, membership checks, witnesses
* :mod:`framekit.gabor`   -- Gabor systems on Z_L and the finite duality principle
* :mod:`framekit.catalog` -- truncated classical examples
"""

from . import catalog, frames, gabor, linalg, matio, rduals
from .errors import *  # noqa: F401,F403
from .frames import (canonical_dual, canonical_tight, classify, extend_operator,
                     frame_operator, optimal_bounds)
from .rduals import (check_type1_tight, check_type2, check_type3, construct_type1,
                     construct_type2, construct_type3, construct_type4,
                     canonical_rdual_of_dual, reconstruct_primal, witness_type3)

__version__ = '0.1.0'
