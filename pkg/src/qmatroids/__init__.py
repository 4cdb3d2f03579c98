"""q-matroids, strong maps, q-Delta-matroids and rank-metric codes over finite fields."""
from .gf import GF, field
from .qdelta import QDeltaMatroid, check_f1f2, check_f3f4
from .qg import QGPair, qg_family, weak_qg_family
from .qmatroid import QMatroid, from_bases, uniform
from .subspace import BilinearForm, LatticeIndex, Subspace, lattice

__all__ = [
    "GF", "field", "Subspace", "BilinearForm", "LatticeIndex", "lattice",
    "QMatroid", "uniform", "from_bases", "QDeltaMatroid", "check_f1f2", "check_f3f4",
    "QGPair", "weak_qg_family", "qg_family",
]
__version__ = "0.1.0"
