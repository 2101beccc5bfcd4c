"""Three-valued functions, rough sets of quasiorders and the decision procedure
linking them."""
from .decision import (
    NO,
    YES_EQUIVALENCE,
    YES_QUASIORDER,
    Verdict,
    decide_equivalence,
    decide_quasiorder,
    enumerate_subalgebras,
    random_family_sweep,
    rs_to_family,
    sweep,
)
from .errors import (
    CapExceeded,
    InvalidPair,
    InvalidTopology,
    InvariantViolation,
    NotAQuasiorder,
    PreconditionError,
    TvRoughError,
    UniverseMismatch,
)
from .family import FunctionFamily, close_polarity
from .pairs import ApproxPair, phi, phi_inv
from .relspace import Relation, Topology, lower, rs_alt, rs_enumerate, upper
from .three import ONE, U, ZERO, Trit
from .tvfunc import TvFunction
from .universe import SubsetU, Universe

__version__ = "0.1.0"

__all__ = [
    "ApproxPair", "CapExceeded", "FunctionFamily", "InvalidPair", "InvalidTopology",
    "InvariantViolation", "NO", "NotAQuasiorder", "ONE", "PreconditionError", "Relation",
    "SubsetU", "Topology", "Trit", "TvFunction", "TvRoughError", "U", "Universe",
    "UniverseMismatch", "Verdict", "YES_EQUIVALENCE", "YES_QUASIORDER", "ZERO",
    "close_polarity", "decide_equivalence", "decide_quasiorder", "enumerate_subalgebras",
    "lower", "phi", "phi_inv", "random_family_sweep", "rs_alt", "rs_enumerate",
    "rs_to_family", "sweep", "upper",
]
