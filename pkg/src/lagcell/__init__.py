"""
Schubert cells of real and complex Lagrangian Grassmannians, their attaching
degrees, cellular chain complexes and integral homology.
"""

from .cells import Cell, Kind, SignAssignment, enumerate_cells
from .chain import ChainComplex, build, real_subcomplex, verify_ddzero
from .diagrams import ShiftedDiagram, all_diagrams, corners, region_data
from .errors import DomainError, IntegrityError, LagcellError, ResourceError
from .homology import HomologyResult, homology, smith_normal_form
from .incidence import degree, jacobian_complex, jacobian_mixed

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "ChainComplex",
    "DomainError",
    "HomologyResult",
    "IntegrityError",
    "Kind",
    "LagcellError",
    "ResourceError",
    "ShiftedDiagram",
    "SignAssignment",
    "all_diagrams",
    "build",
    "corners",
    "degree",
    "enumerate_cells",
    "homology",
    "jacobian_complex",
    "jacobian_mixed",
    "real_subcomplex",
    "region_data",
    "smith_normal_form",
    "verify_ddzero",
    "__version__",
]
