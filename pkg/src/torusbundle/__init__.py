"""Exact decision procedures for principal holomorphic torus bundles over tori."""

from .appell_humbert import (
    BilinearDecomposition,
    HermitianSystem,
    bracket_closure_oracle,
    check_riemann,
    cocycle,
    decompose,
    discriminant_form,
    hermitian_system,
)
from .classify import (
    ClassificationReport,
    ProblemInstance,
    build_iwasawa,
    classify,
    find_witness,
    load_instance,
    report_render,
)
from .errors import (
    DegenerateStructureError,
    DimensionError,
    DomainError,
    MalformedFormError,
    MalformedStructureError,
    ParseError,
    PreconditionError,
    TorusBundleError,
    UnsupportedSizeError,
)
from .invariants import (
    CohomologyReport,
    DeformationReport,
    cohomology_report,
    deformation_report,
)
from .lattice import (
    AlternatingLatticeForm,
    PfaffianPencilReport,
    TriangularSplitting,
    image_dimension,
    kernel_of_form,
    pfaffian_pencil,
    triangular_splitting,
    validate_form,
)
from .matrix import ExactMatrix, determinant, kernel_basis, rank
from .scalars import GaussianRational, parse_scalar
from .structures import PeriodSubspace, SplittingFrame, project_V, project_Vbar, validate_subspace

__version__ = "0.1.0"
