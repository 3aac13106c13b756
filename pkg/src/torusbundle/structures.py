"""Complex structures on lattices given by period subspaces.

A subspace ``V`` of ``Gamma (x) C`` is described by a basis matrix (columns
span ``V``).  It defines a complex torus when ``V + conj(V)`` is everything;
the frame ``P = [basis | conj(basis)]`` then splits every vector into its
``V`` and ``conj(V)`` coordinates.
"""

from dataclasses import dataclass

from .errors import DegenerateStructureError, DimensionError, MalformedStructureError
from .matrix import ExactMatrix, rank
from .scalars import GaussianRational, I

__all__ = ["PeriodSubspace", "SplittingFrame", "validate_subspace", "project_V", "project_Vbar"]


@dataclass(frozen=True)
class SplittingFrame:
    P: ExactMatrix
    P_inverse: ExactMatrix
    dim: int

    def coordinates(self, x):
        """``(V-coordinates, conj(V)-coordinates)`` of ``x``."""
        c = self.P_inverse.apply(x)
        return c[: self.dim], c[self.dim:]

    def combine(self, v_coords, vbar_coords):
        """The ambient vector ``basis @ v + conj(basis) @ w``."""
        return self.P.apply(list(v_coords) + list(vbar_coords))


@dataclass(frozen=True)
class PeriodSubspace:
    """A validated subspace ``V`` with ``V (+) conj(V) = Gamma (x) C``.

    ``orientation`` is the real number ``i^dim * det(P)``; its sign tells
    which of the two connected components of such subspaces ``V`` lies in.
    """

    basis: ExactMatrix
    frame: SplittingFrame
    orientation: GaussianRational

    @property
    def ambient_rank(self):
        return self.basis.rows

    @property
    def dim(self):
        return self.basis.cols

    @property
    def orientation_sign(self):
        return 1 if self.orientation.re > 0 else -1

    def vectors(self):
        return self.basis.columns()

    def conj_vectors(self):
        return self.basis.conj().columns()

    def coordinates(self, x):
        return self.frame.coordinates(x)

    def to_json(self):
        return {"basis": [[str(x) for x in row] for row in self.basis.tolist()]}


def validate_subspace(basis, expected_dim=None):
    """Build a :class:`PeriodSubspace` from a ``2n x n`` basis matrix."""
    if not isinstance(basis, ExactMatrix):
        basis = ExactMatrix(basis)
    n2, n = basis.shape
    if n == 0 or n2 != 2 * n:
        raise MalformedStructureError(f"basis must be 2n x n, got {n2}x{n}")
    if expected_dim is not None and n != expected_dim:
        raise DimensionError(f"expected a subspace of dimension {expected_dim}, got {n}")
    if rank(basis) < n:
        raise MalformedStructureError("basis columns are linearly dependent")
    P = basis.hstack(basis.conj())
    det = P.determinant()
    if det.is_zero():
        raise DegenerateStructureError("the subspace meets its complex conjugate")
    orientation = (I ** n) * det
    # conj(det P) = (-1)^n det P, so i^n det P is always real
    assert orientation.is_real(), orientation
    frame = SplittingFrame(P=P, P_inverse=P.inverse(), dim=n)
    return PeriodSubspace(basis=basis, frame=frame, orientation=orientation)


def project_V(frame, x):
    """``V``-coordinates of ``x`` (first half of ``P^{-1} x``)."""
    if isinstance(frame, PeriodSubspace):
        frame = frame.frame
    if len(x) != frame.P.rows:
        raise DimensionError(f"vector of length {len(x)} in a space of dimension {frame.P.rows}")
    return frame.coordinates(x)[0]


def project_Vbar(frame, x):
    if isinstance(frame, PeriodSubspace):
        frame = frame.frame
    if len(x) != frame.P.rows:
        raise DimensionError(f"vector of length {len(x)} in a space of dimension {frame.P.rows}")
    return frame.coordinates(x)[1]
