"""Problem instances, the full classification pipeline and report rendering."""

import json
import random
from dataclasses import dataclass, field

from .appell_humbert import bracket_closure_oracle, check_riemann, decompose
from .errors import DimensionError, ParseError, TorusBundleError
from .invariants import CohomologyReport, DeformationReport, cohomology_report, deformation_report
from .lattice import (
    REAL_POINT,
    AlternatingLatticeForm,
    PfaffianPencilReport,
    form_from_complex_bilinear,
    image_dimension,
    kernel_of_form,
    pfaffian_pencil,
    validate_form,
)
from .matrix import ExactMatrix, kernel_basis, rank
from .scalars import GaussianRational, parse_scalar
from .structures import validate_subspace

__all__ = [
    "ProblemInstance",
    "ClassificationReport",
    "instance_from_dict",
    "load_instance",
    "build_iwasawa",
    "classify",
    "report_render",
    "find_witness",
    "random_subspace",
    "CONNECTED_COMPONENT",
    "CRITERION_FAILS",
    "NOT_APPLICABLE",
]

CONNECTED_COMPONENT = "connected-component"
CRITERION_FAILS = "criterion-fails"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ProblemInstance:
    A: AlternatingLatticeForm
    V: object = None
    U: object = None
    name: str = None

    @property
    def has_structure(self):
        return self.V is not None and self.U is not None

    def to_dict(self):
        data = {"A": self.A.to_json()}
        if self.V is not None:
            data["V"] = self.V.to_json()
        if self.U is not None:
            data["U"] = self.U.to_json()
        if self.name:
            data["name"] = self.name
        return data


# loading


def _require(mapping, key, where):
    if not isinstance(mapping, dict):
        raise ParseError("expected an object", where)
    if key not in mapping:
        raise ParseError(f"missing key {key!r}", where)
    return mapping[key]


def _parse_int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", where)
    return value


def _parse_form(data, where):
    m = _parse_int(_require(data, "m", where), f"{where}.m")
    d = _parse_int(_require(data, "d", where), f"{where}.d")
    comps = _require(data, "components", where)
    if not isinstance(comps, list):
        raise ParseError("expected a list of matrices", f"{where}.components")
    parsed = []
    for k, mat in enumerate(comps):
        loc = f"{where}.components[{k}]"
        if not isinstance(mat, list) or not all(isinstance(row, list) for row in mat):
            raise ParseError("expected a matrix (list of rows)", loc)
        parsed.append([
            [_parse_int(x, f"{loc}[{i}][{j}]") for j, x in enumerate(row)]
            for i, row in enumerate(mat)
        ])
    return validate_form(AlternatingLatticeForm(m, d, tuple(parsed)))


def _parse_basis(data, where):
    rows = _require(data, "basis", where)
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("expected a non-empty matrix of scalar strings", f"{where}.basis")
    width = len(rows[0])
    out = []
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ParseError("ragged basis matrix", f"{where}.basis[{i}]")
        parsed = []
        for j, text in enumerate(row):
            loc = f"{where}.basis[{i}][{j}]"
            if isinstance(text, bool) or not isinstance(text, (str, int)):
                raise ParseError(f"expected a scalar string, got {text!r}", loc)
            try:
                parsed.append(parse_scalar(str(text)))
            except ParseError as exc:
                raise ParseError(str(exc), loc) from None
        out.append(parsed)
    return ExactMatrix(out)


def instance_from_dict(data):
    """Build and validate a :class:`ProblemInstance` from decoded JSON."""
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "$")
    form = _parse_form(_require(data, "A", "$"), "$.A")
    V = U = None
    if "V" in data:
        V = validate_subspace(_parse_basis(data["V"], "$.V"))
        if V.ambient_rank != 2 * form.m or V.dim != form.m:
            raise DimensionError(f"V must be a {2 * form.m}x{form.m} basis, got {V.ambient_rank}x{V.dim}")
    if "U" in data:
        U = validate_subspace(_parse_basis(data["U"], "$.U"))
        if U.ambient_rank != 2 * form.d or U.dim != form.d:
            raise DimensionError(f"U must be a {2 * form.d}x{form.d} basis, got {U.ambient_rank}x{U.dim}")
    name = data.get("name")
    return ProblemInstance(form, V, U, name if isinstance(name, str) else None)


def load_instance(text, source="<input>"):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from None
    return instance_from_dict(data)


# the Iwasawa manifold


def _subspace(columns):
    return validate_subspace(ExactMatrix.from_columns([[parse_scalar(x) for x in col] for col in columns]))


def build_iwasawa(deformed=False):
    """``A(z, z') = z_1 z'_2 - z_2 z'_1`` on ``Z[i]^2`` with values in ``Z[i]``.

    The standard structure is multiplication by ``i`` on both lattices.  With
    ``deformed=True`` the second factor of the base gets the conjugate
    structure, which kills ``B'`` and leaves a Hermitian part.
    """
    form = form_from_complex_bilinear([[0, 1], [-1, 0]])
    second = ["0", "0", "1", "i"] if deformed else ["0", "0", "1", "-i"]
    V = _subspace([["1", "-i", "0", "0"], second])
    U = _subspace([["1", "-i"]])
    return ProblemInstance(form, V, U, "iwasawa-deformed" if deformed else "iwasawa")


# witness search


def _small_gaussian(rng, bound=2):
    return GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_subspace(n, rng, bound=2, attempts=100):
    """A random ``n``-dimensional subspace of ``C^{2n}`` with ``W + conj W`` everything."""
    for _ in range(attempts):
        cols = [[_small_gaussian(rng, bound) for _ in range(2 * n)] for _ in range(n)]
        basis = ExactMatrix.from_columns(cols)
        P = basis.hstack(basis.conj())
        if rank(P) == 2 * n:
            return validate_subspace(basis)
    raise TorusBundleError("could not draw a nondegenerate random subspace")


def find_witness(form, rng=None, attempts=200, bound=2):
    """Heuristic search for ``(V, U)`` satisfying the Riemann relation.

    Picks a random ``U`` and builds ``conj V`` one vector at a time inside
    the common isotropic space of the ``U``-valued parts of ``A``.  Returns
    ``(V, U)`` or ``None``; failure proves nothing.
    """
    rng = rng or random.Random(0)
    m, d = form.m, form.d
    mats = form.matrices()
    for _ in range(attempts):
        U = random_subspace(d, rng, bound)
        Qinv = U.frame.P_inverse
        parts = []
        for j in range(d):
            acc = ExactMatrix.zeros(2 * m, 2 * m)
            for k, mat in enumerate(mats):
                if Qinv[j, k]:
                    acc = acc + mat.scale(Qinv[j, k])
            parts.append(acc)
        frame = []
        for _ in range(m):
            # isotropic for every B_j against the vectors so far, and
            # Hermitian-orthogonal to them so the new vector is independent
            rows = [part.apply(w) for part in parts for w in frame]
            rows += [[x.conj() for x in w] for w in frame]
            if rows:
                space = kernel_basis(ExactMatrix(rows, cols=2 * m))
            else:
                space = ExactMatrix.identity(2 * m).columns()
            if not space:
                break
            combo = [_small_gaussian(rng, bound) for _ in space]
            w = [sum((c * vec[i] for c, vec in zip(combo, space)), GaussianRational(0)) for i in range(2 * m)]
            frame.append(w)
        if len(frame) != m:
            continue
        V_basis = ExactMatrix.from_columns([[x.conj() for x in w] for w in frame])
        P = V_basis.hstack(V_basis.conj())
        if rank(P) != 2 * m:
            continue
        V = validate_subspace(V_basis)
        if check_riemann(decompose(form, V, U)):
            return V, U
    return None


# the report


@dataclass(frozen=True)
class ClassificationReport:
    m: int
    d: int
    form: dict
    riemann_ok: object
    bracket_closure: object
    orientation: object
    cohomology: object
    deformation: object
    pencil: object
    main_theorem_verdict: str
    not_kaehler: bool
    warnings: list = field(default_factory=list)
    trace: list = field(default_factory=list)

    def to_dict(self):
        return {
            "m": self.m,
            "d": self.d,
            "form": dict(self.form),
            "riemann_ok": self.riemann_ok,
            "bracket_closure": self.bracket_closure,
            "orientation": self.orientation,
            "cohomology": self.cohomology.to_json() if self.cohomology else None,
            "deformation": self.deformation.to_json() if self.deformation else None,
            "pencil": self.pencil.to_json() if self.pencil else None,
            "main_theorem_verdict": self.main_theorem_verdict,
            "not_kaehler": self.not_kaehler,
            "warnings": list(self.warnings),
            "trace": list(self.trace),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            m=data["m"],
            d=data["d"],
            form=dict(data["form"]),
            riemann_ok=data["riemann_ok"],
            bracket_closure=data["bracket_closure"],
            orientation=data["orientation"],
            cohomology=CohomologyReport.from_json(data["cohomology"]) if data["cohomology"] else None,
            deformation=DeformationReport.from_json(data["deformation"]) if data["deformation"] else None,
            pencil=PfaffianPencilReport.from_json(data["pencil"]) if data["pencil"] else None,
            main_theorem_verdict=data["main_theorem_verdict"],
            not_kaehler=data["not_kaehler"],
            warnings=list(data["warnings"]),
            trace=list(data["trace"]),
        )


def _main_theorem(form, kernel_dim, image_dim, pencil, trace):
    if form.is_zero():
        trace.append("main theorem: A = 0, the extension is trivial -> not-applicable")
        return NOT_APPLICABLE
    if (form.m, form.d) != (2, 1):
        trace.append(f"main theorem: stated for m=2, d=1, got m={form.m}, d={form.d} -> not-applicable")
        return NOT_APPLICABLE
    cond1 = kernel_dim == 0 and image_dim == 2
    trace.append(
        f"condition 1 (A nondegenerate, image of dimension 2): kernel dim {kernel_dim}, "
        f"image dim {image_dim} -> {'holds' if cond1 else 'fails'}"
    )
    cond2 = pencil.real_point_verdict == REAL_POINT
    trace.append(
        f"condition 2 (pencil meets the Klein quadric in a real point): Pf = {pencil.polynomial()}, "
        f"discriminant {pencil.discriminant}, {pencil.real_point_verdict} -> {'holds' if cond2 else 'fails'}"
    )
    verdict = CONNECTED_COMPONENT if cond1 and cond2 else CRITERION_FAILS
    trace.append(f"main theorem verdict: {verdict}")
    return verdict


def classify(instance):
    form = validate_form(instance.A)
    trace, warnings = [], []
    kernel_dim, _ = kernel_of_form(form)
    image_dim = image_dimension(form)
    form_summary = {"kernel_dim": kernel_dim, "image_dim": image_dim, "zero": form.is_zero()}
    trace.append(f"form: m={form.m}, d={form.d}, kernel dim {kernel_dim}, image dim {image_dim}")

    pencil = pfaffian_pencil(form) if (form.m, form.d) == (2, 1) else None
    if pencil is None:
        trace.append("pencil: Pfaffian analysis only for m=2, d=1; skipped")

    riemann = closure = orientation = cohomology = deformation = None
    if instance.has_structure:
        decomp = decompose(form, instance.V, instance.U)
        riemann = check_riemann(decomp)
        closure = bracket_closure_oracle(form, instance.V, instance.U)
        if riemann != closure:
            raise AssertionError("Riemann block test and bracket closure disagree")
        orientation = {"V": instance.V.orientation_sign, "U": instance.U.orientation_sign}
        for key, sign in orientation.items():
            if sign < 0:
                warnings.append(f"{key} has negative orientation scalar (other connected component)")
        trace.append(f"riemann relation: {'holds' if riemann else 'fails'} (bracket closure agrees)")
        if riemann:
            cohomology = cohomology_report(decomp)
            deformation = deformation_report(decomp)
            trace.append(f"G rank {deformation.G_rank} of {deformation.G_target_dim}: "
                         f"{'smooth' if deformation.smooth else 'not smooth'}")
            trace.append(f"kodaira-spencer surjectivity case: {deformation.ks_surjective_case}")
        else:
            warnings.append("(V, U) violates the Riemann relation: no bundle, invariants skipped")
    else:
        trace.append("no (V, U) supplied: only form-level analyses")

    verdict = _main_theorem(form, kernel_dim, image_dim, pencil, trace)
    return ClassificationReport(
        m=form.m,
        d=form.d,
        form=form_summary,
        riemann_ok=riemann,
        bracket_closure=closure,
        orientation=orientation,
        cohomology=cohomology,
        deformation=deformation,
        pencil=pencil,
        main_theorem_verdict=verdict,
        not_kaehler=not form.is_zero(),
        warnings=warnings,
        trace=trace,
    )


def _flag(value):
    if value is None:
        return "n/a"
    return "true" if value else "false"


def _render_text(report):
    lines = [f"m: {report.m}", f"d: {report.d}"]
    lines.append(f"form kernel dim: {report.form['kernel_dim']}")
    lines.append(f"form image dim: {report.form['image_dim']}")
    lines.append(f"riemann relation: {_flag(report.riemann_ok)}")
    if report.orientation:
        lines.append(f"orientation signs: V {report.orientation['V']:+d}, U {report.orientation['U']:+d}")
    c = report.cohomology
    if c:
        lines += [
            f"parallelizable: {_flag(c.parallelizable)}",
            f"h0(Omega^1): {c.h0_omega1}",
            f"h0 closed 1-forms: {c.h0_closed}",
            f"h1(O): {c.h1_O}",
            f"h2(O): {c.h2_O} (E3^02 {c.E3_02}, E3^20 {c.E3_20}, E3^11 {c.E3_11})",
        ]
    dfm = report.deformation
    if dfm:
        lines += [
            f"G rank: {dfm.G_rank}",
            f"tangent dim (Appell-Humbert space): {dfm.tangent_dim_TB}",
            f"tangent dim (complete family): {dfm.tangent_dim_complete}",
            f"smooth: {_flag(dfm.smooth)}",
            f"kodaira-spencer surjective case: {dfm.ks_surjective_case}",
        ]
    if report.pencil:
        lines.append(f"pfaffian form: {report.pencil.polynomial()}")
        lines.append(f"pencil verdict: {report.pencil.real_point_verdict}")
    lines.append(f"not kaehler: {_flag(report.not_kaehler)}")
    lines.append(f"main theorem verdict: {report.main_theorem_verdict}")
    for w in report.warnings:
        lines.append(f"warning: {w}")
    lines.append("trace:")
    lines += [f"  {step}" for step in report.trace]
    return "\n".join(lines) + "\n"


def report_render(report, fmt="json"):
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "text":
        return _render_text(report)
    raise ValueError(f"unknown format {fmt!r}")
