"""Sparse multivariate polynomials with exact Q(i) coefficients.

Only what the pencil and discriminant computations need: ring operations,
evaluation, and a determinant of a matrix with polynomial entries.
"""

from itertools import permutations

from .errors import DimensionError
from .scalars import GaussianRational, ONE, ZERO

__all__ = ["Polynomial", "poly_determinant"]


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class Polynomial:
    """Polynomial in ``nvars`` variables, stored as ``{exponents: coefficient}``."""

    __slots__ = ("nvars", "terms", "names")

    def __init__(self, nvars, terms=None, names=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise DimensionError(f"monomial {exps} does not have {nvars} exponents")
            coeff = GaussianRational.coerce(coeff)
            if coeff:
                clean[exps] = clean.get(exps, ZERO) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.nvars = nvars
        self.terms = clean
        self.names = tuple(names) if names else tuple(f"x{k + 1}" for k in range(nvars))

    @classmethod
    def constant(cls, nvars, value, names=None):
        return cls(nvars, {(0,) * nvars: value}, names)

    @classmethod
    def variable(cls, nvars, index, names=None):
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): ONE}, names)

    @classmethod
    def linear(cls, coefficients, names=None):
        """``sum_k c_k x_k``."""
        n = len(coefficients)
        terms = {}
        for k, c in enumerate(coefficients):
            exps = [0] * n
            exps[k] = 1
            terms[tuple(exps)] = c
        return cls(n, terms, names)

    def _other(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise DimensionError("polynomials in different numbers of variables")
            return other
        return Polynomial.constant(self.nvars, other, self.names)

    def __add__(self, other):
        other = self._other(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, ZERO) + c
        return Polynomial(self.nvars, terms, self.names)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, ZERO) + c1 * c2
        return Polynomial(self.nvars, terms, self.names)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == self._other(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def has_real_coefficients(self):
        return all(c.is_real() for c in self.terms.values())

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise DimensionError("evaluation point has the wrong length")
        point = [GaussianRational.coerce(p) for p in point]
        total = ZERO
        for exps, c in self.terms.items():
            value = c
            for p, k in zip(point, exps):
                if k:
                    value = value * p ** k
            total = total + value
        return total

    def sorted_terms(self):
        """Terms in descending lexicographic order of exponents."""
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def leading_coefficient(self):
        terms = self.sorted_terms()
        return terms[0][1] if terms else ZERO

    def to_json(self):
        return [{"exponents": list(e), "coefficient": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars, data, names=None):
        return cls(nvars, {tuple(t["exponents"]): GaussianRational.coerce(t["coefficient"]) for t in data}, names)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.names, exps) if k
            )
            if not mono:
                text = str(c)
            elif c == ONE:
                text = mono
            elif c == -ONE:
                text = f"-{mono}"
            elif c.is_real() or c.re == 0:
                text = f"{c}*{mono}"
            else:
                text = f"({c})*{mono}"
            pieces.append(text)
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"


def poly_determinant(entries):
    """Leibniz expansion of the determinant of a square grid of polynomials."""
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise DimensionError("polynomial determinant needs a square grid")
    if n == 0:
        raise DimensionError("empty grid")
    nvars = entries[0][0].nvars
    names = entries[0][0].names
    total = Polynomial(nvars, names=names)
    for perm in permutations(range(n)):
        term = Polynomial.constant(nvars, _perm_sign(perm), names)
        for i, j in enumerate(perm):
            term = term * entries[i][j]
            if term.is_zero():
                break
        total = total + term
    return total
