"""(Extended) generalized Reed-Solomon codes.

A GrsSpec is the data (a, v, k, extended): distinct evaluation points
a_i, nonzero column multipliers v_i, dimension k.  The codewords are
(v_1 f(a_1), ..., v_n f(a_n)) for deg f < k, with the coefficient of
x^(k-1) appended as an extra coordinate in the extended case.

Alongside each evaluation set we keep the derived quantities
u_i = prod_{j != i} (a_i - a_j)^(-1), which tie a GRS code to its dual
in everything downstream (certificates, hull membership, duality).
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import Field
from .linalg import Matrix, poly_coeff, poly_deg, poly_eval


class GrsError(ValueError):
    pass


@dataclass(frozen=True)
class EvaluationSet:
    field: Field
    a: tuple
    u: tuple

    @property
    def n(self) -> int:
        return len(self.a)


def eval_set(field: Field, a) -> EvaluationSet:
    """Evaluation points plus their u_i values.

    u_i is the inverse of prod_{j != i} (a_i - a_j); for a single point
    the empty product gives u_1 = 1.
    """
    a = tuple(int(x) for x in a)
    if not a:
        raise GrsError("empty evaluation set")
    if len(a) > field.q:
        raise GrsError(f"{len(a)} points cannot be distinct in GF({field.q})")
    if len(set(a)) != len(a):
        raise GrsError("evaluation points must be pairwise distinct")
    u = []
    for i, ai in enumerate(a):
        prod = 1
        for j, aj in enumerate(a):
            if j != i:
                prod = field.mul(prod, field.sub(ai, aj))
        u.append(field.inv(prod))
    return EvaluationSet(field, a, tuple(u))


@dataclass(frozen=True)
class GrsSpec:
    points: EvaluationSet
    v: tuple
    k: int
    extended: bool = False

    @property
    def field(self) -> Field:
        return self.points.field

    @property
    def n(self) -> int:
        """Number of evaluation points (code length minus the extension)."""
        return self.points.n

    @property
    def length(self) -> int:
        return self.n + 1 if self.extended else self.n


def grs(points: EvaluationSet, v, k: int, extended: bool = False) -> GrsSpec:
    v = tuple(int(x) for x in v)
    if len(v) != points.n:
        raise GrsError("multiplier count does not match evaluation set")
    if any(x == 0 for x in v):
        raise GrsError("multipliers must be nonzero")
    kmax = points.n + 1 if extended else points.n
    if not 1 <= k <= kmax:
        raise GrsError(f"dimension {k} out of range 1..{kmax}")
    return GrsSpec(points, v, k, extended)


def generator_matrix(spec: GrsSpec) -> Matrix:
    """The k x n (or k x (n+1)) Vandermonde-with-multipliers generator."""
    f = spec.field
    rows = []
    for r in range(spec.k):
        row = [f.mul(vi, f.pow(ai, r)) for ai, vi in zip(spec.points.a, spec.v)]
        if spec.extended:
            row.append(1 if r == spec.k - 1 else 0)
        rows.append(row)
    return Matrix(f, rows, ncols=spec.length)


def encode(spec: GrsSpec, fx) -> list[int]:
    """Codeword of the message polynomial fx (deg < k)."""
    if poly_deg(fx) > spec.k - 1:
        raise GrsError(f"message degree {poly_deg(fx)} >= dimension {spec.k}")
    f = spec.field
    word = [f.mul(vi, poly_eval(f, fx, ai)) for ai, vi in zip(spec.points.a, spec.v)]
    if spec.extended:
        word.append(poly_coeff(fx, spec.k - 1))
    return word


# --- serialization (elements as their integer encodings) ---


def spec_to_dict(spec: GrsSpec) -> dict:
    return {
        "schema": 1,
        "field": spec.field.to_dict(),
        "a": list(spec.points.a),
        "v": list(spec.v),
        "k": spec.k,
        "extended": spec.extended,
    }


def spec_from_dict(d: dict) -> GrsSpec:
    field = Field.from_dict(d["field"])
    points = eval_set(field, d["a"])
    return grs(points, d["v"], int(d["k"]), bool(d.get("extended", False)))
