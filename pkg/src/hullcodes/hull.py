"""Euclidean hulls of linear codes and self-orthogonality certificates.

The hull of a code C with generator G is C intersect C-dual.  Since G
has full row rank, a codeword x*G lies in the hull iff x*(G*G^T) = 0,
so dim Hull = k - rank(Gram).  An independent formula,
n - rank([G; H]) with H a dual generator, is recomputed on every report
as a cross-check.

Self-orthogonality of (extended) GRS codes is decided by a certificate
polynomial: the unique interpolant of the values v_i^2 / u_i.  The code
GRS_m(a, v) is self-orthogonal iff that interpolant has degree at most
n - 2m; GRS_m(a, v, oo) iff it has degree exactly n - 2m + 1 with
leading coefficient -1 (for 2m = n + 1 this degenerates to the constant
-1, i.e. v_i^2 = -u_i).  Degree inspection is a complete decision
procedure because the interpolant of degree <= n - 1 is unique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import Field
from .linalg import (
    Matrix,
    dual_generator,
    interpolate,
    nullspace,
    poly_coeff,
    poly_deg,
    poly_eval,
    rank,
    rref,
)
from .grs import EvaluationSet, GrsSpec

LCD = "LCD"
SELF_ORTHOGONAL = "self-orthogonal"
DUAL_CONTAINING = "dual-containing"
SELF_DUAL = "self-dual"
ALMOST_SELF_DUAL = "almost-self-dual"
GENERIC = "generic"


class HullError(ValueError):
    pass


@dataclass(frozen=True)
class LinearCode:
    field: Field
    generator: Matrix

    @property
    def n(self) -> int:
        return self.generator.ncols

    @property
    def k(self) -> int:
        return self.generator.nrows


def linear_code(field: Field, rows) -> LinearCode:
    G = Matrix(field, rows)
    if rank(G) != G.nrows or G.nrows < 1:
        raise HullError("generator matrix must be full row rank, k >= 1")
    return LinearCode(field, G)


def code_from_grs(spec: GrsSpec) -> LinearCode:
    from .grs import generator_matrix

    return LinearCode(spec.field, generator_matrix(spec))


@dataclass(frozen=True)
class HullReport:
    hull_dim: int
    hull_basis: Matrix
    gram_rank: int
    classification: str
    oracle_agrees: bool

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "hull_dim": self.hull_dim,
            "classification": self.classification,
            "oracle_agrees": self.oracle_agrees,
        }


def classify(n: int, k: int, hull_dim: int) -> str:
    if hull_dim == k:
        if 2 * k == n:
            return SELF_DUAL
        if n == 2 * k + 1:
            return ALMOST_SELF_DUAL
        return SELF_ORTHOGONAL
    if hull_dim == n - k:
        return DUAL_CONTAINING
    if hull_dim == 0:
        return LCD
    return GENERIC


def hull_report(code: LinearCode) -> HullReport:
    G = code.generator
    gram = G.matmul(G.transpose())
    gram_rank = rank(gram)
    hull_dim = code.k - gram_rank
    coeff = nullspace(gram)
    basis = coeff.matmul(G)
    stacked = G.vstack(dual_generator(G))
    oracle_dim = code.n - rank(stacked)
    return HullReport(
        hull_dim=hull_dim,
        hull_basis=basis,
        gram_rank=gram_rank,
        classification=classify(code.n, code.k, hull_dim),
        oracle_agrees=oracle_dim == hull_dim,
    )


# --- certificates (self-orthogonality of GRS / extended GRS) ---


@dataclass(frozen=True)
class Certificate:
    lam: tuple
    kind: str  # "grs" or "egrs"
    m: int

    def to_dict(self) -> dict:
        return {"lambda": list(self.lam), "kind": self.kind, "m": self.m}


def _interpolated_lambda(spec: GrsSpec) -> list[int]:
    f = spec.field
    pts = [
        (ai, f.div(f.mul(vi, vi), ui))
        for ai, vi, ui in zip(spec.points.a, spec.v, spec.points.u)
    ]
    return interpolate(f, pts)


def certify_grs_self_orthogonal(spec: GrsSpec, m: int) -> Certificate | None:
    """Certificate that GRS_m(a, v) is self-orthogonal, or None.

    The certificate polynomial lam satisfies lam(a_i) u_i = v_i^2 for
    every i and deg(lam) <= n - 2m.
    """
    n = spec.n
    if not 1 <= m <= n // 2:
        raise HullError(f"seed dimension {m} out of range 1..{n // 2}")
    lam = _interpolated_lambda(spec)
    if poly_deg(lam) <= n - 2 * m:
        return Certificate(tuple(lam), "grs", m)
    return None


def certify_egrs_self_orthogonal(spec: GrsSpec, m: int) -> Certificate | None:
    """Certificate that GRS_m(a, v, oo) is self-orthogonal, or None.

    Requires deg(lam) = n - 2m + 1 with leading coefficient -1; at the
    boundary 2m = n + 1 this means lam is the constant -1.
    """
    n = spec.n
    if not 1 <= m <= (n + 1) // 2:
        raise HullError(f"seed dimension {m} out of range 1..{(n + 1) // 2}")
    lam = _interpolated_lambda(spec)
    top = n - 2 * m + 1
    if poly_deg(lam) == top and lam[top] == spec.field.neg(1):
        return Certificate(tuple(lam), "egrs", m)
    return None


def check_certificate(cert: Certificate, points: EvaluationSet, v) -> bool:
    """Re-validate a certificate against an evaluation set and multipliers."""
    f = points.field
    lam = list(cert.lam)
    n = points.n
    if cert.kind == "grs":
        if poly_deg(lam) > n - 2 * cert.m:
            return False
    elif cert.kind == "egrs":
        top = n - 2 * cert.m + 1
        if poly_deg(lam) != top or poly_coeff(lam, top) != f.neg(1):
            return False
    else:
        return False
    for ai, vi, ui in zip(points.a, v, points.u):
        if f.mul(poly_eval(f, lam, ai), ui) != f.mul(vi, vi):
            return False
    return True


# --- hull membership witnesses ---


def hull_membership(spec: GrsSpec, fx) -> list[int] | None:
    """Witness polynomial g for membership of encode(fx) in the hull.

    Non-extended: g with deg(g) <= n-k-1 and v_i^2 f(a_i) = u_i g(a_i).
    Extended: deg(g) <= n-k, the same value conditions, and the
    coefficient condition f_{k-1} = -g_{n-k}.  Returns None when the
    codeword is not in the hull.
    """
    if poly_deg(fx) > spec.k - 1:
        raise HullError(f"message degree {poly_deg(fx)} >= dimension {spec.k}")
    f = spec.field
    n, k = spec.n, spec.k
    pts = [
        (ai, f.div(f.mul(f.mul(vi, vi), poly_eval(f, fx, ai)), ui))
        for ai, vi, ui in zip(spec.points.a, spec.v, spec.points.u)
    ]
    g = interpolate(f, pts)
    if not spec.extended:
        return g if poly_deg(g) <= n - k - 1 else None
    if poly_deg(g) <= n - k and poly_coeff(fx, k - 1) == f.neg(poly_coeff(g, n - k)):
        return g
    return None


def verify_power_sums(points: EvaluationSet) -> bool:
    """sum_i a_i^m u_i is 0 for 0 <= m <= n-2 and 1 for m = n-1."""
    f = points.field
    n = points.n
    for m in range(n):
        acc = 0
        for ai, ui in zip(points.a, points.u):
            acc = f.add(acc, f.mul(f.pow(ai, m), ui))
        if acc != (1 if m == n - 1 else 0):
            return False
    return True
