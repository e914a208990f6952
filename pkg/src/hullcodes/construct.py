"""Hull-dimension reductions from self-orthogonal seed codes.

Given a self-orthogonal (extended) GRS seed of dimension m, these
routines output an MDS code of any dimension k <= m with any prescribed
hull dimension l <= k, by scaling the first s = k - l multipliers with
a fixed alpha (alpha != 0, alpha^2 != 1) and, in the extended case,
twisting all multipliers by pi(a_i) for a monic degree-(m-k) polynomial
pi with no roots among the evaluation points.

The canonical pi is (x - b)^(m-k) for the smallest unused field element
b.  When the evaluation points exhaust the field no such b exists; any
monic root-free pi of the right degree works in the argument, so we
fall back to a product of irreducible quadratics/cubics when m-k >= 2.
For m - k = 1 no root-free monic linear polynomial exists, and the
target l = k is then genuinely unreachable (see reduce_extended); the
remaining targets l <= k-1 go through the pi-free route below.

A self-orthogonal *non-extended* seed also yields extended codes of
length n+1: with s = k - 1 - l scaled multipliers the infinity
coordinate forces the top message coefficient to vanish on the hull,
which costs exactly one dimension (hence l <= k - 1).  This is the
route behind length-(n+1) codes built from even-length self-dual GRS
seeds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import Field
from .grs import EvaluationSet, GrsSpec, grs
from .hull import (
    Certificate,
    LinearCode,
    certify_egrs_self_orthogonal,
    certify_grs_self_orthogonal,
    check_certificate,
    linear_code,
)
from .linalg import poly_eval, poly_mul, poly_pow


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class SeedCode:
    spec: GrsSpec
    certificate: Certificate
    m: int


def make_seed(spec: GrsSpec, m: int | None = None) -> SeedCode:
    """Certify a (possibly extended) GRS code as self-orthogonal.

    m defaults to spec.k; the certificate is found by interpolation and
    the construction refuses codes that fail the degree criterion.
    """
    if m is None:
        m = spec.k
    if spec.extended:
        cert = certify_egrs_self_orthogonal(spec, m)
    else:
        cert = certify_grs_self_orthogonal(spec, m)
    if cert is None:
        kind = "extended GRS" if spec.extended else "GRS"
        raise ConstructionError(
            f"{kind} code of dimension {m} on {spec.n} points is not "
            "self-orthogonal (no certificate polynomial)"
        )
    return SeedCode(spec, cert, m)


def _revalidate(seed: SeedCode) -> None:
    if not check_certificate(seed.certificate, seed.spec.points, seed.spec.v):
        raise ConstructionError("seed certificate fails re-validation")


def choose_alpha(field: Field, override: int | None = None) -> int:
    """Smallest-encoding alpha with alpha != 0 and alpha^2 != 1."""
    if override is not None:
        if override == 0 or field.mul(override, override) == 1:
            raise ConstructionError(f"alpha={override} has alpha^2 = 1 or alpha = 0")
        return override
    for x in range(2, field.q):
        if field.mul(x, x) != 1:
            return x
    raise ConstructionError(f"no valid alpha in GF({field.q}) (need q > 3)")


def choose_b(field: Field, points: EvaluationSet, override: int | None = None) -> int:
    """Smallest-encoding field element not among the evaluation points."""
    used = set(points.a)
    if override is not None:
        if override in used:
            raise ConstructionError(f"b={override} is an evaluation point")
        return override
    for x in range(field.q):
        if x not in used:
            return x
    raise ConstructionError(
        "evaluation points exhaust the field (construction needs n < q)"
    )


def _rootless_monic(field: Field, avoid, degree: int) -> list[int]:
    """Monic polynomial of the given degree with no roots among `avoid`,
    built from the smallest irreducible quadratic and cubic."""
    if degree == 0:
        return [1]
    pieces = []
    rem = degree
    quad = _smallest_irreducible(field, 2)
    if rem % 2 == 1:
        pieces.append(_smallest_irreducible(field, 3))
        rem -= 3
    pieces.extend([quad] * (rem // 2))
    pi = [1]
    for piece in pieces:
        pi = poly_mul(field, pi, piece)
    if any(poly_eval(field, pi, a) == 0 for a in avoid):  # pragma: no cover
        raise ConstructionError("failed to build a root-free twist polynomial")
    return pi


def _smallest_irreducible(field: Field, degree: int) -> list[int]:
    # smallest by (c_{d-1}, ..., c_0) in encoding order; irreducible over
    # F_q is overkill -- root-free is all we need, and for degree 2 and 3
    # the two notions coincide.
    import itertools

    for high_first in itertools.product(range(field.q), repeat=degree):
        poly = list(reversed(high_first)) + [1]
        if all(poly_eval(field, poly, x) != 0 for x in range(field.q)):
            return poly
    raise ConstructionError(  # pragma: no cover
        f"no root-free monic polynomial of degree {degree} over GF({field.q})"
    )


def _scaled_multipliers(field, v, s, alpha, pi=None, points=None):
    out = []
    for i, vi in enumerate(v):
        w = field.mul(alpha, vi) if i < s else vi
        if pi is not None:
            w = field.mul(w, poly_eval(field, pi, points.a[i]))
        out.append(w)
    return tuple(out)


def _check_ranges(seed: SeedCode, k: int, l: int) -> None:
    if seed.spec.field.q <= 3:
        raise ConstructionError("reduction requires q > 3")
    if not 0 <= l <= k <= seed.m:
        raise ConstructionError(
            f"need 0 <= l <= k <= m, got l={l}, k={k}, m={seed.m}"
        )
    if k < 1:
        raise ConstructionError("target dimension k must be >= 1")


def reduce_hull_grs(seed: SeedCode, k: int, l: int, alpha: int | None = None) -> GrsSpec:
    """[n, k] MDS code with hull dimension exactly l from a non-extended
    self-orthogonal seed of dimension m >= k."""
    if seed.spec.extended:
        raise ConstructionError("reduce_hull_grs needs a non-extended seed")
    _check_ranges(seed, k, l)
    _revalidate(seed)
    field = seed.spec.field
    s = k - l
    a = choose_alpha(field, alpha)
    v = _scaled_multipliers(field, seed.spec.v, s, a)
    return grs(seed.spec.points, v, k, extended=False)


def reduce_hull_egrs(
    seed: SeedCode,
    k: int,
    l: int,
    alpha: int | None = None,
    b: int | None = None,
) -> GrsSpec:
    """[n+1, k] MDS code with hull dimension exactly l from an extended
    self-orthogonal seed of dimension m >= k."""
    if not seed.spec.extended:
        raise ConstructionError("reduce_hull_egrs needs an extended seed")
    _check_ranges(seed, k, l)
    _revalidate(seed)
    field = seed.spec.field
    points = seed.spec.points
    m = seed.m
    s = k - l
    if k == m:
        pi = [1]
    else:
        try:
            bb = choose_b(field, points, b)
            pi = poly_pow(field, [field.neg(bb), 1], m - k)
        except ConstructionError:
            if b is not None:
                raise
            # points exhaust the field: no (x-b) twist available
            if m - k >= 2:
                pi = _rootless_monic(field, points.a, m - k)
            elif l < k:
                # pi-free route: the infinity coordinate absorbs one
                # hull dimension, so retarget s accordingly
                pi = [1]
                s = k - 1 - l
            else:
                raise ConstructionError(
                    "hull dimension l = k is unreachable for k = m - 1 when "
                    "the evaluation points exhaust the field (n = q)"
                )
    a = choose_alpha(field, alpha)
    v = _scaled_multipliers(field, seed.spec.v, s, a, pi, points)
    return grs(points, v, k, extended=True)


def reduce_hull_egrs_from_grs(
    seed: SeedCode, k: int, l: int, alpha: int | None = None
) -> GrsSpec:
    """[n+1, k] MDS code with hull dimension exactly l <= k-1 from a
    *non-extended* self-orthogonal seed of dimension m >= k."""
    if seed.spec.extended:
        raise ConstructionError("reduce_hull_egrs_from_grs needs a non-extended seed")
    _check_ranges(seed, k, l)
    if l > k - 1:
        raise ConstructionError(
            "extending a non-extended seed reaches only 0 <= l <= k-1"
        )
    _revalidate(seed)
    field = seed.spec.field
    s = k - 1 - l
    a = choose_alpha(field, alpha)
    v = _scaled_multipliers(field, seed.spec.v, s, a)
    return grs(seed.spec.points, v, k, extended=True)


# --- the explicit ternary codes (q = 3 is excluded by the reductions) ---

TERNARY_KINDS = ("n2k1", "n3k1", "n4k1", "n4k2")
_TERNARY_SIZES = {"n2k1": 2, "n3k1": 3, "n4k1": 3, "n4k2": 3}


def ternary_codes(kind: str, v) -> LinearCode:
    """The four explicit 3-ary MDS codes: [2,1,2], [3,1,3], [4,1,4] and
    [4,2,3], with hull dimensions 0, 1, 0 and 2."""
    field = Field(3)
    v = tuple(int(x) for x in v)
    if kind not in TERNARY_KINDS:
        raise ConstructionError(f"unknown ternary code kind {kind!r}")
    if len(v) != _TERNARY_SIZES[kind]:
        raise ConstructionError(
            f"{kind} takes {_TERNARY_SIZES[kind]} multipliers, got {len(v)}"
        )
    if any(x not in (1, 2) for x in v):
        raise ConstructionError("multipliers must be nonzero elements of GF(3)")
    if kind == "n2k1":
        rows = [[v[0], v[1]]]
    elif kind == "n3k1":
        rows = [[v[0], v[1], v[2]]]
    elif kind == "n4k1":
        rows = [[v[0], v[1], v[2], 1]]
    else:
        rows = [
            [v[0], v[1], v[2], 0],
            [0, v[1], field.neg(v[2]), 1],
        ]
    return linear_code(field, rows)


# --- serialization ---


def seed_to_dict(seed: SeedCode) -> dict:
    from .grs import spec_to_dict
    from .hull import code_from_grs, hull_report

    report = hull_report(code_from_grs(seed.spec))
    d = spec_to_dict(seed.spec)
    d["certificate"] = seed.certificate.to_dict()
    d["classification"] = report.classification
    return d
