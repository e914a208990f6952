"""Seed families of self-orthogonal (extended) GRS codes over GF(r^2).

Four parametric families of evaluation sets whose u_i values are (up to
an explicit constant) quadratic residues, so that multipliers v_i with
the required v_i^2 exist:

* even_cosets  -- points alpha^c * beta^(mu_j) over t cosets of the
  group of m-th roots of unity, n = t*m even; variants (i)-(iv) give a
  self-dual seed, its extension, and two variants with the point 0
  appended.
* odd_cosets   -- same coset structure with n = t*m odd and all mu_j
  even; almost self-dual, extended self-dual, and 0-appended self-dual
  variants.
* additive     -- points alpha_k * beta + alpha_j over an e-dimensional
  GF(p)-subspace S of the subfield GF(r), n = p^(2e); almost self-dual
  and extended self-dual variants.
* twisted_pair -- points (alpha^i) and (omega * alpha^i) for a
  primitive t-th root alpha and a non-square omega, q = 3 mod 4, t odd;
  self-orthogonal up to dimension t - 1.

Quadratic-residue facts are never assumed: every family recomputes the
relevant products and checks squareness at runtime, so an invalid
parameter choice (or the documented exception case of even_cosets
(iii)/(iv)) surfaces as a FamilyError rather than a bad seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .construct import (
    SeedCode,
    make_seed,
    reduce_hull_egrs,
    reduce_hull_egrs_from_grs,
    reduce_hull_grs,
)
from .gf import Field, factor_prime_power
from .grs import GrsSpec, eval_set, grs

FAMILIES = ("even_cosets", "odd_cosets", "additive", "twisted_pair")

ROUTE_GRS = "grs"
ROUTE_EGRS = "egrs"
ROUTE_EGRS_FROM_GRS = "egrs_from_grs"


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    family: str
    variant: str = "i"
    r: int | None = None
    m: int | None = None
    t: int | None = None
    mu: tuple | None = None
    p: int | None = None
    s: int | None = None
    e: int | None = None
    q: int | None = None
    omega: int | None = None


@dataclass(frozen=True)
class FamilySeed:
    """A certified seed plus the reduction route and advertised ranges.

    The reachable codes are [code_length, k] with 1 <= k <= k_max and
    0 <= l <= k - l_offset, minus `excluded` (k, l) pairs.
    """

    params: FamilyParams
    seed: SeedCode
    route: str
    code_length: int
    k_max: int
    l_offset: int
    excluded: frozenset = dc_field(default_factory=frozenset)


def _sqrt_or_fail(field: Field, x: int, what: str) -> int:
    if x == 0 or not field.is_square(x):
        raise FamilyError(
            f"{what} = {x} is not a nonzero square in GF({field.q}); "
            "the quadratic-residue condition fails for these parameters"
        )
    return field.sqrt(x)


def _coset_field(r: int) -> tuple[Field, int]:
    """GF(r^2) for an odd prime power r, plus r itself."""
    p, mr = factor_prime_power(r)
    if p == 2:
        raise FamilyError("base field size r must be odd")
    return Field(p, 2 * mr), r


def _default_mu(field: Field, beta: int, m: int, t: int, even_only: bool) -> tuple:
    """Greedy smallest exponents 0 <= mu_1 < ... < mu_t giving distinct
    cosets of the m-th roots of unity."""
    chosen: list[int] = []
    step = 2 if even_only else 1
    r_plus_1 = _order_bound(field, beta)
    for cand in range(0, r_plus_1, step):
        if all(field.pow(field.pow(beta, cand - prev), m) != 1 for prev in chosen):
            chosen.append(cand)
            if len(chosen) == t:
                return tuple(chosen)
    raise FamilyError(
        f"could not find {t} distinct cosets (got {len(chosen)}); "
        "t exceeds the number of available coset representatives"
    )


def _order_bound(field: Field, beta: int) -> int:
    # beta has order r + 1; exponents live mod that order
    order = 1
    x = beta
    while x != 1:
        x = field.mul(x, beta)
        order += 1
    return order


def _validate_mu(field: Field, beta: int, m: int, mu, even_only: bool) -> tuple:
    mu = tuple(int(x) for x in mu)
    if list(mu) != sorted(set(mu)):
        raise FamilyError("coset exponents mu must be strictly increasing")
    if even_only and any(x % 2 for x in mu):
        raise FamilyError("coset exponents mu must all be even")
    for i, a in enumerate(mu):
        for b in mu[:i]:
            if field.pow(field.pow(beta, a - b), m) == 1:
                raise FamilyError(
                    f"exponents {b} and {a} give the same coset of the "
                    "m-th roots of unity"
                )
    return mu


def _coset_points(field: Field, alpha: int, beta: int, m: int, mu) -> list[int]:
    pts = []
    for mj in mu:
        bm = field.pow(beta, mj)
        for c in range(1, m + 1):
            pts.append(field.mul(field.pow(alpha, c), bm))
    return pts


def family_even_cosets(params: FamilyParams) -> FamilySeed:
    """Coset family with n = t*m even (four variants)."""
    if params.r is None or params.m is None or params.t is None:
        raise FamilyError("even_cosets needs r, m and t")
    field, r = _coset_field(params.r)
    q = field.q
    m, t = params.m, params.t
    variant = params.variant
    if variant not in ("i", "ii", "iii", "iv"):
        raise FamilyError(f"even_cosets has variants i-iv, not {variant!r}")
    if m < 1 or (q - 1) % m != 0:
        raise FamilyError(f"m = {m} must divide q - 1 = {q - 1}")
    tmax = (r + 1) // math.gcd(r + 1, m)
    if not 1 <= t <= tmax:
        raise FamilyError(f"t = {t} out of range 1..{tmax} for r = {r}, m = {m}")
    n = t * m
    if n % 2:
        raise FamilyError(f"n = t*m = {n} must be even")
    if variant in ("i", "ii") and ((q - 1) // m) % 2:
        raise FamilyError(f"(q-1)/m = {(q - 1) // m} must be even for variant {variant}")
    if variant in ("iii", "iv") and t % 2 == 0 and m % 2 == 0 and r % 4 == 1:
        raise FamilyError(
            "even_cosets (iii)/(iv) exclude t even, m even, r = 1 mod 4"
        )

    alpha = field.root_of_unity(m)
    beta = field.root_of_unity(r + 1)
    if params.mu is not None:
        mu = _validate_mu(field, beta, m, params.mu, even_only=False)
    else:
        mu = _default_mu(field, beta, m, t, even_only=False)
    if len(mu) != t:
        raise FamilyError(f"need exactly {t} coset exponents, got {len(mu)}")
    a = _coset_points(field, alpha, beta, m, mu)

    if variant in ("i", "ii"):
        points = eval_set(field, a)
        g = field.generator
        exponent = ((r + 1) // 2 * (t - 1) - m * sum(mu)) % (q - 1)
        lam_inv = field.inv(field.pow(g, exponent))
        v = tuple(
            _sqrt_or_fail(field, field.mul(lam_inv, ui), f"lambda^-1 * u_{i + 1}")
            for i, ui in enumerate(points.u)
        )
        seed = make_seed(grs(points, v, n // 2, extended=False))
        if variant == "i":
            return FamilySeed(params, seed, ROUTE_GRS, n, n // 2, 0)
        return FamilySeed(params, seed, ROUTE_EGRS_FROM_GRS, n + 1, (n - 1) // 2, 1)

    # variants iii/iv: append the point 0 and use the (n+1)-point u_i
    points = eval_set(field, a + [0])
    sign = (lambda x: x) if variant == "iii" else field.neg
    v = tuple(
        _sqrt_or_fail(field, sign(ui), f"(-)u_{i + 1}")
        for i, ui in enumerate(points.u)
    )
    if variant == "iii":
        seed = make_seed(grs(points, v, n // 2, extended=False))
        return FamilySeed(params, seed, ROUTE_GRS, n + 1, n // 2, 0)
    seed = make_seed(grs(points, v, (n + 2) // 2, extended=True))
    return _egrs_family_seed(params, seed, n + 2, (n + 2) // 2)


def family_odd_cosets(params: FamilyParams) -> FamilySeed:
    """Coset family with n = t*m odd and even exponents (three variants)."""
    if params.r is None or params.m is None or params.t is None:
        raise FamilyError("odd_cosets needs r, m and t")
    field, r = _coset_field(params.r)
    q = field.q
    m, t = params.m, params.t
    variant = params.variant
    if variant not in ("i", "ii", "iii"):
        raise FamilyError(f"odd_cosets has variants i-iii, not {variant!r}")
    if m < 1 or (q - 1) % m != 0:
        raise FamilyError(f"m = {m} must divide q - 1 = {q - 1}")
    tmax = (r + 1) // (2 * math.gcd(r + 1, m))
    if not 1 <= t <= tmax:
        raise FamilyError(f"t = {t} out of range 1..{tmax} for r = {r}, m = {m}")
    n = t * m
    if n % 2 == 0:
        raise FamilyError(f"n = t*m = {n} must be odd")

    alpha = field.root_of_unity(m)
    beta = field.root_of_unity(r + 1)
    if params.mu is not None:
        mu = _validate_mu(field, beta, m, params.mu, even_only=True)
    else:
        mu = _default_mu(field, beta, m, t, even_only=True)
    if len(mu) != t:
        raise FamilyError(f"need exactly {t} coset exponents, got {len(mu)}")
    a = _coset_points(field, alpha, beta, m, mu)

    if variant in ("i", "ii"):
        points = eval_set(field, a)
        sign = (lambda x: x) if variant == "i" else field.neg
        v = tuple(
            _sqrt_or_fail(field, sign(ui), f"(-)u_{i + 1}")
            for i, ui in enumerate(points.u)
        )
        if variant == "i":
            seed = make_seed(grs(points, v, (n - 1) // 2, extended=False))
            return FamilySeed(params, seed, ROUTE_GRS, n, (n - 1) // 2, 0)
        seed = make_seed(grs(points, v, (n + 1) // 2, extended=True))
        return _egrs_family_seed(params, seed, n + 1, (n + 1) // 2)

    # variant iii: append 0, self-dual non-extended seed on n+1 points
    points = eval_set(field, a + [0])
    v = tuple(
        _sqrt_or_fail(field, field.neg(ui), f"-u_{i + 1}")
        for i, ui in enumerate(points.u)
    )
    seed = make_seed(grs(points, v, (n + 1) // 2, extended=False))
    return FamilySeed(params, seed, ROUTE_EGRS_FROM_GRS, n + 2, (n + 1) // 2, 1)


def family_additive(params: FamilyParams) -> FamilySeed:
    """Additive family over GF(p^2s): points alpha_k*beta + alpha_j for
    alpha_k, alpha_j in an e-dimensional GF(p)-subspace of GF(p^s)."""
    if params.p is None or params.s is None or params.e is None:
        raise FamilyError("additive needs p, s and e")
    p, s, e = params.p, params.s, params.e
    if p == 2 or s < 1:
        raise FamilyError("additive family needs an odd prime p and s >= 1")
    if not 1 <= e <= s:
        raise FamilyError(f"subspace dimension e = {e} out of range 1..{s}")
    variant = params.variant
    if variant not in ("i", "ii"):
        raise FamilyError(f"additive has variants i-ii, not {variant!r}")
    field = Field(p, 2 * s)
    r = p**s
    n = p ** (2 * e)

    subfield = [x for x in range(field.q) if field.pow(x, r) == x]
    basis: list[int] = []
    span = {0}
    for x in subfield:
        if x not in span:
            basis.append(x)
            span = {
                field.add(y, field.mul(c, x)) for y in span for c in range(p)
            }
            if len(basis) == e:
                break
    if len(basis) < e:  # pragma: no cover
        raise FamilyError(f"could not build an {e}-dimensional subspace of GF({r})")
    S = sorted(span)
    beta = field.root_of_unity(r + 1)
    if field.pow(beta, r) == beta:  # beta must lie outside GF(r)
        raise FamilyError("root of unity of order r+1 unexpectedly lies in GF(r)")

    a = [field.add(field.mul(ak, beta), aj) for aj in S for ak in S]
    points = eval_set(field, a)
    sign = (lambda x: x) if variant == "i" else field.neg
    v = tuple(
        _sqrt_or_fail(field, sign(ui), f"(-)u_{i + 1}")
        for i, ui in enumerate(points.u)
    )
    if variant == "i":
        seed = make_seed(grs(points, v, (n - 1) // 2, extended=False))
        return FamilySeed(params, seed, ROUTE_GRS, n, (n - 1) // 2, 0)
    seed = make_seed(grs(points, v, (n + 1) // 2, extended=True))
    return _egrs_family_seed(params, seed, n + 1, (n + 1) // 2)


def family_twisted_pair(params: FamilyParams) -> FamilySeed:
    """Points (alpha^i, omega*alpha^i) for q = 3 mod 4 and odd t | q-1."""
    if params.q is None or params.t is None:
        raise FamilyError("twisted_pair needs q and t")
    pq, mq = factor_prime_power(params.q)
    field = Field(pq, mq)
    q, t = field.q, params.t
    if q % 4 != 3:
        raise FamilyError(f"twisted_pair needs q = 3 mod 4, got q = {q}")
    if t % 2 == 0 or t < 1 or (q - 1) % t != 0:
        raise FamilyError(f"t = {t} must be odd and divide q - 1 = {q - 1}")
    if params.variant != "i":
        raise FamilyError("twisted_pair has a single variant i")

    omega = params.omega
    if omega is None:
        omega = next(x for x in range(2, q) if not field.is_square(x))
    elif omega == 0 or field.is_square(omega):
        raise FamilyError(f"omega = {omega} must be a non-square")

    alpha = field.root_of_unity(t)
    a = [field.pow(alpha, i) for i in range(1, t + 1)]
    a += [field.mul(omega, x) for x in a]
    points = eval_set(field, a)

    # cross-check the closed form of u_i against the direct product
    tc = field.scalar(t)
    wt = field.pow(omega, t)
    base = field.mul(tc, field.sub(1, wt))
    if base == 0:  # t | q-1 rules this out, but never divide blindly
        raise FamilyError("degenerate parameters: t(1 - omega^t) = 0")
    for i in range(1, t + 1):
        prod = field.mul(base, field.pow(alpha, -i))
        if field.inv(prod) != points.u[i - 1]:
            raise FamilyError(f"closed-form u_{i} disagrees with the direct product")
        prod2 = field.mul(prod, field.neg(field.pow(omega, t - 1)))
        if field.inv(prod2) != points.u[t + i - 1]:
            raise FamilyError(
                f"closed-form u_{t + i} disagrees with the direct product"
            )

    # lambda(x) = t(1 - omega^t) x; v_i^2 = lambda(a_i) u_i
    v = tuple(
        _sqrt_or_fail(field, field.mul(field.mul(base, ai), ui), f"lambda(a_{i+1})u_{i+1}")
        for i, (ai, ui) in enumerate(zip(points.a, points.u))
    )
    seed = make_seed(grs(points, v, t - 1, extended=False), m=t - 1)
    return FamilySeed(params, seed, ROUTE_GRS, 2 * t, t - 1, 0)


def _egrs_family_seed(params: FamilyParams, seed: SeedCode, length: int, k_max: int) -> FamilySeed:
    # when the evaluation points exhaust the field, the (k, l) pair
    # (m-1, m-1) needs a root-free linear twist that does not exist
    excluded = frozenset()
    if seed.spec.n == seed.spec.field.q and seed.m >= 2:
        excluded = frozenset({(seed.m - 1, seed.m - 1)})
    return FamilySeed(params, seed, ROUTE_EGRS, length, k_max, 0, excluded)


_DISPATCH = {
    "even_cosets": family_even_cosets,
    "odd_cosets": family_odd_cosets,
    "additive": family_additive,
    "twisted_pair": family_twisted_pair,
}


def build_family(params: FamilyParams) -> FamilySeed:
    if params.family not in _DISPATCH:
        raise FamilyError(
            f"unknown family {params.family!r}; expected one of {FAMILIES}"
        )
    return _DISPATCH[params.family](params)


def family_grid(fs: FamilySeed):
    """All advertised (n, k, l) triples reachable from this seed."""
    for k in range(1, fs.k_max + 1):
        for l in range(0, k - fs.l_offset + 1):
            if (k, l) in fs.excluded:
                continue
            yield fs.code_length, k, l


def construct_from_family(fs: FamilySeed, k: int, l: int, alpha: int | None = None, b: int | None = None) -> GrsSpec:
    if not 1 <= k <= fs.k_max:
        raise FamilyError(f"k = {k} out of the advertised range 1..{fs.k_max}")
    if not 0 <= l <= k - fs.l_offset:
        raise FamilyError(
            f"l = {l} out of the advertised range 0..{k - fs.l_offset}"
        )
    if (k, l) in fs.excluded:
        raise FamilyError(
            f"(k, l) = ({k}, {l}) is excluded for this seed (no root-free "
            "linear twist exists when the points exhaust the field)"
        )
    if fs.route == ROUTE_GRS:
        return reduce_hull_grs(fs.seed, k, l, alpha=alpha)
    if fs.route == ROUTE_EGRS:
        return reduce_hull_egrs(fs.seed, k, l, alpha=alpha, b=b)
    return reduce_hull_egrs_from_grs(fs.seed, k, l, alpha=alpha)
