import pytest

from hullcodes.construct import (
    ConstructionError,
    choose_alpha,
    choose_b,
    make_seed,
    reduce_hull_egrs,
    reduce_hull_egrs_from_grs,
    reduce_hull_grs,
    seed_to_dict,
    ternary_codes,
)
from hullcodes.gf import Field
from hullcodes.grs import eval_set, grs
from hullcodes.hull import code_from_grs, hull_report
from hullcodes.oracle import OracleBudget, is_mds, min_distance

F13 = Field(13)


def _full_field_seed(q, m, extended=False):
    f = Field(*_pm(q))
    pts = eval_set(f, range(q))
    return make_seed(grs(pts, [1] * q, m, extended=extended))


def _pm(q):
    from hullcodes.gf import factor_prime_power

    return factor_prime_power(q)


def test_choose_alpha():
    assert choose_alpha(Field(5)) == 2
    assert choose_alpha(Field(2, 2)) == 2
    with pytest.raises(ConstructionError):
        choose_alpha(Field(3))
    with pytest.raises(ConstructionError):
        choose_alpha(Field(5), override=4)  # 4^2 = 16 = 1 mod 5
    assert choose_alpha(Field(5), override=3) == 3


def test_choose_b():
    f = Field(5)
    assert choose_b(f, eval_set(f, [1, 2])) == 0
    assert choose_b(f, eval_set(f, [0, 1, 2, 3])) == 4
    with pytest.raises(ConstructionError):
        choose_b(f, eval_set(f, range(5)))
    with pytest.raises(ConstructionError):
        choose_b(f, eval_set(f, [1, 2]), override=2)


def test_make_seed_refuses_uncertified():
    pts = eval_set(F13, [1, 2, 3, 4])
    with pytest.raises(ConstructionError):
        make_seed(grs(pts, [1, 1, 1, 1], 2))


def test_reduce_grs_identity_at_l_equals_k():
    seed = _full_field_seed(13, 6)
    spec = reduce_hull_grs(seed, 6, 6)
    assert spec.v == seed.spec.v  # s = 0: nothing scaled
    report = hull_report(code_from_grs(spec))
    assert report.hull_dim == 6
    assert report.classification == "almost-self-dual"


def test_reduce_grs_spec_examples():
    seed = _full_field_seed(13, 6)
    spec = reduce_hull_grs(seed, 4, 2)
    assert hull_report(code_from_grs(spec)).hull_dim == 2
    assert is_mds(code_from_grs(spec))
    spec = reduce_hull_grs(seed, 3, 0)
    report = hull_report(code_from_grs(spec))
    assert report.hull_dim == 0 and report.classification == "LCD"


def test_reduce_grs_alpha_invariance():
    seed = _full_field_seed(13, 6)
    for alpha in (2, 3, 5, 11):
        spec = reduce_hull_grs(seed, 5, 2, alpha=alpha)
        assert hull_report(code_from_grs(spec)).hull_dim == 2


def test_reduce_grs_range_checks():
    seed = _full_field_seed(13, 6)
    with pytest.raises(ConstructionError):
        reduce_hull_grs(seed, 7, 0)  # k > m
    with pytest.raises(ConstructionError):
        reduce_hull_grs(seed, 3, 4)  # l > k
    ext = _full_field_seed(13, 7, extended=True)
    with pytest.raises(ConstructionError):
        reduce_hull_grs(ext, 3, 1)  # wrong seed kind


def test_reduce_egrs_with_twist_polynomial():
    # n < q so the canonical (x - b)^(m-k) twist applies; the point set
    # was found by exhaustive search over GF(13) subsets with -u_i all
    # squares (none exist for n in {7, 9, 11})
    f = Field(13)
    pts = eval_set(f, [0, 1, 2, 3, 8])
    v = [f.sqrt(f.neg(u)) for u in pts.u]
    seed = make_seed(grs(pts, v, 3, extended=True))
    for k in range(1, 4):
        for l in range(0, k + 1):
            spec = reduce_hull_egrs(seed, k, l)
            report = hull_report(code_from_grs(spec))
            assert report.hull_dim == l, (k, l)
            assert is_mds(code_from_grs(spec), OracleBudget(max_minor_k=6))


def test_reduce_egrs_full_field_fallbacks():
    # n = q: no b exists; degree >= 2 twists use a root-free polynomial
    # and k = m - 1 reroutes through the unextended-scaling argument
    seed = _full_field_seed(13, 7, extended=True)
    for k in range(1, 8):
        for l in range(0, k + 1):
            if (k, l) == (6, 6):
                with pytest.raises(ConstructionError):
                    reduce_hull_egrs(seed, k, l)
                continue
            spec = reduce_hull_egrs(seed, k, l)
            assert hull_report(code_from_grs(spec)).hull_dim == l, (k, l)


def test_reduce_egrs_explicit_b_at_full_field_fails():
    seed = _full_field_seed(13, 7, extended=True)
    with pytest.raises(ConstructionError):
        reduce_hull_egrs(seed, 5, 2, b=3)  # 3 is an evaluation point


def test_extend_from_grs_seed():
    seed = _full_field_seed(13, 6)
    for k in range(1, 7):
        for l in range(0, k):
            spec = reduce_hull_egrs_from_grs(seed, k, l)
            assert spec.extended and spec.length == 14
            assert hull_report(code_from_grs(spec)).hull_dim == l, (k, l)
    with pytest.raises(ConstructionError):
        reduce_hull_egrs_from_grs(seed, 4, 4)  # l = k unreachable


def test_reduction_rejects_small_fields():
    f = Field(3)
    pts = eval_set(f, range(3))
    # GRS_1 with v = (1,1,1): u_i = -1 = 2, v_i^2 = 1 = 2*2 -> lambda = 2
    seed = make_seed(grs(pts, [1, 1, 1], 1))
    with pytest.raises(ConstructionError):
        reduce_hull_grs(seed, 1, 0)


def test_ternary_codes_golden():
    expected = {
        "n2k1": (2, 1, 0, 2),
        "n3k1": (3, 1, 1, 3),
        "n4k1": (4, 1, 0, 4),
        "n4k2": (4, 2, 2, 3),
    }
    for kind, (n, k, hull, d) in expected.items():
        nv = 2 if kind == "n2k1" else 3
        for v in ([1] * nv, [2] * nv, [1, 2] + [1] * (nv - 2)):
            code = ternary_codes(kind, v)
            assert (code.n, code.k) == (n, k)
            assert hull_report(code).hull_dim == hull
            assert min_distance(code) == d


def test_ternary_codes_validation():
    with pytest.raises(ConstructionError):
        ternary_codes("n9k9", [1, 1])
    with pytest.raises(ConstructionError):
        ternary_codes("n2k1", [1, 1, 1])
    with pytest.raises(ConstructionError):
        ternary_codes("n3k1", [1, 0, 1])


def test_seed_serialization():
    seed = _full_field_seed(13, 6)
    d = seed_to_dict(seed)
    assert d["schema"] == 1
    assert d["classification"] == "almost-self-dual"
    assert d["certificate"]["kind"] == "grs"
    assert d["certificate"]["lambda"] == [12]
