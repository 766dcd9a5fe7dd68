import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gencompat.catalog import catalog_get
from gencompat.exactla import Matrix
from gencompat.liealg import (
    DependentSpanError,
    JacobiError,
    SalamonParseError,
    abelian,
    bracket_eval,
    change_basis,
    cotangent_algebra,
    from_brackets,
    jacobi_check,
    parse_salamon,
    serialize_salamon,
    subalgebra_check,
)
from gencompat.sampling import random_invertible

SALAMON = {
    "g1": "(0,0,12,13,14+23,34+52)",
    "g2": "(0,0,12,13,14,34+52)",
    "g3": "(0,0,0,12,13,14+35)",
    "g4": "(0,0,0,12,23,14+35)",
    "g5": "(0,0,0,0,12,15+34)",
}


def vec(m, **coords):
    v = [Fraction(0)] * m
    for k, c in coords.items():
        v[int(k[1:]) - 1] = Fraction(c)
    return tuple(v)


def e(m, i):
    return tuple(Fraction(int(t == i - 1)) for t in range(m))


def test_heisenberg():
    L = parse_salamon("(0,0,12)")
    assert L.nonzero_brackets() == {(0, 1): (0, 0, 1)}


def test_g5_brackets():
    L = parse_salamon(SALAMON["g5"])
    assert L.nonzero_brackets() == {
        (0, 1): e(6, 5),
        (0, 4): e(6, 6),
        (2, 3): e(6, 6),
    }
    assert bracket_eval(L, e(6, 1), e(6, 5)) == e(6, 6)


def test_abelian_parse():
    assert parse_salamon("(0,0)").is_abelian()


def test_descending_pair_means_reversed_bracket():
    L = parse_salamon(SALAMON["g1"])
    assert L.c(5, 4, 1) == 1  # [e5, e2] = e6
    assert L.c(5, 1, 4) == -1
    assert serialize_salamon(L) == "(0,0,12,13,14+23,-25+34)"


def test_coefficients_and_signs():
    L = parse_salamon("(0,0,-2 12)")
    assert L.c(2, 0, 1) == -2


@pytest.mark.parametrize("name", sorted(SALAMON))
def test_serialize_roundtrip_on_catalog(name):
    L = parse_salamon(SALAMON[name])
    assert parse_salamon(serialize_salamon(L)) == L
    assert jacobi_check(L) == []


@pytest.mark.parametrize("bad", ["0,0,12", "(0,0,1x)", "(0,0,14)", "(0,0,11)", "(0,,12)"])
def test_malformed_salamon(bad):
    with pytest.raises(SalamonParseError):
        parse_salamon(bad)


def test_salamon_jacobi_failure_is_reported():
    # [e1,e2] = e2, [e1,e3] = e3, [e2,e3] = e1
    with pytest.raises(JacobiError) as exc:
        parse_salamon("(23,12,13)")
    assert exc.value.violations[0][:3] == (0, 1, 2)


def test_jacobi_violation_found():
    L = from_brackets(3, {(0, 1): {1: 1}, (0, 2): {2: 1}, (1, 2): {0: 1}}, check=False)
    bad = jacobi_check(L)
    assert [b[:3] for b in bad] == [(0, 1, 2)]
    # by hand: [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = 0 - e1 - e1
    assert bad[0][3] == (-2, 0, 0)
    with pytest.raises(JacobiError) as exc:
        from_brackets(3, {(0, 1): {1: 1}, (0, 2): {2: 1}, (1, 2): {0: 1}})
    assert "(1,2,3)" in str(exc.value)


def test_abelian_passes_jacobi():
    assert jacobi_check(abelian(4)) == []


def test_bracket_eval_examples():
    L = parse_salamon(SALAMON["g3"])
    x = (1, 2, 0, 0, 3, 0)
    assert not any(bracket_eval(L, x, x))
    E = catalog_get("ellipse").algebra
    assert bracket_eval(E, e(4, 3), e(4, 4)) == vec(4, e4=2)
    with pytest.raises(ValueError):
        bracket_eval(L, (1, 0), x)


def test_from_brackets_accumulates():
    L = from_brackets(3, {(0, 1): {2: 1}, (1, 0): {2: -1}})
    assert L.c(2, 0, 1) == 2


# cotangent algebra


def mixed(T, m, i, j):
    """[e_i, e_j*] (1-based) as dual coordinates."""
    return T.consts[i - 1][m + j - 1][m:]


def test_cotangent_of_abelian_is_abelian():
    T = cotangent_algebra(abelian(3))
    assert T.dim == 6 and T.is_abelian()


def test_cotangent_g5_printed_entry():
    T = cotangent_algebra(parse_salamon(SALAMON["g5"]))
    # [e6*, e3] = e4*
    assert T.consts[11][2] == e(12, 10)
    assert T.labels[11] == "e6*"


def test_cotangent_ellipse_printed_entries():
    T = cotangent_algebra(catalog_get("ellipse").algebra)
    assert mixed(T, 4, 1, 1) == e(4, 3)
    assert mixed(T, 4, 4, 4) == vec(4, e3=2)


def test_opposite_sign_convention_contradicts_printed_tables():
    # with [e_j, e_k] = -e_i the g5 entry [e6*, e3] = e4* flips sign
    L = parse_salamon(SALAMON["g5"])
    flipped = from_brackets(6, {(i, j): {k: -c for k, c in enumerate(v) if c}
                                for (i, j), v in L.nonzero_brackets().items()})
    T = cotangent_algebra(flipped)
    assert T.consts[11][2] == tuple(-x for x in e(12, 10))


ALGEBRAS = [parse_salamon(s) for s in SALAMON.values()] + [
    catalog_get("ellipse").algebra,
    from_brackets(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}),  # sl2: [h,e]=2e, [h,f]=-2f, [e,f]=h
    parse_salamon("(0,0,12)"),
]


def random_algebra(rng):
    L = rng.choice(ALGEBRAS)
    return change_basis(L, random_invertible(L.dim, rng, bound=1))


def test_change_basis_is_an_isomorphism():
    rng = random.Random(3)
    L = ALGEBRAS[0]
    P = random_invertible(6, rng, bound=1)
    L2 = change_basis(L, P)
    cols = P.columns()
    for a, b in product(range(6), repeat=2):
        lhs = P.apply(bracket_eval(L2, e(6, a + 1), e(6, b + 1)))
        assert lhs == bracket_eval(L, cols[a], cols[b])


@given(st.integers(0, 10_000))
def test_cotangent_is_always_a_lie_algebra(seed):
    L = random_algebra(random.Random(seed))
    assert jacobi_check(L) == []
    T = cotangent_algebra(L)
    assert jacobi_check(T) == []


@given(st.integers(0, 10_000))
def test_dual_is_an_abelian_ideal(seed):
    L = random_algebra(random.Random(seed))
    T = cotangent_algebra(L)
    m = L.dim
    for a in range(2 * m):
        for j in range(m, 2 * m):
            br = T.consts[a][j]
            assert not any(br[:m])
            if a >= m:
                assert not any(br)


def split_pairing(x, y, m):
    return sum(x[i] * y[m + i] + x[m + i] * y[i] for i in range(m))


@settings(max_examples=25)
@given(st.integers(0, 10_000))
def test_split_form_is_bi_invariant(seed):
    L = random_algebra(random.Random(seed))
    T = cotangent_algebra(L)
    m, n = L.dim, 2 * L.dim
    basis = [e(n, i + 1) for i in range(n)]
    for z, x, y in product(basis, repeat=3):
        lhs = split_pairing(bracket_eval(T, z, x), y, m) + split_pairing(x, bracket_eval(T, z, y), m)
        assert lhs == 0


# subalgebras


def test_whole_algebra_is_a_subalgebra():
    L = parse_salamon(SALAMON["g2"])
    assert subalgebra_check(L, [e(6, i) for i in range(1, 7)]).closed


def test_ellipse_r_eigenspace_is_a_subalgebra():
    T = cotangent_algebra(catalog_get("ellipse").algebra)
    assert subalgebra_check(T, [e(8, 1), e(8, 2)]).closed


def test_g5_span_not_closed_with_witness():
    L = parse_salamon(SALAMON["g5"])
    res = subalgebra_check(L, [e(6, 1), e(6, 2)])
    assert not res.closed
    assert res.pair == (0, 1)
    assert res.bracket == e(6, 5)
    assert res.residual == e(6, 5)


def test_dependent_span_rejected():
    L = parse_salamon(SALAMON["g5"])
    with pytest.raises(DependentSpanError):
        subalgebra_check(L, [e(6, 1), (2, 0, 0, 0, 0, 0)])


def test_change_basis_shape_check():
    with pytest.raises(ValueError):
        change_basis(ALGEBRAS[0], Matrix.identity(2))
