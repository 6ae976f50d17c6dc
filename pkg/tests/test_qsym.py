"""The quasisymmetric kernel: exact values and algebraic laws."""

import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import compositions, qsym_elements, small_qsym_elements
from nestoqsym.errors import InputError, ParseError
from nestoqsym.qsym import (
    antipode,
    binomial,
    coarsenings,
    compositions_of,
    coproduct,
    descent_composition,
    descent_permutation,
    element,
    from_fundamental,
    fundamental,
    monomial,
    mul,
    one,
    parse,
    principal_specialization,
    refines,
    refinements,
    render,
    shift1,
    to_fundamental,
    to_json,
    vertex_count,
    zero,
)

M = monomial
L = fundamental

EX54 = element("M", {(1, 1, 1, 1): 24, (2, 1, 1): 6, (1, 2, 1): 4})
EX62 = element("L", {(1, 1, 1, 1): 14, (2, 1, 1): 6, (1, 2, 1): 4})


# ---------------------------------------------------------------------------
# compositions

def brute_refines(beta, alpha):
    """Try every way to cut beta into len(alpha) consecutive blocks."""
    from itertools import combinations

    k = len(alpha)
    if k == 0:
        return len(beta) == 0
    for cuts in combinations(range(1, len(beta)), k - 1):
        bounds = (0,) + cuts + (len(beta),)
        if all(
            sum(beta[bounds[i] : bounds[i + 1]]) == alpha[i] for i in range(k)
        ):
            return True
    return False


def test_refines_examples():
    assert refines((1, 1, 1, 1), (2, 1, 1))
    assert refines((2, 2), (2, 2))
    assert not refines((1, 2, 1), (2, 2))
    assert not brute_refines((1, 2, 1), (2, 2))


@given(compositions, compositions)
def test_refines_matches_bruteforce(beta, alpha):
    assert refines(beta, alpha) == brute_refines(beta, alpha)


def test_coarsenings_examples():
    assert coarsenings((1, 1)) == {(1, 1), (2,)}
    assert coarsenings((2,)) == {(2,)}
    assert coarsenings((1, 1, 1)) == {(1, 1, 1), (2, 1), (1, 2), (3,)}


@given(compositions)
def test_coarsenings_count_and_membership(alpha):
    cs = coarsenings(alpha)
    assert alpha in cs
    assert len(cs) == (1 << max(len(alpha) - 1, 0))
    for beta in cs:
        assert refines(alpha, beta)


def test_refinements_inverse_of_coarsening():
    for n in range(0, 6):
        for alpha in compositions_of(n):
            for beta in refinements(alpha):
                assert refines(beta, alpha)
            assert len(set(refinements(alpha))) == len(refinements(alpha))


# ---------------------------------------------------------------------------
# product: quasi-shuffle vs truncated power-series expansion

def poly(F, nvars):
    """Expand an M-basis element in nvars variables: exponent tuple -> coeff."""
    from itertools import combinations

    out = {}
    for alpha, c in F.terms:
        k = len(alpha)
        for support in combinations(range(nvars), k):
            expo = [0] * nvars
            for pos, a in zip(support, alpha):
                expo[pos] = a
            key = tuple(expo)
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def test_mul_examples():
    assert mul(M((1,)), M((1,))) == element("M", {(1, 1): 2, (2,): 1})
    assert mul(one(), EX54) == EX54
    assert mul(M((1, 1)), M((1, 1))) == element(
        "M", {(1, 1, 1, 1): 6, (2, 1, 1): 2, (1, 2, 1): 2, (1, 1, 2): 2, (2, 2): 1}
    )


@given(small_qsym_elements, small_qsym_elements)
def test_mul_matches_polynomial_expansion(F, G):
    # 6 variables resolve every composition of length <= 6 in the product
    assert poly(mul(F, G), 6) == poly_mul(poly(F, 6), poly(G, 6))


@given(small_qsym_elements, small_qsym_elements, small_qsym_elements)
def test_mul_associative_commutative(A, B, C):
    assert mul(mul(A, B), C) == mul(A, mul(B, C))
    assert mul(A, B) == mul(B, A)
    assert mul(one(), A) == A


def test_mul_requires_m_basis():
    with pytest.raises(InputError):
        mul(L((1,)), M((1,)))


# ---------------------------------------------------------------------------
# shift and coproduct

def test_shift1_examples():
    assert shift1(M((2, 1))) == M((2, 1, 1))
    assert shift1(one()) == M((1,))
    assert shift1(element("M", {(1, 1): 2, (2,): 1})) == element(
        "M", {(1, 1, 1): 2, (2, 1): 1}
    )


@given(qsym_elements)
def test_shift1_grading(F):
    shifted = shift1(F)
    before = sorted(sum(a) for a, _ in F.terms)
    after = sorted(sum(a) - 1 for a, _ in shifted.terms)
    assert before == after


def test_coproduct_examples():
    assert coproduct(M((2, 1))).as_dict() == {
        ((), (2, 1)): 1,
        ((2,), (1,)): 1,
        ((2, 1), ()): 1,
    }
    assert coproduct(one()).as_dict() == {((), ()): 1}
    assert coproduct(M((3,))).as_dict() == {((), (3,)): 1, ((3,), ()): 1}


def double_coproduct(F, left_first):
    out = {}
    for (a, b), c in coproduct(F).terms:
        inner = coproduct(monomial(a) if left_first else monomial(b))
        for (x, y), d in inner.terms:
            key = (x, y, b) if left_first else (a, x, y)
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


@given(small_qsym_elements)
def test_coassociativity(F):
    assert double_coproduct(F, True) == double_coproduct(F, False)


# ---------------------------------------------------------------------------
# basis change

def test_fundamental_examples():
    assert from_fundamental(L((2,))) == element("M", {(2,): 1, (1, 1): 1})
    assert to_fundamental(M((1, 1))) == L((1, 1))
    assert to_fundamental(EX54) == EX62


@given(qsym_elements)
def test_basis_round_trip(F):
    assert from_fundamental(to_fundamental(F)) == F


# ---------------------------------------------------------------------------
# descents and the antipode

def test_descent_composition_examples():
    assert descent_composition((2, 4, 1, 5, 3)) == (2, 2, 1)
    assert descent_composition(tuple(range(1, 8))) == (7,)
    assert descent_composition(tuple(range(7, 0, -1))) == (1,) * 7
    with pytest.raises(InputError):
        descent_composition((1, 1, 2))


def test_descent_permutation_has_prescribed_descents():
    for n in range(0, 7):
        for alpha in compositions_of(n):
            assert descent_composition(descent_permutation(alpha)) == alpha


def test_antipode_examples():
    assert antipode(L((1, 1, 1, 1))) == L((4,))
    assert antipode(L(())) == L(())
    # the axiom-correct image of the associahedron enumerator; the reversal
    # slip in the pinned reference value would put the 6 on L[1,3]
    assert antipode(EX62) == element("L", {(4,): 14, (3, 1): 6, (2, 2): 4})


def test_antipode_round_trips_basis():
    F = EX54
    assert antipode(F).basis == "M"
    assert antipode(to_fundamental(F)).basis == "L"
    assert from_fundamental(antipode(to_fundamental(F))) == antipode(F)


def test_antipode_independent_of_permutation_choice():
    from itertools import permutations

    for n in range(1, 6):
        buckets = {}
        for pi in permutations(range(1, n + 1)):
            buckets.setdefault(
                descent_composition(pi), set()
            ).add(descent_composition(tuple(reversed(pi))))
        assert all(len(images) == 1 for images in buckets.values())


def convolve_antipode(F):
    acc = zero("M")
    for (a, b), c in coproduct(F).terms:
        acc = acc + mul(antipode(monomial(a)), monomial(b)).scale(c)
    return acc


def test_antipode_axiom_through_degree_six():
    for n in range(0, 7):
        for alpha in compositions_of(n):
            expect = one() if alpha == () else zero("M")
            assert convolve_antipode(monomial(alpha)) == expect


@given(small_qsym_elements, small_qsym_elements)
def test_antipode_multiplicative(F, G):
    assert antipode(mul(F, G)) == mul(antipode(F), antipode(G))


def test_antipode_involution():
    for n in range(0, 7):
        for alpha in compositions_of(n):
            assert antipode(antipode(monomial(alpha))) == monomial(alpha)


# ---------------------------------------------------------------------------
# specialization

def test_binomial_negative_arguments():
    assert [binomial(-1, k) for k in range(5)] == [1, -1, 1, -1, 1]
    assert binomial(-2, 3) == -4
    assert binomial(3, 5) == 0


def test_principal_specialization_examples():
    assert principal_specialization(element("M", {(1, 1): 2}), 2) == 2
    assert principal_specialization(EX54, -1) == 14
    for n in range(1, 6):
        assert principal_specialization(M((n,)), 1) == 1
    with pytest.raises(InputError):
        principal_specialization(L((1,)), 1)


@given(small_qsym_elements, small_qsym_elements, st.sampled_from([-2, -1, 0, 1, 2, 3]))
def test_principal_specialization_multiplicative(F, G, m):
    lhs = principal_specialization(mul(F, G), m)
    rhs = principal_specialization(F, m) * principal_specialization(G, m)
    assert lhs == rhs


def test_vertex_count_examples():
    assert vertex_count(EX54, 4) == 14
    assert vertex_count(M((1,)), 1) == 1
    assert vertex_count(element("M", {(1, 1, 1): 6}), 3) == 6
    with pytest.raises(InputError):
        vertex_count(element("M", {(1,): 1, (2,): 1}), 2)
    with pytest.raises(InputError):
        vertex_count(element("M", {(2,): 1}), 2)  # chi(-1) = -1 < 0


# ---------------------------------------------------------------------------
# text and JSON round trips

def test_render_canonical_order():
    assert render(EX54) == "4*M[1,2,1] + 6*M[2,1,1] + 24*M[1,1,1,1]"
    assert render(zero()) == "0"
    assert render(element("M", {(): 1})) == "M[]"
    assert render(element("M", {(2,): -1, (1, 1): 3})) == "-M[2] + 3*M[1,1]"


def test_parse_accepts_text_and_json():
    s = "24*M[1,1,1,1] + 6*M[2,1,1] + 4*M[1,2,1]"
    assert parse(s) == EX54
    assert parse(to_json(EX54)) == EX54
    assert parse("M[]") == one()
    assert parse("-L[2] + 3*L[1,1]") == element("L", {(2,): -1, (1, 1): 3})
    assert parse("0") == zero()


@given(qsym_elements)
def test_parse_render_round_trip(F):
    assert parse(render(F)) == F
    assert parse(to_json(F)) == F
    assert render(parse(render(F))) == render(F)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse("3*M[1,2] & M[1]")
    assert err.value.position == 9  # the offending '&'
    with pytest.raises(ParseError):
        parse("3*M[1] + 2*L[1]")  # mixed bases
    with pytest.raises(ParseError):
        parse("not an element")
    with pytest.raises(InputError):
        parse('{"basis":"M","terms":[{"comp":[0],"coeff":1}]}')
