import pytest

from ssmthom.polyring import Ring, SubstitutionError, Variable
from ssmthom.symfun import class_ring, elem_sym
from ssmthom.thomclasses import (
    ClassPoly,
    DegreeRangeError,
    GradingError,
    SingularityId,
    ssm_a0_component,
    ssm_a02_component,
    ssm_a1_component,
    ssm_truncated,
    thom_evaluate,
)


def cp(text, ell, parse):
    return ClassPoly(ell, parse(text, class_ring(ell)))


def test_a02_examples(parse):
    assert ssm_a02_component(2, 0) == cp("s_0 - c_2", 2, parse)
    assert ssm_a02_component(2, 1) == cp("c_1*c_2 + 2*c_3 - s_1", 2, parse)
    assert ssm_a02_component(3, 2) == cp(
        "-c_1^2*c_3 - 4*c_1*c_4 + c_2*c_3 - 6*c_5 + s_11 - s_2", 3, parse)


def test_a1_examples(parse):
    assert ssm_a1_component(2, 0) == 0
    for ell in range(2, 7):
        assert ssm_a1_component(ell, 1) == cp(f"c_{ell + 1}", ell, parse)
    assert ssm_a1_component(3, 2) == cp("-c_1*c_4 - 3*c_5", 3, parse)


def test_a0_examples(parse):
    for ell in range(1, 6):
        assert ssm_a0_component(ell, 0) == cp(f"c_{ell} - s_0", ell, parse)
    for ell in range(2, 6):
        assert ssm_a0_component(ell, 1) == cp(
            f"-c_1*c_{ell} - {ell + 1}*c_{ell + 1} + s_1", ell, parse)
    assert ssm_a0_component(3, 2) == cp(
        "c_1^2*c_3 + 5*c_1*c_4 - c_2*c_3 + 9*c_5 - s_11 + s_2", 3, parse)


def test_truncated_examples(parse):
    assert ssm_truncated(SingularityId.A02, 2, 1) == cp("s_0 - c_2 + c_1*c_2 + 2*c_3 - s_1", 2, parse)
    assert ssm_truncated(SingularityId.A0, 2, 1) == cp("1 + c_2 - s_0 - c_1*c_2 - 3*c_3 + s_1", 2, parse)
    assert ssm_truncated(SingularityId.A1, 2, 1) == cp("c_3", 2, parse)


@pytest.mark.parametrize("gen", [ssm_a02_component, ssm_a1_component, ssm_a0_component])
def test_range_is_enforced(gen):
    with pytest.raises(DegreeRangeError):
        gen(2, 2)
    with pytest.raises(DegreeRangeError):
        gen(3, -1)


@pytest.mark.parametrize("ell", range(1, 7))
def test_partition_of_unity_and_homogeneity(ell):
    for N in range(ell):
        comps = [g(ell, N) for g in (ssm_a0_component, ssm_a02_component, ssm_a1_component)]
        assert sum(comps, ClassPoly.zero(ell)) == 0
        for comp in comps:
            assert comp.poly.is_homogeneous(ell + N)
    total = sum((ssm_truncated(s, ell, ell - 1) for s in SingularityId), ClassPoly.zero(ell))
    assert total == 1


@pytest.mark.parametrize("ell", range(1, 7))
def test_leading_term_is_double_point_formula(ell, parse):
    assert ssm_a02_component(ell, 0) == cp(f"s_0 - c_{ell}", ell, parse)


def test_unsigned_binomial_form_is_not_the_a0_part():
    # the same binomial c-sum without the (-1)^N sign; differs already at N=1
    from ssmthom.symfun import binom, s_det
    from ssmthom.thomclasses import c, s_det_ln

    ell, N = 4, 1
    ring = class_ring(ell)
    literal = ring.zero()
    for k in range(N + 1):
        literal = literal + s_det(N - k, ring) * c(ell, ell + k) * (
            binom(ell + N - 1, k) + binom(ell + N - 2, k - 1))
    literal = literal + s_det_ln(ell, N) * (-1) ** (N + 1)
    assert ClassPoly(ell, literal) != ssm_a0_component(ell, N)
    assert ClassPoly(ell, literal) == -ssm_a0_component(ell, N) + 2 * ring.gen("s_1")


def _alpha_ring(ell):
    return Ring([Variable(f"a_{i}") for i in range(1, ell + 1)])


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_evaluate_at_a0_prototype(ell, parse):
    T = _alpha_ring(ell)
    xs = T.gens()
    c_bind = {i: elem_sym(i, xs) for i in range(1, 2 * ell + 1)}
    expr = cp(f"s_0 - c_{ell}", ell, parse)
    assert thom_evaluate(expr, c_bind, {(): elem_sym(ell, xs)}) == 0
    assert thom_evaluate(cp(f"c_{ell + 1}", ell, parse), c_bind, {}) == 0


def test_evaluate_projective_leading_term(parse):
    from ssmthom.projective import HD, chern_binding_symbolic, landweber_binding_symbolic, sigma

    ell = 2
    got = thom_evaluate(cp("s_0 - c_2", 2, parse),
                        {2: chern_binding_symbolic(ell, 2)},
                        {(): landweber_binding_symbolic(ell, ())})
    h, d = HD.gens()
    for dv in range(1, 6):
        assert got.substitute({"d": dv}) == (dv ** 5 - sigma(2, dv)) * h ** 2


def test_evaluate_errors(parse):
    T = _alpha_ring(2)
    a1, a2 = T.gens()
    expr = cp("s_0 - c_2", 2, parse)
    with pytest.raises(SubstitutionError):
        thom_evaluate(expr, {2: a1 * a2}, {})
    with pytest.raises(GradingError):
        thom_evaluate(expr, {2: a1}, {(): a1 * a2})


def test_classpoly_rejects_mixed_ell():
    with pytest.raises(Exception):
        ssm_a02_component(2, 0) + ssm_a02_component(3, 0)
