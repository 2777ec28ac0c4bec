from fractions import Fraction

import pytest

from twistkit.hseries import HSeries
from twistkit.linsolve import solve_sparse
from twistkit.pbw import E, F, H, Element, casimir
from twistkit.tensor import (TensorElement, cartan_killing, classical_r,
                             coproduct, coproduct_leg, extend_back,
                             extend_front, flip, is_weight_zero, leg_embed,
                             outer, series_flip)
from twistkit.twist import (TwistAnsatz, TwistCandidate, build_candidate,
                            cocycle_defect, kernel_check, normalization_check,
                            reference_candidate, second_order_term,
                            solve_order, solve_with_escalation,
                            symmetrize_order, twist_residual_series,
                            twist_residuals, unitarity_defect)


@pytest.fixture(scope="module")
def one_candidate():
    return TwistCandidate.from_coefficients([TensorElement.one()])


@pytest.fixture(scope="module")
def order1_solution(one_candidate):
    return solve_order(1, one_candidate)


@pytest.fixture(scope="module")
def order2_solution():
    lower = TwistCandidate.from_coefficients([TensorElement.one(), classical_r()])
    return solve_order(2, lower)


def tensors_span(basis, target) -> bool:
    """Exact membership of target in the rational span of basis."""
    keys = sorted(set().union(*(set(b.terms) for b in basis), set(target.terms)))
    idx = {k: i for i, k in enumerate(keys)}
    rows = [dict() for _ in keys]
    for ci, b in enumerate(basis):
        for k, c in b.terms.items():
            rows[idx[k]][ci] = c
    rhs = [Fraction(0)] * len(keys)
    for k, c in target.terms.items():
        rhs[idx[k]] = c
    return solve_sparse(rows, rhs, len(basis)).status == "solved"


# ---------------------------------------------------------------------------
# residual verification


def test_reference_candidate_passes_residuals():
    assert twist_residuals(reference_candidate(2), 2).passed


def test_trivial_candidate_fails_at_order_one(one_candidate):
    series = twist_residual_series(one_candidate, 1)
    # residual F*Delta(m(J+)) - Delta_q~(J+)*F at order 1 with F = 1
    assert series["J+"].coeffs[1] == -(outer(E, H) - outer(H, E))
    assert not twist_residuals(one_candidate, 1).passed


def test_trivial_candidate_passes_at_order_zero(one_candidate):
    assert twist_residuals(one_candidate, 0).passed


def test_residuals_require_invertible_leading_term():
    bad = TwistCandidate.from_coefficients([leg_embed(casimir(), 1)])
    with pytest.raises(ValueError):
        twist_residuals(bad, 0)


# ---------------------------------------------------------------------------
# kernel and the side conditions


def test_kernel_examples():
    I = casimir()
    assert kernel_check(leg_embed(I, 1))
    assert kernel_check(cartan_killing())
    assert not kernel_check(outer(E, F))


def test_cartan_killing_is_coproduct_defect():
    I = casimir()
    assert cartan_killing() == coproduct(I) - leg_embed(I, 1) - leg_embed(I, 2)


def test_normalization_check():
    assert normalization_check(reference_candidate(1)).passed
    spoiled = TwistCandidate.from_coefficients(
        [TensorElement.one() + leg_embed(casimir(), 2)])
    report = normalization_check(spoiled)
    assert not report.passed
    by_name = {c.name: c for c in report.checks}
    # (eps (x) id) collapses 1 (x) I to I != 1; (id (x) eps) kills it
    assert not by_name["counit(leg1)"].passed
    assert by_name["counit(leg1)"].first_failure_order == 0
    assert by_name["counit(leg2)"].passed


def test_unitarity_defect_orders():
    cand = reference_candidate(2)
    defect = unitarity_defect(cand)
    assert defect.coeffs[0].is_zero()
    assert defect.coeffs[1].is_zero()          # sigma(r) + r = 0
    assert not defect.coeffs[2].is_zero()      # but not in general
    trivial = TwistCandidate.from_coefficients([TensorElement.one()])
    assert unitarity_defect(trivial).is_zero()


def test_cocycle_defect():
    trivial = TwistCandidate.from_coefficients([TensorElement.one()])
    assert cocycle_defect(trivial).is_zero()
    cand = reference_candidate(2)
    defect = cocycle_defect(cand)
    # first-order term: (r (x) 1 + (Delta(x)id)r) - (1 (x) r + (id(x)Delta)r),
    # which cancels identically; the obstruction enters at order 2
    r = classical_r()
    manual = (extend_back(r) + coproduct_leg(r, 1)
              - extend_front(r) - coproduct_leg(r, 2))
    assert defect.coeffs[1] == manual
    assert defect.coeffs[1].is_zero()
    assert not defect.coeffs[2].is_zero()


# ---------------------------------------------------------------------------
# the solver


def test_order1_minimal_choice_is_r(order1_solution):
    assert order1_solution.solved
    assert order1_solution.particular == classical_r()


def test_order1_homogeneous_space(order1_solution):
    hom = order1_solution.homogeneous
    assert hom, "expected kernel directions inside the ansatz"
    assert all(kernel_check(t) for t in hom)
    I = casimir()
    one = Element.one()
    assert tensors_span(hom, cartan_killing())
    for poly in (leg_embed(I, 1), leg_embed(I, 2),
                 leg_embed(I * I, 1), leg_embed(I, 1) * leg_embed(I, 2)):
        assert tensors_span(hom, poly)


def test_order1_solver_verifier_agreement(order1_solution):
    r = order1_solution.particular
    for extra in ([], [0], [1]):
        coeff = r
        for i in extra:
            if i < len(order1_solution.homogeneous):
                coeff = coeff + order1_solution.homogeneous[i]
        cand = TwistCandidate.from_coefficients([TensorElement.one(), coeff])
        assert twist_residuals(cand, 1).passed


def test_order2_solution_differs_from_reference_by_kernel(order2_solution):
    assert order2_solution.solved
    diff = order2_solution.particular - second_order_term()
    assert kernel_check(diff)
    # the difference lies in the reported homogeneous space itself
    assert tensors_span(order2_solution.homogeneous, diff)


def test_order2_assembles_to_valid_candidate(order2_solution):
    cand = TwistCandidate.from_coefficients(
        [TensorElement.one(), classical_r(), order2_solution.particular])
    assert twist_residuals(cand, 2).passed


def test_order2_homogeneous_all_kernel(order2_solution):
    assert all(kernel_check(t) for t in order2_solution.homogeneous)
    assert all(is_weight_zero(t) for t in order2_solution.homogeneous)


def test_solver_solutions_are_weight_zero(order1_solution, order2_solution):
    assert is_weight_zero(order1_solution.particular)
    assert is_weight_zero(order2_solution.particular)


def test_random_kernel_polynomials_lie_in_homogeneous_span(order2_solution):
    # independent kernel construction: polynomials in I1, I2, Delta(I)
    # within the cutoff must lie in the solver's nullspace span
    I = casimir()
    i1, i2, di = leg_embed(I, 1), leg_embed(I, 2), coproduct(I)
    candidates = [i1, i2, di, i1 * i2, di * i1, di * di]
    for t in candidates:
        assert kernel_check(t)
        assert tensors_span(order2_solution.homogeneous, t)


def test_infeasible_at_cutoff_reported(one_candidate):
    # power cutoff L=1 leaves only the l=0 slot, which cannot source the
    # order-1 equations
    sol = solve_order(1, one_candidate, TwistAnsatz(1, cutoff_l=1, cutoff_d=2))
    assert sol.status == "infeasible-at-cutoff"
    assert not sol.solved


def test_escalation_recovers_from_bad_cutoff(one_candidate):
    sol = solve_with_escalation(1, one_candidate, cutoff_l=1, cutoff_d=0)
    assert sol.solved
    assert sol.particular == classical_r()
    stuck = solve_with_escalation(1, one_candidate, cutoff_l=1, cutoff_d=0,
                                  max_escalations=0)
    assert stuck.status == "infeasible-at-cutoff"


def test_solution_json_schema(order1_solution):
    data = order1_solution.to_json()
    assert set(data) >= {"order", "cutoffL", "cutoffD", "particular",
                         "homogeneous_basis", "pivot_log"}
    assert data["order"] == 1
    assert data["cutoffL"] == 2
    assert data["cutoffD"] == 2


def test_lower_order_requirement(one_candidate):
    with pytest.raises(ValueError):
        solve_order(3, one_candidate.at_order(1))


# ---------------------------------------------------------------------------
# candidate assembly


def test_build_candidate_order2_matches_chain():
    cand, sols = build_candidate(2, symmetrize=False)
    assert [s.order for s in sols] == [1, 2]
    assert cand.coefficient(1) == classical_r()
    assert twist_residuals(cand, 2).passed


def test_symmetrize_keeps_twist_residuals():
    cand, _ = build_candidate(2, symmetrize=True)
    assert twist_residuals(cand, 2).passed
    from twistkit.rmatrix import quasitriangular_residual
    assert quasitriangular_residual(cand, 2).is_zero()


def test_symmetrize_order_correction_is_kernel():
    raw, _ = build_candidate(2, symmetrize=False)
    fixed, delta = symmetrize_order(raw, 2)
    assert kernel_check(delta) or delta.is_zero()
    assert twist_residuals(fixed, 2).passed


def test_candidate_json_round_trip():
    cand = reference_candidate(2)
    again = TwistCandidate.from_json(cand.to_json())
    assert again.series == cand.series


def test_candidate_padding_and_truncation():
    cand = reference_candidate(2)
    assert cand.at_order(4).order == 4
    assert cand.at_order(4).coefficient(3).is_zero()
    assert cand.at_order(1).series == reference_candidate(1).series


def test_reference_candidate_order_range():
    with pytest.raises(ValueError):
        reference_candidate(3)


def test_ansatz_validation():
    with pytest.raises(ValueError):
        TwistAnsatz(0)
    with pytest.raises(ValueError):
        TwistAnsatz(1, cutoff_l=0)
    ans = TwistAnsatz(1)
    assert ans.cutoff_l == 2 and ans.cutoff_d == 2
    inst = ans.instantiate([Fraction(1)] * len(ans))
    assert is_weight_zero(inst)
