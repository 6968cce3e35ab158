from fractions import Fraction

import pytest

import rdelab

ONES = [1, 1, 1, 1, 1]


def test_iterate_all_ones():
    traj = rdelab.iterate(ONES, 1, 1, 5)
    assert traj.values[5:] == [Fraction(1, 2), 1, Fraction(2, 3), 1, Fraction(3, 8)]
    assert traj.x(5) == Fraction(3, 8)
    assert traj.singularity is None
    assert rdelab.Trajectory.first_index == -4


def test_singularity_and_inputs():
    traj = rdelab.iterate(["1", 1, Fraction(2, 2), 1, -1], "1", 1, 10)
    assert traj.singularity == (2, "zero_bracket")
    assert traj.last_index == 1
    with pytest.raises(rdelab.ParseError):
        rdelab.iterate(ONES, "1/0", 1, 3)


def test_closed_forms_match_iteration():
    ic = [Fraction(3, 2), -2, Fraction(5, 7), 4, Fraction(-1, 3)]
    a, b = [2, Fraction(-1, 3), 5], [1, 7]
    traj = rdelab.iterate(ic, a, b, 23)
    assert rdelab.forbidden_check(ic, a, b, 5) == []
    for j in range(4):
        values = rdelab.residue_class(ic, a, b, j, 5 if j == 0 else 6)
        for n, value in enumerate(values):
            assert value == traj.x(rdelab.residue_index(n, j))
            assert rdelab.x_general(ic, a, b, n, j) == value


def test_special_branches():
    assert rdelab.x_two_periodic([1, 1, 1, 1, 2], 1, -1, 1, 1, 1, 0) == 12
    traj = rdelab.iterate([1, 2, 1, 1, 1], -1, 1, 20)
    for n in range(1, 6):
        assert rdelab.x_const_coeff([1, 2, 1, 1, 1], -1, 1, n, 0) == traj.x(4 * n) == 1
    with pytest.raises(rdelab.ConditionViolated):
        rdelab.x_const_coeff([1, 1, 1, 1, -1], 1, 1, 2, 1)
    violations = rdelab.forbidden_check([1, 1, 1, 1, -1], 1, 1, 2)
    assert any(v["description"] == "(2j-1)*b*x_{-3}x_{-2}x_{-1}x_0 = -1 at j=1" for v in violations)


def test_invariants():
    traj = rdelab.iterate(ONES, 1, 1, 5)
    assert rdelab.v_sequence(traj)[:5] == [1, 1, 2, 2, 3]
    assert rdelab.v_closed_form(1, 1, 1, 1, 2, 0) == 3
    assert [rdelab.weight(m) for m in range(-4, 4)] == [1, -1, 0, 0, 1, -1, 0, 0]


def test_symmetry():
    assert rdelab.constraint_check("1,-1,1,-1")
    assert not rdelab.constraint_check([1, 1, 1, 1])
    assert rdelab.scale_ics(ONES, [1, -1, 1, -1], 2) == [2, Fraction(1, 2), 2, Fraction(1, 2), 2]
    report = rdelab.verify_group_invariance(ONES, 1, 1, "1,-1,1,-1", 2, 40)
    assert report["status"] == "invariant" and report["accepted"]
    assert len(report["residuals"]) == 45
    control = rdelab.verify_group_invariance(ONES, 1, 1, [1, 1, 1, 1], 2, 40)
    assert control["status"] == "NotASymmetry" and control["first_failure"] == 1
    with pytest.raises(rdelab.DegenerateScale):
        rdelab.scale_ics(ONES, [1, -1, 1, -1], 0)


def test_coefficient_spec():
    spec = rdelab.CoefficientSpec.explicit_list(["1/2", 3])
    assert spec.kind == "explicit" and spec.values == [Fraction(1, 2), 3] and spec.period is None
    assert rdelab.CoefficientSpec.periodic([1, 2]).at(3) == 2
    with pytest.raises(rdelab.IndexBeyondExplicitData):
        rdelab.iterate(ONES, 1, spec, 5)
