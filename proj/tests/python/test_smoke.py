"""Smoke tests for the python bindings; exact values only."""

from fractions import Fraction

import pytest

import hdform


def frac(s):
    return Fraction(s)


def test_cyclic_form_entries():
    c = hdform.cyclic_form(3, 3)
    assert c.n == 3 and c.d == 3
    assert c.form.entries() == {(1, 3, 3): "1", (2, 2, 3): "1"}
    assert c.psi == [["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]]
    assert c.grading == [["-4", "0", "0"], ["0", "-1", "0"], ["0", "0", "2"]]


def test_evaluate_and_transform():
    f = hdform.cyclic_form(3, 3).form
    assert hdform.evaluate(f, [[0, 1, 0], [0, 1, 0], [0, 0, 1]]) == "1"
    scaled = hdform.transform(f, [["16", "0", "0"], ["0", "2", "0"], ["0", "0", "1/4"]])
    assert scaled == f
    assert hdform.is_isometry(f, [[1, 2, -1], [0, 1, -1], [0, 0, 1]])


def test_polarize_round_trip():
    form = hdform.polarize_terms(2, 3, {(2, 1): "1"})
    assert form.entries() == {(1, 1, 2): "1/3"}
    assert hdform.associated_terms(form) == {(2, 1): "1"}


def test_structure_dimensions():
    f = hdform.cyclic_form(4, 3).form
    assert hdform.is_regular(f)
    center = hdform.center_basis(f)
    assert center["dim"] == 4 and center["maximal"]
    assert len(hdform.lie_basis(f)) == 3
    assert hdform.lie_derived_series(hdform.cyclic_form(3, 3).form) == [2, 1, 0]


def test_witt_report():
    report = hdform.witt_report(5, 3)
    assert report["all_pass"]
    assert hdform.grading_report(5, 3)["all_pass"]


def test_group_operations():
    assert hdform.group_mul(3, ["2", "1"], ["1", "1"]) == ["2", "5"]
    assert hdform.group_inv(3, ["2", "1"]) == ["1/2", "-1/8"]


def test_lift_round_trip():
    sigma = hdform.lift(3, 3, ["8", "0"])
    assert sigma == [["16", "0", "0"], ["0", "2", "0"], ["0", "0", "1/4"]]
    assert hdform.chi(sigma, 3, 3) == ["8", "0"]
    with pytest.raises(hdform.NoRationalLift):
        hdform.lift(3, 3, ["2", "0"])


def test_kernel():
    assert len(hdform.kernel_check(3, 3)) == 1
    assert len(hdform.kernel_check(3, 4)) == 2


def test_decompose_diagonal():
    result = hdform.decompose(hdform.diagonal_form([1, 1], 3))
    assert len(result["components"]) == 2
    assert not result["indecomposable_over_Q"]


def test_two_regular_witness():
    assert hdform.two_regular_witness(hdform.cyclic_form(3, 3).form) == ["1", "0", "0"]
    assert hdform.two_regular_witness(hdform.diagonal_form([1, 1], 3), budget=2) is None


def test_constructions():
    tf = hdform.trace_form_matrix_algebra(2, 3)
    assert hdform.evaluate(tf, [[1, 0, 0, 1]] * 3) == "2"
    nf = hdform.trace_form_number_field([-2, 0, 0, 1], [1, 0, 0], 3)
    assert hdform.center_basis(nf)["dim"] == 3


def test_json_round_trip():
    f = hdform.cyclic_form(3, 4).form
    again = hdform.SymmetricForm.from_json(f.to_json())
    assert again == f
    with pytest.raises(hdform.FormParseError):
        hdform.SymmetricForm.from_json('{"dim": 2, "degree": 3, "entries": [{"idx": [2, 1, 1], "value": "1"}]}')


def test_exact_fractions_survive():
    f = hdform.SymmetricForm(2, 3)
    f.set_entry((1, 1, 2), "22/7")
    value = hdform.evaluate(f, [[1, 0], [1, 0], [0, "1/3"]])
    assert frac(value) == frac("22/7") / 3
