from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedsums.arith import REPRESENT_MAX, WidthError
from mixedsums.forms import (
    Certificate,
    MixedForm,
    evaluate,
    rep_eps,
    represent,
    verify,
)

from bruteforce import term_value

# the five forms, restated independently of the library
FORM_TERMS = {
    MixedForm.X2_3Y2_T: ((1, "sq"), (3, "sq"), (1, "tri")),
    MixedForm.X2_3T_T: ((1, "sq"), (3, "tri"), (1, "tri")),
    MixedForm.X2_6T_T: ((1, "sq"), (6, "tri"), (1, "tri")),
    MixedForm.THREE_X2_2T_T: ((3, "sq"), (2, "tri"), (1, "tri")),
    MixedForm.FOUR_X2_2T_T: ((4, "sq"), (2, "tri"), (1, "tri")),
}


def naive_evaluate(form: MixedForm, x: int, y: int, z: int) -> int:
    return sum(term_value(c, k, i) for (c, k), i in zip(FORM_TERMS[form], (x, y, z)))


def test_evaluate_matches_naive_formulas():
    for form in MixedForm:
        for triple in [(0, 0, 0), (1, -2, 3), (-4, 5, -6), (7, 0, -1)]:
            assert evaluate(form, *triple) == naive_evaluate(form, *triple)


def test_evaluate_rejects_non_form():
    with pytest.raises(TypeError):
        evaluate("x2+3y2+t", 0, 0, 0)


# hand-traced through the construction before the library existed
FROZEN_CERTIFICATES = [
    (MixedForm.FOUR_X2_2T_T, 0, (0, 0, 0)),
    (MixedForm.FOUR_X2_2T_T, 1, (0, 0, -2)),
    (MixedForm.FOUR_X2_2T_T, 2, (0, -2, 0)),
    (MixedForm.X2_3T_T, 0, (0, 0, 0)),
    (MixedForm.X2_3T_T, 1, (-1, -1, -1)),
    (MixedForm.X2_3Y2_T, 0, (0, 0, 0)),
    (MixedForm.THREE_X2_2T_T, 1, (0, 0, -2)),
    (MixedForm.X2_6T_T, 1, (0, 0, 1)),
]


@pytest.mark.parametrize("form,n,witness", FROZEN_CERTIFICATES)
def test_frozen_certificates(form, n, witness):
    cert = represent(form, n)
    assert (cert.x, cert.y, cert.z) == witness
    assert cert.n == n and cert.form is form
    assert naive_evaluate(form, *witness) == n


@pytest.mark.parametrize("form", list(MixedForm))
def test_small_range_all_verify(form):
    for n in range(0, 600):
        cert = represent(form, n)
        assert verify(cert)
        assert naive_evaluate(form, cert.x, cert.y, cert.z) == n


@settings(max_examples=200)
@given(st.sampled_from(list(MixedForm)), st.integers(min_value=0, max_value=10**7))
def test_represent_verifies_everywhere(form, n):
    cert = represent(form, n)
    assert verify(cert)
    assert naive_evaluate(form, cert.x, cert.y, cert.z) == n


def test_represent_is_deterministic():
    for form in MixedForm:
        a = represent(form, 91)
        b = represent(form, 91)
        assert a == b


def test_request_bounds():
    with pytest.raises(ValueError):
        represent(MixedForm.X2_3Y2_T, -1)
    for form in MixedForm:
        with pytest.raises(WidthError):
            represent(form, REPRESENT_MAX + 1)
        # the ceiling itself is admissible on every construction path
        cert = represent(form, REPRESENT_MAX)
        assert verify(cert)
        assert naive_evaluate(form, cert.x, cert.y, cert.z) == REPRESENT_MAX


def test_rep_eps_rejects_bad_branch():
    with pytest.raises(ValueError):
        rep_eps(5, 2)


def test_certificate_json_golden():
    cert = represent(MixedForm.FOUR_X2_2T_T, 2)
    assert cert.to_json() == '{"form":"4x2+2t+t","n":2,"x":0,"y":-2,"z":0}'


@settings(max_examples=100)
@given(st.sampled_from(list(MixedForm)), st.integers(min_value=0, max_value=10**6))
def test_certificate_json_round_trip(form, n):
    cert = represent(form, n)
    again = Certificate.from_json(cert.to_json())
    assert again == cert


@pytest.mark.parametrize(
    "text",
    [
        '{"form":"4x2+2t+t","n":2,"x":0,"y":-2}',  # missing field
        '{"form":"4x2+2t+t","n":2,"x":0,"y":-2,"z":0,"w":1}',  # extra field
        '{"form":"nope","n":2,"x":0,"y":-2,"z":0}',  # unknown form
        '{"form":"4x2+2t+t","n":2.0,"x":0,"y":-2,"z":0}',  # non-integer
        '{"form":"4x2+2t+t","n":true,"x":0,"y":-2,"z":0}',  # bool is not an int here
        '[1,2,3]',  # not an object
    ],
)
def test_certificate_json_rejects_malformed(text):
    with pytest.raises(ValueError):
        Certificate.from_json(text)


def test_certificate_json_field_order():
    cert = represent(MixedForm.X2_6T_T, 44)
    keys = list(json.loads(cert.to_json()).keys())
    assert keys == ["form", "n", "x", "y", "z"]
