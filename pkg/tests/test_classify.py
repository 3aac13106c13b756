import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from strategies import alternating_forms, unimodular
from torusbundle.classify import (
    CONNECTED_COMPONENT,
    CRITERION_FAILS,
    NOT_APPLICABLE,
    ClassificationReport,
    ProblemInstance,
    build_iwasawa,
    classify,
    find_witness,
    instance_from_dict,
    load_instance,
    report_render,
)
from torusbundle.appell_humbert import check_riemann, decompose
from torusbundle.corpus import corpus_names, corpus_text, load_corpus_instance
from torusbundle.errors import DegenerateStructureError, DimensionError, MalformedFormError, ParseError
from torusbundle.lattice import AlternatingLatticeForm, change_gamma_basis, change_lambda_basis


def test_iwasawa_report(iwasawa):
    report = classify(iwasawa)
    assert report.riemann_ok and report.bracket_closure
    assert report.cohomology.parallelizable
    assert report.main_theorem_verdict == CRITERION_FAILS
    assert report.not_kaehler
    text = report_render(report, "text")
    assert "parallelizable: true" in text
    assert "tangent dim (complete family): 6" in text
    assert "condition 2" in text


def test_split_and_zero():
    assert classify(load_corpus_instance("split_form")).main_theorem_verdict == CONNECTED_COMPONENT
    zero = classify(load_corpus_instance("zero_form"))
    assert zero.main_theorem_verdict == NOT_APPLICABLE and not zero.not_kaehler
    assert classify(load_corpus_instance("heisenberg_m3")).main_theorem_verdict == NOT_APPLICABLE


def test_form_only_instance(iwasawa):
    report = classify(ProblemInstance(iwasawa.A))
    assert report.riemann_ok is None and report.cohomology is None
    assert report.main_theorem_verdict == CRITERION_FAILS


def test_violating_instance_reports_no_invariants():
    report = classify(load_corpus_instance("iwasawa_violating"))
    assert report.riemann_ok is False and report.cohomology is None
    assert any("Riemann" in w for w in report.warnings)


@pytest.mark.parametrize("name", corpus_names())
def test_render_deterministic_and_round_trip(name):
    inst = load_corpus_instance(name)
    first = report_render(classify(inst), "json")
    assert first == report_render(classify(load_corpus_instance(name)), "json")
    restored = ClassificationReport.from_dict(json.loads(first))
    assert restored == classify(inst)
    assert report_render(restored, "text") == report_render(classify(inst), "text")


def test_instance_round_trip():
    for name in corpus_names():
        inst = load_corpus_instance(name)
        again = instance_from_dict(json.loads(json.dumps(inst.to_dict())))
        assert again.A == inst.A and again.V.basis == inst.V.basis and again.U.basis == inst.U.basis


@pytest.mark.parametrize(
    "text, location",
    [
        ("{", "<input>:1:2"),
        ("[]", "$"),
        ('{"A": {"m": 2, "d": 1}}', "$.A"),
        ('{"A": {"m": "2", "d": 1, "components": []}}', "$.A.m"),
        ('{"A": {"m": 1, "d": 1, "components": [[[0, 1.5], [0, 0]], [[0, 0], [0, 0]]]}}',
         "$.A.components[0][0][1]"),
        ('{"A": {"m": 1, "d": 1, "components": [[[0, 1], [-1, 0]], [[0, 0], [0, 0]]]}, "V": {"basis": [[1], ["q"]]}}',
         "$.V.basis[1][0]"),
        ('{"A": {"m": 1, "d": 1, "components": [[[0, 1], [-1, 0]], [[0, 0], [0, 0]]]}, "V": {"basis": [["1", "2"], ["3"]]}}',
         "$.V.basis[1]"),
    ],
)
def test_parse_errors_carry_location(text, location):
    with pytest.raises(ParseError) as info:
        load_instance(text)
    assert info.value.location == location


def test_structured_errors():
    base = json.loads(corpus_text("iwasawa"))
    base["A"]["components"][0][0][0] = 1
    with pytest.raises(MalformedFormError):
        instance_from_dict(base)
    base = json.loads(corpus_text("iwasawa"))
    base["V"] = {"basis": [["1"], ["i"]]}
    with pytest.raises(DimensionError):
        instance_from_dict(base)
    base = json.loads(corpus_text("iwasawa"))
    base["U"] = {"basis": [["1"], ["2"]]}
    with pytest.raises(DegenerateStructureError):
        instance_from_dict(base)


def test_find_witness_for_corpus_forms():
    for name in ("iwasawa", "split_form", "block_form", "heisenberg_m3", "generic_d2"):
        form = load_corpus_instance(name).A
        V, U = find_witness(form, random.Random(7))
        assert check_riemann(decompose(form, V, U))


@settings(max_examples=30)
@given(alternating_forms(bound=2), unimodular(4), unimodular(2))
def test_verdict_invariant_under_basis_changes(form, g, h):
    verdict = classify(ProblemInstance(form)).main_theorem_verdict
    assert classify(ProblemInstance(change_gamma_basis(form, g))).main_theorem_verdict == verdict
    assert classify(ProblemInstance(change_lambda_basis(form, h))).main_theorem_verdict == verdict
