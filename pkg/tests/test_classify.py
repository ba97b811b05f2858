"""Verdict logic and family sampling."""

from fractions import Fraction

import pytest

from liepencil import corpus
from liepencil.classify import (
    VERDICT_SENTENCES,
    Verdict,
    classify,
    classify_family,
)
from liepencil.errors import InvalidAlgebra
from liepencil.model import substitute_params
from liepencil.parser import parse_text

from helpers import algebra_from_table


def test_verdict_sentences_pinned():
    assert VERDICT_SENTENCES[Verdict.JORDAN] == "G is of Jordan type."
    assert VERDICT_SENTENCES[Verdict.KRONECKER] == "G is of Kronecker type."
    assert VERDICT_SENTENCES[Verdict.MIXED] == "G is of mixed type."
    assert str(Verdict.MIXED) == "mixed"


def test_jordan_when_index_zero():
    # 2-dimensional nonabelian: [e1,e2] = e1, full rank, index 0
    rep = classify(algebra_from_table(2, {(1, 2): {1: 1}}))
    assert rep.verdict is Verdict.JORDAN
    assert rep.index == 0
    assert rep.sentence == "G is of Jordan type."


def test_kronecker_when_p0_constant():
    rep = classify(corpus.entry("example1").load())
    assert rep.verdict is Verdict.KRONECKER
    assert (rep.dim, rep.generic_rank, rep.index) == (4, 2, 2)
    assert rep.p0_coordinate_degree == 0


def test_mixed_when_p0_moves():
    rep = classify(corpus.entry("heisenberg3").load())
    assert rep.verdict is Verdict.MIXED
    assert str(rep.p0) == "x3"
    assert rep.p0_coordinate_degree == 1


def test_abelian_is_kronecker_with_full_index():
    for n in range(1, 6):
        rep = classify(algebra_from_table(n, {}))
        assert rep.verdict is Verdict.KRONECKER
        assert rep.index == n
        assert rep.generic_rank == 0
        assert str(rep.p0) == "1"


def test_exactly_one_verdict_branch():
    for name in corpus.names():
        entry = corpus.entry(name)
        alg = entry.load_variant() if not entry.jacobi_ok else entry.load()
        rep = classify(alg)
        jordan = rep.index == 0
        kronecker = rep.index > 0 and rep.p0_coordinate_degree == 0
        mixed = rep.index > 0 and rep.p0_coordinate_degree > 0
        assert [jordan, kronecker, mixed].count(True) == 1
        assert rep.verdict is (
            Verdict.JORDAN if jordan else Verdict.KRONECKER if kronecker else Verdict.MIXED
        )


def test_invalid_algebra_raises_with_report():
    bad = algebra_from_table(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    with pytest.raises(InvalidAlgebra) as err:
        classify(bad)
    assert err.value.report is not None
    assert err.value.report.violations


def test_report_to_dict():
    rep = classify(corpus.entry("heisenberg3").load(), name="h3")
    d = rep.to_dict()
    assert d["name"] == "h3"
    assert d["verdict"] == "mixed"
    assert d["p0"] == "x3"
    assert d["p_lambda"] == "a3*lambda + x3"
    assert d["sentence"] == "G is of mixed type."


def test_family_samples_agree_generically():
    alg = corpus.entry("L3a").load()
    fam = classify_family(alg, samples=3, seed=0)
    assert fam.symbolic.verdict is Verdict.KRONECKER
    assert len(fam.samples) == 3
    assert fam.all_agree
    assert fam.disagreements() == []
    for pt in fam.samples:
        assert set(pt.values) == {"a"}
        assert pt.report.verdict is Verdict.KRONECKER


def test_family_sampling_respects_exclusions():
    alg = parse_text("dim 3\nparam a != 0\n[e1,e2] = a*e3\n")
    fam = classify_family(alg, samples=8, seed=1)
    for pt in fam.samples:
        assert pt.values["a"] != 0


def test_family_degeneration_is_reported_not_fatal():
    """A family can specialize to a different type on a thin locus."""
    alg = corpus.entry("L12a").load()
    at_special = classify(substitute_params(alg, {"a": Fraction(-2)}))
    assert at_special.verdict is Verdict.MIXED
    assert str(at_special.p0) == "2*x2*x4 - x3^2"
    generic = classify_family(alg, samples=2, seed=3)
    assert generic.symbolic.verdict is Verdict.KRONECKER


def test_classify_rejects_unbound_use_of_samples_on_plain_algebra():
    # no parameters: classify_family still works, producing zero samples
    fam = classify_family(corpus.entry("heisenberg3").load(), samples=3, seed=0)
    assert fam.samples == ()
    assert fam.all_agree
