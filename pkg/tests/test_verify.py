from __future__ import annotations

import json
from fractions import Fraction

import pytest

from complement_energy import verify
from complement_energy.families import family
from complement_energy.graph import canonical_code, decode_graph6
from complement_energy.verify import (
    _Energies,
    certify_greater,
    population,
    recheck_certificate,
    tree_record,
    verify_remark_2,
    verify_theorem_1,
    verify_theorem_2,
    verify_theorem_4,
    verify_transform_theorems,
)


def _code(g6):
    return canonical_code(decode_graph6(g6)).hex()


def _famcode(name, n, p=None):
    return canonical_code(family(name, n, p)).hex()


def _strip_time(doc):
    doc = dict(doc)
    doc.pop("elapsed_seconds")
    return doc


@pytest.mark.parametrize("n", [5, 6, 7])
def test_theorem_1_small(n):
    rep = verify_theorem_1(n)
    assert rep.status == "pass" and rep.passed
    assert rep.witnesses["max"]["code"] == _famcode("path", n)
    assert rep.witnesses["second"]["code"] == _famcode("t_n_2", n)
    assert all(recheck_certificate(c) for c in rep.certificates)


def test_theorem_1_degenerate_and_invalid():
    rep = verify_theorem_1(4)
    assert rep.status == "degenerate" and rep.population == 2 and rep.notes
    with pytest.raises(ValueError):
        verify_theorem_1(3)


@pytest.mark.parametrize("n, p, witness", [(8, 1, ("star", 8, None)), (8, 4, ("t_n_p", 8, 4))])
def test_theorem_2_examples(n, p, witness):
    rep = verify_theorem_2(n, p)
    assert rep.passed
    assert rep.witnesses["min"]["code"] == _famcode(*witness)


def test_theorem_2_perfect_matching_population_at_6():
    rep = verify_theorem_2(6, 3)
    assert rep.passed and rep.population == 2
    assert rep.witnesses["min"]["code"] == _famcode("t_n_p", 6, 3)


def test_theorem_2_precondition():
    with pytest.raises(ValueError, match="p exceeds"):
        verify_theorem_2(10, 7)


def test_theorem_4_examples():
    six = verify_theorem_4(6)
    assert six.passed and six.population == 2
    assert any("isomorphic" in note for note in six.notes)
    for n in (8, 10):
        rep = verify_theorem_4(n)
        assert rep.passed and not rep.notes
        assert rep.witnesses["second"]["code"] == _famcode("t_n_2_1", n)
        assert rep.witnesses["min"]["code"] == _famcode("t_n_p", n, n // 2)
        assert rep.witnesses["max"]["code"] == _famcode("path", n)
    with pytest.raises(ValueError):
        verify_theorem_4(7)


@pytest.mark.parametrize("n, count", [(5, 1), (6, 2), (8, 3)])
def test_remark_2(n, count):
    rep = verify_remark_2(n)
    assert rep.passed and len(rep.certificates) == count
    assert all(c["kind"] == "quasi" for c in rep.certificates)


def test_cross_theorem_consistency():
    assert verify_theorem_2(9, 1).witnesses["min"]["code"] == _famcode("star", 9)
    assert verify_theorem_1(9).witnesses["max"]["code"] == _famcode("path", 9)


def test_transform_sweep_is_deterministic():
    a = verify_transform_theorems(15, 42)
    b = verify_transform_theorems(15, 42)
    assert a.passed
    assert _strip_time(a.to_json()) == _strip_time(b.to_json())
    assert a.extra["seed"] == 42


def test_transform_sweep_rejects_zero_samples():
    with pytest.raises(ValueError):
        verify_transform_theorems(0, 1)


def test_parallel_population_matches_serial():
    assert population(11, jobs=2) == population(11)


def test_reports_are_deterministic_and_serializable():
    a, b = verify_theorem_1(8).to_json(), verify_theorem_1(8).to_json()
    assert json.dumps(_strip_time(a)) == json.dumps(_strip_time(b))


# an incomparable pair of order 7: the complement counts cross, energies differ by about 1.5e-4
LOW, HIGH = "Fi_GO", "FkE?G"


def test_numeric_tier_certifies_incomparable_pair():
    lo, hi = tree_record(decode_graph6(LOW)), tree_record(decode_graph6(HIGH))
    cert = certify_greater(hi, lo, _Energies())
    assert cert["kind"] == "numeric"
    assert cert["gap"] > 1e-6 and cert["error_bound"] < 1e-9
    assert recheck_certificate(cert)


def test_reversed_incomparable_pair_is_a_surviving_violation():
    lo, hi = tree_record(decode_graph6(LOW)), tree_record(decode_graph6(HIGH))
    cert = certify_greater(lo, hi, _Energies())
    assert cert["kind"] == "violation"
    assert not recheck_certificate(cert)


def test_exact_reversal_is_a_violation():
    path, star = tree_record(family("path", 7)), tree_record(family("star", 7))
    assert certify_greater(star, path, _Energies())["kind"] == "violation"


def test_undecidable_gap_is_unresolved(monkeypatch):
    lo, hi = tree_record(decode_graph6(LOW)), tree_record(decode_graph6(HIGH))
    monkeypatch.setattr(verify, "energy_interval", lambda v, tol: (Fraction(12), Fraction(13)))
    energies = _Energies()
    energies._cache[lo.graph6] = energies._cache[hi.graph6] = verify.EnergyValue(12.5, 1e-12)
    cert = certify_greater(hi, lo, energies)
    assert cert["kind"] == "unresolved"
    rep = verify.VerificationReport("thm1", 7)
    rep.claim("x", rep.add_certificates("x", [cert]))
    assert rep.status == "unresolved" and not rep.passed and not rep.counterexamples


def test_tampered_certificate_fails_recheck():
    rep = verify_theorem_1(6)
    cert = dict(rep.certificates[0])
    cert["index"] = cert["index"] + 1
    assert not recheck_certificate(cert)
