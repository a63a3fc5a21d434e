import json

import jsonschema
import pytest

from pascalsums import sums
from pascalsums.dsl import NonTerminatingSum, parse_identity
from pascalsums.identities import BUILTIN_IDENTITIES
from pascalsums.verifier import (
    FAILED,
    REPORT_SCHEMA,
    VERIFIED,
    Counterexample,
    IdentityArityError,
    Region,
    check_identity,
    check_pascal_recurrence,
    inductive_proof_check,
)

import oracles

THEOREM = BUILTIN_IDENTITIES["theorem"]
MUTATED = THEOREM.replace("+ eps(", "- eps(")


def test_region():
    region = Region(4)
    cells = list(region)
    assert len(cells) == len(region) == 15
    assert cells[:4] == [(0, 0), (1, 0), (1, 1), (2, 0)]
    assert cells == sorted(cells)
    with pytest.raises(ValueError):
        Region(-1)


def test_theorem_verified_to_50():
    report = check_identity(THEOREM, Region(50))
    assert report.verdict == VERIFIED
    assert report.cells_checked == 1326
    assert report.counterexamples == []


def test_sign_mutation_fails_at_first_cell():
    report = check_identity(MUTATED, Region(50))
    assert report.verdict == FAILED
    assert report.counterexamples[0] == Counterexample(1, 0, 1, 3)
    expected = [
        (n, k) for n in range(51) for k in range(n + 1)
        if oracles.vertical(n, k) != oracles.alternating(n, k) - oracles.eps(n - 2 * k)
    ]
    assert [(c.n, c.k) for c in report.counterexamples] == expected


def test_trivial_identity_cell_count():
    report = check_identity("C(n,k) == C(n,k)", Region(10))
    assert report.verified and report.cells_checked == 66


def test_completeness_cell_count():
    for n_max in (0, 1, 7, 30):
        assert check_identity("C(n,k) == C(n,k)", n_max).cells_checked == (n_max + 1) * (n_max + 2) // 2


def test_nonterminating_sum_reports_cell():
    with pytest.raises(NonTerminatingSum) as info:
        check_identity("sum j [ pow2(j) ] == 0", Region(3))
    assert info.value.cell == (0, 0)


def test_jobs_do_not_change_report():
    one = check_identity(MUTATED, Region(40), jobs=1).to_dict()
    many = check_identity(MUTATED, Region(40), jobs=3).to_dict()
    one.pop("elapsed_ms")
    many.pop("elapsed_ms")
    assert one == many


def test_recurrence_examples():
    assert check_pascal_recurrence(sums.vertical_partial_sum, Region(50), 1).verified
    assert check_pascal_recurrence(sums.theorem_rhs, Region(50), 1).verified
    report = check_pascal_recurrence(sums.vertical_partial_sum, Region(10), 0)
    assert report.verdict == FAILED
    assert report.counterexamples[0] == Counterexample(2, 1, 3, 2)
    # every failure sits on the line n = 2k
    assert all(c.n == 2 * c.k for c in report.counterexamples)


def test_plain_binomial_needs_no_correction():
    from pascalsums.core import binomial

    assert check_pascal_recurrence(binomial, Region(40), 0).verified
    assert not check_pascal_recurrence(binomial, Region(40), 1).verified


def test_recurrence_parallel_matches_serial():
    a = check_pascal_recurrence(sums.vertical_partial_sum, Region(30), 0, jobs=1).to_dict()
    b = check_pascal_recurrence(sums.vertical_partial_sum, Region(30), 0, jobs=4).to_dict()
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_induction_replay_theorem():
    report = inductive_proof_check(THEOREM, 50)
    assert report.verified
    assert set(report.stages) == {"base", "lhs_recurrence", "rhs_recurrence", "cross_check"}
    assert all(s.verified for s in report.stages.values())
    assert report.stages["base"].cells_checked == 101


def test_induction_base_case_value():
    # (4, 0): the alternating sum vanishes and the correction supplies the 1
    assert sums.alternating_diagonal_sum(4, 0) == 0
    assert sums.theorem_rhs(4, 0) == 1 == sums.vertical_partial_sum(4, 0)


def test_induction_fails_in_base_case():
    report = inductive_proof_check("C(n,k) == C(n,k) + 1", 5)
    assert report.verdict == FAILED
    assert not report.stages["base"].verified
    assert report.counterexamples[0][:2] == (0, 0)


def test_induction_requires_two_parameters():
    with pytest.raises(IdentityArityError):
        inductive_proof_check(BUILTIN_IDENTITIES["eq1"], 10)


@pytest.mark.parametrize(
    "text",
    [THEOREM, MUTATED, "C(n,k) == C(n,k) + 1", BUILTIN_IDENTITIES["eq2"],
     "sum j [ C(n-2*j, k-j) ] == sum j [ (-1)^j * C(n+1-j, k+1+j) ]",
     "sum j [ C(n-2*j, k-j) ] == sum j [ (-1)^j * C(n+1-j, k+1+j) ] + eps(n-2*k-1)"],
)
def test_soundness_link(text):
    proof = inductive_proof_check(text, 25)
    direct = check_identity(text, 25)
    if proof.verified:
        assert direct.verified


@pytest.mark.parametrize("residue", range(6))
def test_induction_detects_table_mutations(residue):
    table = list(sums.RESIDUE_CORRECTION)
    table[residue] = table[residue] + 1 if table[residue] < 1 else 0
    assert not inductive_proof_check(THEOREM, 20, correction_table=table).verified


def test_report_json_schema():
    for report in (check_identity(MUTATED, 8), check_identity(THEOREM, 8),
                   inductive_proof_check(MUTATED, 6)):
        payload = json.loads(report.to_json())
        jsonschema.validate(payload, REPORT_SCHEMA)
        assert list(payload) == ["identity", "n_max", "cells_checked", "verdict",
                                 "counterexamples", "elapsed_ms"]


def test_big_values_serialize_as_decimal_strings():
    report = check_identity("C(n,k) == C(n,k) + 1", Region(200))
    last = report.to_dict()["counterexamples"][-1]
    assert last["lhs"] == "1" and last["rhs"] == "2"
    big = check_identity("pow2(n) == 0", Region(120)).to_dict()["counterexamples"][-1]
    assert big["lhs"] == str(2**120)


def test_identity_objects_accepted():
    ident = parse_identity(THEOREM)
    assert check_identity(ident, 5).identity_text.startswith("sum j [ C(n-2*j, k-j) ]")
