import json

import pytest

from debell.verify import (
    EQUAL,
    SKIPPED,
    UNEQUAL,
    GridSpec,
    UnknownClaimError,
    VerificationReport,
    claim_registry,
    emit_report,
    fixture_summary,
    report_from_json,
    run_claims,
)

ALL_CLAIM_IDS = [
    "T5",
    "T33",
    "T3-n",
    "T3-nr",
    "OMEGA-ID",
    "EQ40-literal",
    "EQ40-power",
    "EX-B1x2",
    "EX-B2x4",
    "EX-B2x6",
    "W4-explicit",
    "W5-explicit",
    "ASYMP-r0",
]

SMALL_GRID = GridSpec(
    alphas=(0, 1),
    betas=(1, 2),
    gammas=(0, 2),
    xs=(1,),
    lambdas=(0, 1, 2),
    rs=(0, 1),
    max_n=4,
    ex_lambdas=(0, 1, 2),
    ex_betas=(1,),
    w_max_n=6,
    deltas=(50,),
    asymp_n=(1, 2),
)


class TestRegistry:
    def test_contains_every_claim(self):
        assert sorted(claim_registry()) == sorted(ALL_CLAIM_IDS)

    def test_unknown_id_rejected_before_evaluation(self):
        with pytest.raises(UnknownClaimError):
            run_claims(["T5", "NOT-A-CLAIM"], SMALL_GRID)

    def test_descriptions_present(self):
        for claim in claim_registry().values():
            assert claim.description


class TestOutcomes:
    def test_t5_all_equal(self):
        report = run_claims(["T5"], SMALL_GRID)
        counts = report.counts()["T5"]
        assert counts[UNEQUAL] == 0 and counts[EQUAL] > 0

    def test_eq40_power_equal_with_skips_at_lambda_zero(self):
        report = run_claims(["EQ40-power"], SMALL_GRID)
        counts = report.counts()["EQ40-power"]
        assert counts[UNEQUAL] == 0
        assert counts[SKIPPED] > 0  # the lam = 0 rows
        assert report.all_required_equal

    def test_omega_id_required_only_at_r_zero(self):
        report = run_claims(["OMEGA-ID"], SMALL_GRID)
        counts = report.counts()["OMEGA-ID"]
        assert counts[UNEQUAL] > 0  # r >= 1 rows differ
        assert report.all_required_equal  # but none of them at r = 0
        for row in report.rows:
            if row.status == UNEQUAL:
                assert row.point_dict()["r"] != "0"

    def test_recorded_claims_do_not_fail_the_run(self):
        report = run_claims(["EX-B1x2", "T3-nr"], SMALL_GRID)
        assert any(r.status == UNEQUAL for r in report.rows)
        assert report.all_required_equal


class TestDeterminism:
    def test_two_runs_identical_bytes(self):
        ids = ["T5", "EX-B1x2", "W4-explicit"]
        first = emit_report(run_claims(ids, SMALL_GRID), "json")
        second = emit_report(run_claims(ids, SMALL_GRID), "json")
        assert first == second

    def test_rows_sorted_by_claim_then_point(self):
        report = run_claims(["T5", "EX-B1x2"], SMALL_GRID)
        claims = [row.claim for row in report.rows]
        assert claims == sorted(claims)


class TestSerialization:
    def test_json_round_trip(self):
        report = run_claims(["T5"], SMALL_GRID)
        data = emit_report(report, "json")
        assert report_from_json(data) == report

    def test_empty_report_every_format(self):
        empty = VerificationReport(())
        assert json.loads(emit_report(empty, "json"))["rows"] == []
        assert emit_report(empty, "csv").decode().splitlines() == [
            "claim,point,lhs,rhs,status,note"
        ]
        assert emit_report(empty, "markdown").decode().startswith("# Verification report")

    def test_markdown_has_one_table_per_claim(self):
        report = run_claims(["T5", "EX-B1x2"], SMALL_GRID)
        text = emit_report(report, "markdown").decode()
        assert text.count("## T5") == 1
        assert text.count("## EX-B1x2") == 1

    def test_csv_shape(self):
        report = run_claims(["T5"], SMALL_GRID)
        lines = emit_report(report, "csv").decode().splitlines()
        assert lines[0] == "claim,point,lhs,rhs,status,note"
        assert len(lines) == len(report.rows) + 1

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            emit_report(VerificationReport(()), "xml")

    def test_fixture_summary_shape(self):
        report = run_claims(["T5"], SMALL_GRID)
        summary = fixture_summary(report)
        info = summary["T5"]
        assert info["rows"] == info["equal"] + info["unequal"] + info["skipped"]
        assert len(info["sha256"]) == 64
