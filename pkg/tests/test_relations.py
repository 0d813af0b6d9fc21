"""Claim verifiers: pass paths, forced-failure paths, determinism."""

import math
import random

import pytest

import seqlab.relations as relations
from seqlab.generators import SeqSpec, fcsr_word, legendre_period, IDENTITY
from seqlab.relations import (
    CLAIMS,
    conjecture_scan,
    cor1_suite,
    grid_points,
    lemma1_suite,
    lemma3_scan,
    msequence_suite,
    reports_to_csv,
    reports_to_json,
    reproduce_table,
    run_all,
    scan_to_csv,
    scan_to_json,
    thm1_suite,
    thm2_suite,
    thm4_suite,
    thm5_suite,
    thm6_suite,
    verify_cor1,
    verify_lemma1,
    verify_lowerbound,
    verify_msequence,
    verify_thm1,
    verify_thm2,
    verify_thm4,
    verify_thm5,
    verify_thm6,
)
from seqlab.seqcore import PeriodicSequence, Profile, Word, least_period


def random_word(rng, length):
    return Word(bytes(rng.getrandbits(1) for _ in range(length)))


def test_verify_thm1_passes():
    rng = random.Random(50)
    for w in [random_word(rng, 64) for _ in range(10)]:
        rep = verify_thm1(w)
        assert rep.ok(), rep
        assert rep.evidence["tight_slack"] >= 0


def test_verify_thm1_fail_path(monkeypatch):
    # Inflate the reported nonlinear order so the bound must break.
    w = Word.from01("0110100110010110")
    monkeypatch.setattr(
        relations.maxorder, "moc_profile", lambda _: Profile(tuple(range(10, 26)))
    )
    rep = verify_thm1(w)
    assert rep.status == "fail"
    assert "word" in rep.evidence and "N" in rep.evidence


def test_verify_cor1_passes():
    rng = random.Random(51)
    for w in [random_word(rng, 48) for _ in range(10)]:
        rep = verify_cor1(w)
        assert rep.ok(), rep


def test_verify_cor1_fail_path(monkeypatch):
    # Deflate the reported rational size; the exact inequality must break.
    from types import SimpleNamespace

    w = Word.from01("01100111")
    monkeypatch.setattr(
        relations.adic, "adic_min", lambda _, n: SimpleNamespace(mu=1)
    )
    rep = verify_cor1(w)
    assert rep.status == "fail"
    assert "word" in rep.evidence


def test_verify_thm2_exhaustive_small():
    for T in range(1, 7):
        for v in range(1 << T):
            w = Word(bytes((v >> i) & 1 for i in range(T)))
            s = least_period(w)
            if s.T != T:
                continue
            assert verify_thm2(s).ok()


def test_verify_lemma1_counterexample_period():
    s = PeriodicSequence.from_word(Word.from01("01001"))
    rep = verify_lemma1(s)
    assert rep.ok()
    assert rep.evidence["mu_2T"] == 22
    assert rep.evidence["gap_at_2T"] is True


def test_verify_thm4_and_thm5():
    assert verify_thm4(31).ok()
    assert verify_thm4(9).ok()
    rep = verify_thm5(11)
    assert rep.ok()
    assert verify_thm5(9).evidence["floor_case"] is True
    assert verify_thm5(11).evidence["floor_case"] is False


def test_lemma3_scan_hits():
    rep = lemma3_scan(30)
    assert rep.ok()
    assert rep.evidence["hits"] == [3, 5, 9]
    assert rep.evidence["rejected"] == [[17, 8], [257, 16], [65537, 32]]
    from seqlab.errors import BoundExceeded

    with pytest.raises(BoundExceeded):
        lemma3_scan(2)
    with pytest.raises(BoundExceeded):
        lemma3_scan(41)


def test_lemma3_mutation(monkeypatch):
    monkeypatch.setattr(relations, "LEMMA3_EXPECTED", (3, 5, 7))
    assert lemma3_scan(30).status == "fail"


def test_verify_thm6():
    rep = verify_thm6(6)
    assert rep.ok()
    rep8 = verify_thm6(8)
    assert rep8.ok()
    assert rep8.evidence["example"] == {"word": "00100100", "moc": 6, "q": 85}
    assert rep8.evidence["extremal_words"] == 32


def test_thm6_mutation(monkeypatch):
    monkeypatch.setattr(relations, "THM6_EXAMPLE", ("00100100", 6, 87))
    assert verify_thm6(8).status == "fail"


def test_tables_reproduce():
    for which in (1, 2):
        reports = reproduce_table(which)
        assert all(r.ok() for r in reports), reports
    t1 = reproduce_table(1)
    assert len(t1) == 8
    assert [r.instance for r in t1][:3] == ["q=3", "q=9", "q=27"]
    t2 = reproduce_table(2)
    assert len(t2) == 5


def test_table_mutations(monkeypatch):
    rows = list(relations.TABLE1_EXPECTED)
    q, T, c, m = rows[0]
    rows[0] = (q, T, c, m + 1)
    monkeypatch.setattr(relations, "TABLE1_EXPECTED", tuple(rows))
    bad = [r for r in reproduce_table(1) if r.status == "fail"]
    assert len(bad) == 1
    assert bad[0].instance == f"q={q}"
    assert bad[0].evidence["expected"] == [T, c, m + 1]
    assert bad[0].evidence["moc"] == m

    rows2 = list(relations.TABLE2_EXPECTED)
    q2, T2, c2, mset = rows2[0]
    rows2[0] = (q2, T2, c2, mset + (9,))
    monkeypatch.setattr(relations, "TABLE2_EXPECTED", tuple(rows2))
    bad2 = [r for r in reproduce_table(2) if r.status == "fail"]
    assert len(bad2) == 1 and bad2[0].instance == f"q={q2}"


def test_verify_lowerbound():
    assert verify_lowerbound("thue-morse", 300).ok()
    assert verify_lowerbound("rudin-shapiro", 300).ok()
    with pytest.raises(ValueError):
        verify_lowerbound("zeckendorf", 100)


def test_verify_msequence():
    rep = verify_msequence(4)
    assert rep.ok()
    assert rep.evidence["linear"] == 4
    assert rep.evidence["q"] == 2**15 - 1
    assert verify_msequence(1).status == "skipped"


def test_verify_msequence_natural_fail():
    # x^4 + x^2 + 1 is reducible, so the register cannot reach full period.
    rep = verify_msequence(4, taps=(0, 2))
    assert rep.status == "fail"
    assert rep.evidence["period"] == 6


def test_suites_all_pass():
    for reports in (
        thm1_suite(count=6, length=48),
        cor1_suite(count=6, length=32),
        thm2_suite(6),
        lemma1_suite(4),
        thm4_suite(51),
        thm5_suite(100),
        thm6_suite(6),
        msequence_suite(5),
    ):
        assert reports
        assert all(r.status in ("pass", "skipped") for r in reports), reports


def test_suite_instances_are_labeled():
    reports = thm1_suite(count=3, length=32)
    randoms = [r for r in reports if r.instance.startswith("random")]
    assert len(randoms) == 3
    assert all("seed=" in r.instance and "index=" in r.instance for r in randoms)


def test_claims_registry_covers_run_all():
    assert sorted(CLAIMS) == [
        "cor1",
        "lemma1",
        "lemma3",
        "lowerbound",
        "msequence",
        "thm1",
        "thm2",
        "thm4",
        "thm5",
        "thm6",
    ]
    reports = run_all()
    seen = {r.claim_id for r in reports}
    assert seen == set(CLAIMS)
    assert all(r.status in ("pass", "skipped") for r in reports)


def test_grid_points_shape():
    pts = grid_points(100)
    assert pts[:5] == [2, 3, 4, 5, 6]
    assert pts[-3:] == [64, 84, 100]
    assert pts == sorted(set(pts))
    assert grid_points(40) == list(range(2, 41))
    big = grid_points(5000)
    assert big[-1] == 5000
    for a, b in zip(big, big[1:]):
        assert b <= max(a + 1, math.ceil(a * 1.3))


def test_conjecture_scan_families():
    rep = conjecture_scan(SeqSpec("thue-morse"), 64)
    assert rep.status == "pass"
    assert all(p.within for p in rep.points)
    assert rep.points[-1].n == 64

    zero = conjecture_scan(SeqSpec("zero"), 200)
    assert zero.status == "fail"
    assert not zero.worst().within

    spec = SeqSpec("legendre", params=(("p", 19),))
    leg = conjecture_scan(spec, 48)
    cap = math.log2(float(2**19 - 1))
    for p in leg.points:
        assert p.target == pytest.approx(min(p.n / 2, cap))
    assert leg.status == "pass"


def test_scan_target_uncapped_for_ell():
    # Only the quadratic-character family gets the finite-value cap; a
    # short-period register must drift off the n/2 line and fail.
    spec = SeqSpec("ell", params=(("A", 1), ("q", 11)))
    rep = conjecture_scan(spec, 400)
    assert rep.status == "fail"


def test_report_serialization_deterministic():
    reports = thm4_suite(101)
    a = reports_to_csv(reports)
    b = reports_to_csv(thm4_suite(101))
    assert a == b
    assert a.startswith("# seqlab-report-v1: claim_id,instance,status,evidence")
    ja = reports_to_json(reports)
    jb = reports_to_json(thm4_suite(101))
    assert ja == jb
    import json

    payload = json.loads(ja)
    assert payload[0]["claim_id"] == "thm4"


def test_scan_serialization_deterministic():
    rep = conjecture_scan(SeqSpec("thue-morse"), 40)
    a = scan_to_csv(rep)
    b = scan_to_csv(conjecture_scan(SeqSpec("thue-morse"), 40))
    assert a == b
    assert a.startswith("# seqlab-scan-v1: N,mu,log2_mu,target,deviation,within")
    assert "# status=pass" in a
    assert scan_to_json(rep) == scan_to_json(conjecture_scan(SeqSpec("thue-morse"), 40))


def test_run_all_deterministic():
    a = reports_to_csv(run_all())
    b = reports_to_csv(run_all())
    assert a == b
