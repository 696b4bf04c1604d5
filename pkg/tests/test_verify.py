import json
import re

import pytest

from trapcong import verify


@pytest.fixture(scope="module")
def reports():
    return verify.verify("all")


def test_fail_reports_carry_witnesses(reports):
    for r in reports:
        if r.status == verify.FAIL:
            assert r.witnesses, r.claim_id
    with pytest.raises(ValueError):
        verify.Report("x", "1", "2", verify.FAIL)


def test_claim_ids_unique_and_descriptive(reports):
    ids = [r.claim_id for r in reports]
    assert len(ids) == len(set(ids))
    assert not any(re.search(r"(prop|thm|section|eq)\.?\d", i) for i in ids)


def test_only_known_errata_fail(reports):
    failing = {r.claim_id for r in reports if r.status == verify.FAIL}
    assert failing <= verify.KNOWN_ERRATA
    assert verify.exit_code(reports, allow_errata=True) == 0
    assert verify.exit_code(reports) == 2


def test_scopes_partition(reports):
    parts = [r.claim_id for s in verify.SCOPES for r in verify.verify(s)]
    assert parts == [r.claim_id for r in reports]
    with pytest.raises(ValueError):
        verify.verify("section9")


def test_json_is_deterministic():
    a = json.dumps([r.to_json() for r in verify.verify("section3")], sort_keys=True)
    b = json.dumps([r.to_json() for r in verify.verify("section3")], sort_keys=True)
    assert a == b


def test_table_row_pass():
    r = {x.claim_id: x for x in verify.verify("section3")}
    assert r["k.table-n=2"].status == verify.PASS
