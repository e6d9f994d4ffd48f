"""The eleven acceptance criteria, one test each.

Every test prints a ``PASS``/``FAIL`` line so the log of a verbose run
doubles as the acceptance report.
"""
import pytest

from gcover.acceptance import CRITERIA


@pytest.mark.parametrize("cid,name,fn", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(cid, name, fn, capsys):
    try:
        ok, detail = fn()
    except Exception as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {cid} {name}: {detail}")
    assert ok, detail
