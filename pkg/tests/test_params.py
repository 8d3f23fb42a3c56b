import random
from decimal import Decimal

import pytest

from twisted_gpt.codes import InfeasibleParameters, resistant_delta
from twisted_gpt.params import (
    PAPER_TABLE,
    MissingField,
    SystemParams,
    check_constructible,
    feasible_params,
    key_size,
    render_table,
)

# key sizes (KB) and rates printed in the comparison table
PAPER_KB = ["78.98", "3.60", "3.28", "0.60", "242.00", "11.52", "6.93", "1.23",
            "1123.43", "51.20", "21.50", "4.10"]
PAPER_RATE = ["0.77", "0.64", "0.56", "0.50", "0.76", "0.63", "0.51", "0.50",
              "0.76", "0.67", "0.53", "0.50"]


def test_examples():
    tw = key_size(SystemParams("twisted_gpt", 2, 18, 26, m=104, ell=2, lam=6))
    assert tw.key_bits == 18 * 14 * 104 and tw.key_bytes == 3276
    assert tw.key_kb == Decimal("3.28") and tw.rate_2dp == Decimal("0.56")
    lo = key_size(SystemParams("loidreau", 2, 32, 50, m=50))
    assert lo.key_bytes == 3600 and lo.rate_2dp == Decimal("0.64")
    mc = key_size(SystemParams("mceliece", 2, 1436, 1876))
    assert mc.key_bytes == 78980 and mc.key_kb == Decimal("78.98")
    qc = key_size(SystemParams("qc_mdpc", 2, 9857, 19714))
    assert qc.key_bytes * 8 == 9857 and qc.key_kb == Decimal("1.23")


def test_paper_rows():
    assert [str(key_size(p).key_kb) for p in PAPER_TABLE] == PAPER_KB
    assert [str(key_size(p).rate_2dp) for p in PAPER_TABLE] == PAPER_RATE


def test_render_table():
    text = render_table(PAPER_TABLE)
    lines = text.splitlines()
    assert len(lines) == 2 + 12
    for line, kb in zip(lines[2:], PAPER_KB):
        assert line.endswith(f"{kb} KB")
    assert ">=208.00 (struct.)" in lines[2 + 2]
    assert "external" in lines[2]
    empty = render_table([]).splitlines()
    assert len(empty) == 2 and empty[0].startswith("Method")


def test_missing_fields():
    with pytest.raises(MissingField):
        SystemParams("twisted_gpt", 2, 18, 26)
    with pytest.raises(ValueError):
        SystemParams("bike", 2, 1, 2)


def test_delta_of_reference_rows():
    # only the 80-bit twisted row has an integral Delta
    assert resistant_delta(26, 18, 2) == 2
    for n, k in [(33, 21), (48, 32)]:
        with pytest.raises(InfeasibleParameters):
            resistant_delta(n, k, 2)


def test_feasible_params_admits_reference_row():
    found = feasible_params(range(26, 27), range(18, 19), range(2, 3), 4000, 200, lam=6, s=1)
    assert [(p.n, p.k, p.ell, p.m) for p in found] == [(26, 18, 2, 104)]
    assert str(key_size(found[0]).key_kb) == "3.28"


def test_feasible_params_impossible():
    assert feasible_params(range(8, 30), range(2, 28), range(1, 3), 1, 10) == []


def test_feasible_params_sorted_and_constructible():
    found = feasible_params(range(6, 13), range(2, 11), range(1, 3), 10_000, 10)
    assert found
    sizes = [key_size(p).key_bytes for p in found]
    assert sizes == sorted(sizes)
    rng = random.Random(0)
    for p in found:
        assert p.m == 2**p.ell * p.n
        assert check_constructible(p, rng)
