import json
import random

import pytest

from tpcalc import semiring as sr
from tpcalc.axioms import (
    SignatureError, base_catalog, catalog, check_pair, check_soundness, find, fuzz, mutate,
    negative_controls, sample_instance,
)
from tpcalc.colors import BIT, ONE, Tensor

GROUPS = {"main", "zero", "contraction", "coherence", "scalars", "unit", "derived", "spider"}


def test_catalog_shape():
    base = base_catalog()
    assert len(catalog()) == 2 * len(base)
    assert {s.group for s in base} == GROUPS
    assert len({s.label for s in catalog()}) == len(catalog())
    mix = find("(mix)")
    assert mix.color_slots == 2 and mix.scalar_slots == 0
    can = find("(Can)")
    assert can.scalar_slots == 2 and can.fragment == "full" and can.precondition is not None
    assert find("(R+)").scalar_slots == 2
    assert find("~(mix)").mirror().label == mix.label
    with pytest.raises(KeyError):
        find("(nope)")


def test_cancellation_over_booleans():
    # s + 1 = t + 1 holds in the Boolean semiring for s = 0, t = 1
    assert check_soundness(find("(Can)"), [], [0, 1], "bool").passed
    with pytest.raises(SignatureError):
        find("(Can)").instantiate([], [0, 1], "nat")


def test_single_instances():
    assert check_soundness(find("(⊗)"), [BIT, Tensor(ONE, BIT)]).passed
    with pytest.raises(SignatureError):
        find("(⊗)").instantiate([BIT], [])


def test_mutation_is_caught_with_witness():
    lhs, rhs = find("(⊗)").instantiate([BIT, BIT], [])
    res = check_pair("(⊗)", lhs, mutate(rhs))
    assert not res.passed
    assert "over q" in res.witness() and "distinct" in res.witness()


def test_negative_controls_are_distinct():
    assert all(not c.passed for c in negative_controls("nat"))


def test_functional_schemas_stay_functional():
    rng = random.Random(7)
    for schema in catalog():
        _, _, lhs, rhs = sample_instance(schema, sr.Q, rng)
        assert (lhs.dom, lhs.cod) == (rhs.dom, rhs.cod)
        if schema.fragment == "functional":
            assert lhs.functional and rhs.functional, schema.label


def test_fuzz_report():
    assert fuzz(iterations=0).instances == 0
    picked = [find("(⊗)"), find("(Can)"), find("~(mix)")]
    r = fuzz(seed=3, iterations=4, semirings=("bool", "nat"), schemas=picked)
    assert r.ok and r.instances == 24
    assert all(row.instances == 8 for row in r.rows.values())
    data = json.loads(r.to_json())
    assert data["failures"] == 0 and len(data["schemas"]) == 3
    again = fuzz(seed=3, iterations=4, semirings=("bool", "nat"), schemas=picked)
    assert json.loads(again.to_json())["schemas"] == data["schemas"]
    assert "24 instances, 0 failures" in r.format_table()
