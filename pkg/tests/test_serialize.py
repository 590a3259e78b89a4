import json

import pytest

from hsbound.bounds import bound_report
from hsbound.errors import TableFormatError
from hsbound.gtable import GTildeTable
from hsbound.serialize import (
    curve_csv,
    dumps_report,
    dumps_table,
    loads_report,
    loads_table,
    table_to_dict,
)


def test_table_round_trip(small_d2_table):
    text = dumps_table(small_d2_table)
    back = loads_table(text)
    assert back == small_d2_table
    assert dumps_table(back) == text


def test_table_schema(small_d2_table):
    doc = json.loads(dumps_table(small_d2_table))
    assert set(doc) == {"metadata", "d", "k_max", "truncation_note", "entries", "terminal"}
    assert doc["metadata"]["kind"] == "hsbound.gtable"
    assert doc["metadata"]["config"]["samples_per_k"] == 200_000
    mc = doc["entries"][3]
    assert mc["source"] == "monte_carlo"
    assert set(mc["estimate"]) == {"mean", "hits", "samples", "std_error", "ci_low", "ci_high", "confidence_level"}
    assert doc["entries"][2]["estimate"] is None


def test_report_round_trip(small_d2_table):
    r = bound_report(small_d2_table, "conservative", curve_samples=7)
    text = dumps_report(r)
    back = loads_report(text)
    assert back == r
    assert dumps_report(back) == text


def test_floats_full_precision():
    t = GTildeTable.from_values(2, [1, 1, 0.1 + 0.2])
    assert loads_table(dumps_table(t)).entries[2].value == 0.1 + 0.2


def _mutate(table, fn):
    doc = table_to_dict(table)
    fn(doc)
    return json.dumps(doc)


@pytest.mark.parametrize("mutation, field", [
    (lambda d: d.pop("k_max"), "k_max"),
    (lambda d: d["entries"][3]["estimate"].update(hits="many"), "entries[3].estimate.hits"),
    (lambda d: d["entries"][3].update(value=0.5), "entries[3].value"),
    (lambda d: d["entries"][1].update(source="guess"), "entries[1].source"),
    (lambda d: d["entries"][2].update(k=7), "entries[2].k"),
    (lambda d: d["metadata"].update(kind="other"), "metadata.kind"),
    (lambda d: d.update(d="two"), "d"),
])
def test_parse_errors_name_field(small_d2_table, mutation, field):
    with pytest.raises(TableFormatError) as exc:
        loads_table(_mutate(small_d2_table, mutation))
    assert exc.value.field == field


def test_parse_rejects_garbage():
    with pytest.raises(TableFormatError):
        loads_table("{not json")


def test_curve_csv():
    text = curve_csv([(1.0, 0.25), (2.0, 0.5)])
    assert text.splitlines() == ["a,f", "1.0,0.25", "2.0,0.5"]
