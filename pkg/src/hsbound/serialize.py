"""JSON documents for tables and reports, plus the curve CSV.

Floats are written with Python's shortest round-trip repr, so
serialize -> parse -> serialize is byte-identical. Wall-clock time is kept
out of the files; it would break the byte-identity of repeated runs.
"""

import csv
import io
import json

from . import __version__
from .bounds import BoundReport
from .config import MODES
from .errors import TableFormatError
from .gtable import EXACT, MONTE_CARLO, GTildeEntry, GTildeTable, MCEstimate

TABLE_KIND = "hsbound.gtable"
REPORT_KIND = "hsbound.bound_report"
FORMAT_VERSION = 1


def _dumps(obj):
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _meta(kind, extra=None):
    meta = {"kind": kind, "format_version": FORMAT_VERSION, "tool": "hsbound", "tool_version": __version__}
    if extra:
        meta.update(extra)
    return meta


def _estimate_dict(e):
    return {
        "mean": e.mean,
        "hits": e.hits,
        "samples": e.samples,
        "std_error": e.std_error,
        "ci_low": e.ci_low,
        "ci_high": e.ci_high,
        "confidence_level": e.confidence_level,
    }


def _entry_dict(e):
    return {
        "k": e.k,
        "value": e.value,
        "source": e.source,
        "estimate": None if e.estimate is None else _estimate_dict(e.estimate),
        "exact_form": e.exact_form,
    }


def table_to_dict(table):
    meta = dict(table.metadata or {})
    return {
        "metadata": _meta(TABLE_KIND, meta),
        "d": table.d,
        "k_max": table.k_max,
        "truncation_note": table.truncation_note,
        "entries": [_entry_dict(e) for e in table.entries],
        "terminal": None if table.terminal is None else _entry_dict(table.terminal),
    }


def dumps_table(table):
    return _dumps(table_to_dict(table))


# -- parsing ---------------------------------------------------------------

def _get(obj, key, types, where):
    field = f"{where}.{key}" if where else key
    if not isinstance(obj, dict) or key not in obj:
        raise TableFormatError(field, "missing")
    val = obj[key]
    if isinstance(val, bool) and bool not in types:
        raise TableFormatError(field, f"expected {types}, got bool")
    if not isinstance(val, types):
        raise TableFormatError(field, f"expected {'/'.join(t.__name__ for t in types)}, got {type(val).__name__}")
    return val


def _num(obj, key, where):
    return float(_get(obj, key, (int, float), where))


def _parse_estimate(obj, where):
    if not isinstance(obj, dict):
        raise TableFormatError(where, "expected an object")
    est = MCEstimate(
        mean=_num(obj, "mean", where),
        hits=_get(obj, "hits", (int,), where),
        samples=_get(obj, "samples", (int,), where),
        std_error=_num(obj, "std_error", where),
        ci_low=_num(obj, "ci_low", where),
        ci_high=_num(obj, "ci_high", where),
        confidence_level=_num(obj, "confidence_level", where),
    )
    if est.samples < 1 or not 0 <= est.hits <= est.samples:
        raise TableFormatError(f"{where}.hits", "hits must lie in [0, samples]")
    if est.mean != est.hits / est.samples:
        raise TableFormatError(f"{where}.mean", "mean != hits / samples")
    if not est.ci_low <= est.mean <= est.ci_high:
        raise TableFormatError(f"{where}.ci_low", "interval does not contain the mean")
    return est


def _parse_entry(obj, where):
    k = _get(obj, "k", (int,), where)
    value = _num(obj, "value", where)
    source = _get(obj, "source", (str,), where)
    if source not in (EXACT, MONTE_CARLO):
        raise TableFormatError(f"{where}.source", f"unknown source {source!r}")
    if not 0.0 <= value <= 1.0:
        raise TableFormatError(f"{where}.value", f"{value} outside [0, 1]")
    raw_est = _get(obj, "estimate", (dict, type(None)), where)
    form = _get(obj, "exact_form", (str, type(None)), where)
    est = None
    if source == MONTE_CARLO:
        if raw_est is None:
            raise TableFormatError(f"{where}.estimate", "required for monte_carlo entries")
        est = _parse_estimate(raw_est, f"{where}.estimate")
        if est.mean != value:
            raise TableFormatError(f"{where}.value", "must equal estimate.mean")
    else:
        if form is None:
            raise TableFormatError(f"{where}.exact_form", "required for exact entries")
        if raw_est is not None:
            raise TableFormatError(f"{where}.estimate", "must be null for exact entries")
    return GTildeEntry(k=k, value=value, source=source, estimate=est, exact_form=form)


def _check_meta(doc, kind):
    meta = _get(doc, "metadata", (dict,), "")
    if meta.get("kind") != kind:
        raise TableFormatError("metadata.kind", f"expected {kind!r}, got {meta.get('kind')!r}")
    return meta


def table_from_dict(doc):
    meta = _check_meta(doc, TABLE_KIND)
    d = _get(doc, "d", (int,), "")
    if d < 1:
        raise TableFormatError("d", "must be >= 1")
    k_max = _get(doc, "k_max", (int,), "")
    note = _get(doc, "truncation_note", (str,), "")
    raw = _get(doc, "entries", (list,), "")
    entries = tuple(_parse_entry(e, f"entries[{i}]") for i, e in enumerate(raw))
    for i, e in enumerate(entries):
        if e.k != i:
            raise TableFormatError(f"entries[{i}].k", f"expected {i}, got {e.k}")
    if len(entries) < 2:
        raise TableFormatError("entries", "need at least k = 0 and k = 1")
    if k_max != len(entries) - 1:
        raise TableFormatError("k_max", f"{k_max} does not match {len(entries)} entries")
    raw_term = _get(doc, "terminal", (dict, type(None)), "")
    terminal = None if raw_term is None else _parse_entry(raw_term, "terminal")
    if terminal is not None and terminal.k != len(entries):
        raise TableFormatError("terminal.k", f"expected {len(entries)}, got {terminal.k}")
    extra = {k: v for k, v in meta.items() if k not in ("kind", "format_version", "tool", "tool_version")}
    return GTildeTable(d=d, entries=entries, k_max=k_max, truncation_note=note,
                       terminal=terminal, metadata=extra)


def loads_table(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError("<document>", f"invalid JSON: {exc}") from None
    return table_from_dict(doc)


def report_to_dict(report, statement=True):
    meta = {}
    if statement:
        meta["statement"] = ("pressure analytic for |z| * V_d(R) strictly below 'bound'")
    return {
        "metadata": _meta(REPORT_KIND, meta),
        "d": report.d,
        "mode": report.mode,
        "a_star": report.a_star,
        "c_at_a_star": report.c_at_a_star,
        "bound": report.bound,
        "classical": report.classical,
        "improvement_ratio": report.improvement_ratio,
        "gtable_fingerprint": report.gtable_fingerprint,
        "curve": None if report.curve is None else [list(p) for p in report.curve],
    }


def dumps_report(report):
    return _dumps(report_to_dict(report))


def loads_report(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError("<document>", f"invalid JSON: {exc}") from None
    _check_meta(doc, REPORT_KIND)
    mode = _get(doc, "mode", (str,), "")
    if mode not in MODES:
        raise TableFormatError("mode", f"unknown mode {mode!r}")
    raw_curve = _get(doc, "curve", (list, type(None)), "")
    curve = None
    if raw_curve is not None:
        try:
            curve = tuple((float(a), float(f)) for a, f in raw_curve)
        except (TypeError, ValueError):
            raise TableFormatError("curve", "expected a list of [a, f] pairs") from None
    return BoundReport(
        d=_get(doc, "d", (int,), ""),
        mode=mode,
        a_star=_num(doc, "a_star", ""),
        c_at_a_star=_num(doc, "c_at_a_star", ""),
        bound=_num(doc, "bound", ""),
        classical=_num(doc, "classical", ""),
        improvement_ratio=_num(doc, "improvement_ratio", ""),
        gtable_fingerprint=_get(doc, "gtable_fingerprint", (str,), ""),
        curve=curve,
    )


def curve_csv(curve):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "f"])
    for a, f in curve:
        w.writerow([repr(a), repr(f)])
    return buf.getvalue()
