# -*- coding: utf-8 -*-
"""
  report.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 17.10.2026, 11:34:06

  Purpose: Deterministic JSON reports and CSV plot data.

  Identical inputs give byte-identical output: keys keep insertion order,
  floats are printed with 17 significant digits, rationals as 'a/b'.
"""

import csv
import hashlib
import io
import json
import math

from fractions import Fraction
from inspect import currentframe
from typing import Any, Dict, Iterable, List, Sequence

import numpy as np

from jsktoolbox.attribtool import ReadOnlyClass
from jsktoolbox.basetool.data import BData
from jsktoolbox.raisetool import Raise

from jskspectral import __version__
from jskspectral.libs.exact_core import rational_to_str
from jskspectral.libs.keys import StatusKeys


class _Keys(object, metaclass=ReadOnlyClass):
    """Local keys."""

    COMMAND: str = "command"
    PAYLOAD: str = "payload"
    RESULT: str = "result"
    STATUS: str = "status"


def format_float(value: float) -> str:
    """17 significant digits; non-finite values become JSON strings."""
    if math.isnan(value):
        return '"nan"'
    if math.isinf(value):
        return '"inf"' if value > 0 else '"-inf"'
    return format(value, ".17g")


def _encode(value: Any, indent: int) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, indent + 1)}"
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + f"\n{end}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}{_encode(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{end}]"
    if isinstance(value, np.ndarray):
        return _encode(value.tolist(), indent)
    if value is None or isinstance(value, (bool, np.bool_)):
        return json.dumps(None if value is None else bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if isinstance(value, Fraction):
        return json.dumps(rational_to_str(value))
    if isinstance(value, complex):
        return _encode({"re": value.real, "im": value.imag}, indent)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    raise Raise.error(
        f"Unexpected type in report: '{type(value)}'",
        TypeError,
        __name__,
        currentframe(),
    )


def dump_json(value: Any) -> str:
    """Serialises a report tree."""
    return _encode(value, 0) + "\n"


def payload_hash(payload: Any) -> str:
    """SHA-256 of the payload serialised with sorted keys."""
    text = json.dumps(
        payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False
    )
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class Report(BData):
    """Report of a single command run."""

    def __init__(self, command: str, payload: Any) -> None:
        """Constructor."""
        self._set_data(key=_Keys.COMMAND, value=command, set_default_type=str)
        self._set_data(key=_Keys.PAYLOAD, value=payload, set_default_type=object)
        self._set_data(
            key=_Keys.STATUS, value=StatusKeys.INVALID, set_default_type=str
        )
        self._set_data(key=_Keys.RESULT, value={}, set_default_type=dict)

    @property
    def status(self) -> str:
        return self._get_data(key=_Keys.STATUS)  # type: ignore

    @status.setter
    def status(self, value: str) -> None:
        if value not in (
            StatusKeys.TRUE,
            StatusKeys.FALSE,
            StatusKeys.INVALID,
            StatusKeys.INDETERMINATE,
        ):
            raise Raise.error(
                f"Unknown status: '{value}'", ValueError, self._c_name, currentframe()
            )
        self._set_data(key=_Keys.STATUS, value=value)

    @property
    def result(self) -> Dict[str, Any]:
        return self._get_data(key=_Keys.RESULT)  # type: ignore

    @result.setter
    def result(self, value: Dict[str, Any]) -> None:
        self._set_data(key=_Keys.RESULT, value=value)

    def as_dict(self) -> Dict[str, Any]:
        """Report tree in the fixed key order."""
        payload = self._get_data(key=_Keys.PAYLOAD)
        return {
            "command": self._get_data(key=_Keys.COMMAND),
            "version": __version__,
            "payload_sha256": payload_hash(payload),
            "status": self.status,
            "result": self.result,
        }

    def to_json(self) -> str:
        return dump_json(self.as_dict())


def csv_cell(value: Any) -> str:
    """Shortest round-trip floats, rationals as 'a/b'."""
    if isinstance(value, Fraction):
        return rational_to_str(value)
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def dump_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV text with a header line."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([csv_cell(v) for v in row])
    return buffer.getvalue()


SWEEP_HEADER: List[str] = ["xi", "re", "im", "abs", "error_bound"]


def sweep_rows(
    xi: np.ndarray, values: np.ndarray, bounds: np.ndarray
) -> Iterable[List[float]]:
    """Rows of sweep CSV data."""
    for x, v, b in zip(xi, values, bounds):
        yield [float(x), float(v.real), float(v.imag), float(abs(v)), float(b)]


# #[EOF]#######################################################################
