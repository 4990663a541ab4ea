# -*- coding: utf-8 -*-
"""
  codec.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 17.10.2026, 09:02:51

  Purpose: JSON payload decoding and result encoding.

  Decoders raise PayloadError carrying the field path of the offending
  value, e.g. 'spec.prefix[1].R[0]'.
"""

import math

from fractions import Fraction
from inspect import currentframe
from typing import Any, Dict, List, Optional, Tuple

from jsktoolbox.raisetool import Raise

from jskspectral.libs.digit_sets import DigitSet
from jskspectral.libs.errors import PayloadError, SpectralError
from jskspectral.libs.exact_core import RootOfUnitySum, rational_to_str, to_rational
from jskspectral.libs.hadamard import (
    HadamardCertificate,
    HadamardFailure,
    ProductFormCertificate,
    ProductFormStage,
    ProductFormVerdict,
)
from jskspectral.libs.measures import (
    Alternating,
    AlternatingSymmetric,
    MeasureSpec,
    Moran,
    MoranStage,
    SelfSimilar,
)
from jskspectral.libs.spectra import FrequencySet


def _fail(message: str, path: str) -> PayloadError:
    error = Raise.error(
        f"{path}: {message}" if path else message,
        PayloadError,
        __name__,
        currentframe(),
    )
    error.position = path
    return error


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def require(obj: Any, key: str, path: str = "") -> Any:
    """Returns obj[key], failing with the field path when missing."""
    if not isinstance(obj, dict):
        raise _fail("expected a JSON object", path)
    if key not in obj:
        where = _join(path, key)
        raise _fail("missing field", where)
    return obj[key]


# decoders ####################################################################


def parse_rational(value: Any, path: str) -> Fraction:
    """Rational from an 'a/b' string, an integer or a finite float."""
    try:
        return to_rational(value)
    except SpectralError as ex:
        raise _fail(str(ex), path)


def parse_int(value: Any, path: str, minimum: Optional[int] = None) -> int:
    """Integer, optionally bounded from below."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(f"expected an integer, got {value!r}", path)
    if minimum is not None and value < minimum:
        raise _fail(f"expected >= {minimum}, got {value}", path)
    return value


def parse_float(value: Any, path: str) -> float:
    """Finite float from a JSON number or a rational string."""
    if isinstance(value, bool):
        raise _fail("expected a number", path)
    if isinstance(value, (int, float)):
        if not math.isfinite(value):
            raise _fail(f"expected a finite number, got {value!r}", path)
        return float(value)
    try:
        return float(parse_rational(value, path))
    except OverflowError:
        raise _fail(f"expected a finite number, got {value!r}", path)


def parse_point(value: Any, path: str) -> Any:
    """Frequency: Fraction for strings and integers, float for JSON floats."""
    if isinstance(value, float):
        if not math.isfinite(value):
            raise _fail(f"expected a finite number, got {value!r}", path)
        return value
    return parse_rational(value, path)


def _parse_list(value: Any, path: str) -> List[Any]:
    if not isinstance(value, list):
        raise _fail("expected a JSON array", path)
    return value


def parse_digit_set(value: Any, path: str) -> DigitSet:
    """Array of rationals, or an object with structure.

    Object form: {"elements": [...], "blocks": [{"scale": "a/b", "len": n}]}.
    With blocks present the elements may be omitted.
    """
    try:
        if isinstance(value, dict):
            where = _join(path, "blocks")
            blocks_raw = _parse_list(require(value, "blocks", path), where)
            blocks: List[Tuple[Fraction, int]] = []
            for i, item in enumerate(blocks_raw):
                where = f"{_join(path, 'blocks')}[{i}]"
                scale = require(item, "scale", where)
                length = require(item, "len", where)
                blocks.append(
                    (
                        parse_rational(scale, _join(where, "scale")),
                        parse_int(length, _join(where, "len"), 1),
                    )
                )
            if "elements" in value:
                elements = [
                    parse_rational(v, f"{_join(path, 'elements')}[{i}]")
                    for i, v in enumerate(
                        _parse_list(value["elements"], _join(path, "elements"))
                    )
                ]
            else:
                elements = _expand_blocks(blocks)
            return DigitSet.of(elements, blocks)
        items = _parse_list(value, path)
        return DigitSet.of(
            parse_rational(v, f"{path}[{i}]") for i, v in enumerate(items)
        )
    except PayloadError:
        raise
    except SpectralError as ex:
        raise _fail(str(ex), path)


def _expand_blocks(blocks: List[Tuple[Fraction, int]]) -> List[Fraction]:
    values = [Fraction(0)]
    for scale, length in blocks:
        values = [v + scale * k for v in values for k in range(length)]
    return values


def parse_frequencies(value: Any, path: str) -> FrequencySet:
    """Array of rationals."""
    items = _parse_list(value, path)
    return FrequencySet.of(
        parse_rational(v, f"{path}[{i}]") for i, v in enumerate(items)
    )


def _parse_stages(value: Any, path: str) -> Tuple[MoranStage, ...]:
    stages: List[MoranStage] = []
    for i, item in enumerate(_parse_list(value, path)):
        where = f"{path}[{i}]"
        b = parse_rational(require(item, "b", where), _join(where, "b"))
        digits = parse_digit_set(require(item, "R", where), _join(where, "R"))
        try:
            stages.append(MoranStage(b, digits))
        except SpectralError as ex:
            raise _fail(str(ex), where)
    return tuple(stages)


def parse_spec(value: Any, path: str = "spec") -> MeasureSpec:
    """Measure spec object selected by its "type" field."""
    kind = require(value, "type", path)
    try:
        if kind == SelfSimilar.KIND:
            return SelfSimilar(
                parse_rational(require(value, "rho", path), _join(path, "rho")),
                parse_digit_set(require(value, "digits", path), _join(path, "digits")),
            )
        if kind == Alternating.KIND:
            return Alternating(
                parse_rational(require(value, "rho", path), _join(path, "rho")),
                parse_int(require(value, "m", path), _join(path, "m"), 1),
                parse_int(require(value, "n", path), _join(path, "n"), 1),
            )
        if kind == AlternatingSymmetric.KIND:
            return AlternatingSymmetric(
                parse_rational(require(value, "rho", path), _join(path, "rho")),
                parse_int(require(value, "n", path), _join(path, "n"), 1),
            )
        if kind == Moran.KIND:
            prefix = _parse_stages(value.get("prefix", []), _join(path, "prefix"))
            tail = _parse_stages(value.get("tail", []), _join(path, "tail"))
            if not prefix and not tail:
                raise _fail("empty Moran spec", path)
            return Moran(prefix, tail)
    except PayloadError:
        raise
    except SpectralError as ex:
        raise _fail(str(ex), path)
    where = _join(path, "type")
    raise _fail(f"unknown measure type {kind!r}", where)


def _parse_branches(
    value: Any, path: str
) -> Tuple[Tuple[Fraction, DigitSet], ...]:
    if not isinstance(value, dict):
        raise _fail("expected a JSON object", path)
    out: List[Tuple[Fraction, DigitSet]] = []
    for key in value:
        where = _join(path, key)
        out.append((parse_rational(key, where), parse_digit_set(value[key], where)))
    return tuple(sorted(out, key=lambda item: item[0]))


def parse_stage(value: Any, path: str) -> ProductFormStage:
    """Product-form stage object."""
    labels = parse_digit_set(require(value, "labels", path), _join(path, "labels"))
    shift = parse_int(value.get("shift", 0), _join(path, "shift"), 0)
    try:
        if "branches" in value:
            return ProductFormStage(
                shift,
                labels,
                branches=_parse_branches(value["branches"], _join(path, "branches")),
            )
        return ProductFormStage(
            shift,
            labels,
            digits=parse_digit_set(
                require(value, "digits", path), _join(path, "digits")
            ),
        )
    except PayloadError:
        raise
    except SpectralError as ex:
        raise _fail(str(ex), path)


def parse_certificate(value: Any, path: str = "") -> ProductFormCertificate:
    """Certificate object; an empty stage list denotes a plain triple."""
    p = parse_int(require(value, "p", path), _join(path, "p"), 1)
    digits = parse_digit_set(require(value, "digits", path), _join(path, "digits"))
    labels = parse_digit_set(require(value, "labels", path), _join(path, "labels"))
    raw = _parse_list(value.get("stages", []), _join(path, "stages"))
    stages = tuple(
        parse_stage(item, f"{_join(path, 'stages')}[{i}]") for i, item in enumerate(raw)
    )
    if not stages:
        stages = (ProductFormStage(0, labels, digits=digits),)
    return ProductFormCertificate(p, stages, digits, labels, ())


# encoders ####################################################################


def dump_rational(value: Fraction) -> str:
    return rational_to_str(value)


def dump_rationals(values: Any) -> List[str]:
    return [rational_to_str(v) for v in values]


def dump_complex(value: complex) -> Dict[str, float]:
    return {"re": float(value.real), "im": float(value.imag)}


def dump_digit_set(d: DigitSet) -> Any:
    """Plain array, or an object when block structure is recorded."""
    if d.blocks is None:
        return dump_rationals(d.elements)
    return {
        "elements": dump_rationals(d.elements),
        "blocks": [
            {"scale": rational_to_str(b.scale), "len": b.length} for b in d.blocks
        ],
    }


def dump_frequencies(lam: FrequencySet) -> List[str]:
    return dump_rationals(lam.elements)


def dump_root_sum(s: RootOfUnitySum) -> Dict[str, Any]:
    return {
        "order": s.order,
        "coefficients": {str(k): c for k, c in s.coefficients},
    }


def _dump_moran_stage(stage: MoranStage) -> Dict[str, Any]:
    return {"b": rational_to_str(stage.b), "R": dump_digit_set(stage.digits)}


def dump_spec(spec: MeasureSpec) -> Dict[str, Any]:
    """Inverse of parse_spec."""
    if isinstance(spec, SelfSimilar):
        return {
            "type": spec.KIND,
            "rho": rational_to_str(spec.rho),
            "digits": dump_digit_set(spec.digits),
        }
    if isinstance(spec, Alternating):
        return {
            "type": spec.KIND,
            "rho": rational_to_str(spec.rho),
            "m": spec.m,
            "n": spec.n,
        }
    if isinstance(spec, AlternatingSymmetric):
        return {"type": spec.KIND, "rho": rational_to_str(spec.rho), "n": spec.n}
    return {
        "type": spec.KIND,
        "prefix": [_dump_moran_stage(s) for s in spec.prefix],
        "tail": [_dump_moran_stage(s) for s in spec.tail],
    }


def dump_hadamard(result: Any) -> Dict[str, Any]:
    """Hadamard certificate or failure."""
    if isinstance(result, HadamardFailure):
        return {
            "pair": dump_rationals(result.pair),
            "value": dump_complex(result.value),
            "root_sum": dump_root_sum(result.root_sum),
        }
    cert: HadamardCertificate = result
    return {
        "p": cert.p,
        "digits": dump_digit_set(cert.digits),
        "labels": dump_digit_set(cert.labels),
        "witnesses": [
            {"pair": dump_rationals(w.pair), "factor": dump_root_sum(w.factor)}
            for w in cert.witnesses
        ],
    }


def dump_stage(stage: ProductFormStage) -> Dict[str, Any]:
    out: Dict[str, Any] = {"shift": stage.shift}
    if stage.digits is not None:
        out["digits"] = dump_digit_set(stage.digits)
    else:
        out["branches"] = {
            rational_to_str(d): dump_digit_set(e) for d, e in stage.branches or ()
        }
    out["labels"] = dump_digit_set(stage.labels)
    return out


def dump_certificate(cert: ProductFormCertificate) -> Dict[str, Any]:
    """Certificate in the format read by parse_certificate."""
    return {
        "p": cert.p,
        "digits": dump_digit_set(cert.digits),
        "labels": dump_digit_set(cert.labels),
        "stages": [dump_stage(s) for s in cert.stages],
        "checks": len(cert.checks),
    }


def dump_verdict(verdict: ProductFormVerdict) -> Dict[str, Any]:
    out: Dict[str, Any] = {"ok": verdict.ok, "detail": verdict.detail}
    if verdict.failure is not None:
        out["failure"] = dump_hadamard(verdict.failure)
    return out


# #[EOF]#######################################################################
