# -*- coding: utf-8 -*-
"""
  test_codec.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 17.10.2026, 18:11:37

  Purpose: Payload decoding with field positions, result encoding.
"""

from fractions import Fraction

import pytest

from jskspectral.libs.codec import (
    dump_certificate,
    dump_digit_set,
    dump_hadamard,
    dump_spec,
    parse_certificate,
    parse_digit_set,
    parse_float,
    parse_frequencies,
    parse_int,
    parse_point,
    parse_spec,
    require,
)
from jskspectral.libs.digit_sets import DigitSet, consecutive
from jskspectral.libs.errors import PayloadError
from jskspectral.libs.hadamard import (
    build_product_form,
    check_hadamard,
    verify_product_form,
)
from jskspectral.libs.measures import (
    Alternating,
    AlternatingSymmetric,
    Moran,
    SelfSimilar,
)


class TestParseSpec:
    def test_self_similar(self) -> None:
        spec = parse_spec({"type": "self_similar", "rho": "1/4", "digits": [0, 2]})
        assert isinstance(spec, SelfSimilar)
        assert spec.rho == Fraction(1, 4)
        assert spec.digits == DigitSet.of([0, 2])

    def test_alternating_families(self) -> None:
        spec = parse_spec({"type": "alternating", "rho": "1/2", "m": 1, "n": 3})
        assert isinstance(spec, Alternating)
        assert (spec.m, spec.n) == (1, 3)
        spec = parse_spec({"type": "alternating_symmetric", "rho": "1/3", "n": 1})
        assert isinstance(spec, AlternatingSymmetric)

    def test_moran(self) -> None:
        spec = parse_spec(
            {
                "type": "moran",
                "prefix": [{"b": 2, "R": [0, 1]}],
                "tail": [{"b": "3", "R": [0, 1, 2]}],
            }
        )
        assert isinstance(spec, Moran)
        assert spec.tail_period_product == 3

    def test_missing_field_position(self) -> None:
        with pytest.raises(PayloadError) as info:
            parse_spec({"type": "self_similar", "digits": [0, 1]})
        assert info.value.position == "spec.rho"

    def test_bad_rational_position(self) -> None:
        with pytest.raises(PayloadError) as info:
            parse_spec({"type": "self_similar", "rho": "1/x", "digits": [0, 1]})
        assert info.value.position == "spec.rho"

    def test_nested_position(self) -> None:
        payload = {
            "type": "moran",
            "prefix": [{"b": 2, "R": [0, 1]}, {"b": 2, "R": [0, "?"]}],
        }
        with pytest.raises(PayloadError) as info:
            parse_spec(payload)
        assert info.value.position == "spec.prefix[1].R[1]"

    def test_domain_errors_become_payload_errors(self) -> None:
        with pytest.raises(PayloadError) as info:
            parse_spec({"type": "self_similar", "rho": 2, "digits": [0, 1]})
        assert info.value.position == "spec"
        with pytest.raises(PayloadError):
            parse_spec({"type": "alternating", "rho": "1/4", "m": 2, "n": 3})

    def test_unknown_type(self) -> None:
        with pytest.raises(PayloadError) as info:
            parse_spec({"type": "gaussian"})
        assert info.value.position == "spec.type"

    def test_not_an_object(self) -> None:
        with pytest.raises(PayloadError):
            parse_spec([1, 2])
        with pytest.raises(PayloadError) as info:
            require({}, "p")
        assert info.value.position == "p"


class TestScalars:
    def test_parse_int(self) -> None:
        assert parse_int(3, "n", 1) == 3
        with pytest.raises(PayloadError):
            parse_int(True, "n")
        with pytest.raises(PayloadError):
            parse_int(0, "n", 1)
        with pytest.raises(PayloadError):
            parse_int("3", "n")

    def test_parse_point(self) -> None:
        assert parse_point("1/3", "xi") == Fraction(1, 3)
        assert parse_point(2, "xi") == Fraction(2)
        assert isinstance(parse_point(0.25, "xi"), float)

    @pytest.mark.parametrize("value", [float("inf"), float("-inf"), float("nan")])
    def test_non_finite_rejected(self, value: float) -> None:
        with pytest.raises(PayloadError) as info:
            parse_point(value, "xi")
        assert info.value.position == "xi"
        with pytest.raises(PayloadError) as info:
            parse_float(value, "from")
        assert info.value.position == "from"

    def test_overflowing_rational_float(self) -> None:
        assert parse_float("1/4", "to") == 0.25
        with pytest.raises(PayloadError):
            parse_float("1" + "0" * 400, "to")

    def test_frequencies(self) -> None:
        lam = parse_frequencies(["1/2", 0, 0], "lambda")
        assert lam.elements == (Fraction(0), Fraction(1, 2))
        with pytest.raises(PayloadError) as info:
            parse_frequencies("0 1", "lambda")
        assert info.value.position == "lambda"


class TestDigitSets:
    def test_plain_array(self) -> None:
        d = parse_digit_set(["-1/2", 0, 3], "digits")
        assert d.elements == (Fraction(-1, 2), Fraction(0), Fraction(3))
        assert d.blocks is None

    def test_blocks_only(self) -> None:
        d = parse_digit_set(
            {"blocks": [{"scale": 1, "len": 2}, {"scale": "4", "len": 3}]}, "digits"
        )
        assert d.elements == tuple(Fraction(k) for k in (0, 1, 4, 5, 8, 9))
        assert d.blocks is not None and len(d.blocks) == 2

    def test_elements_with_blocks(self) -> None:
        d = parse_digit_set(
            {"elements": ["0", "2"], "blocks": [{"scale": "2", "len": 2}]}, "digits"
        )
        assert d.elements == (Fraction(0), Fraction(2))
        assert d.blocks is not None
        assert (d.blocks[0].scale, d.blocks[0].length) == (Fraction(2), 2)

    def test_blocks_must_match_elements(self) -> None:
        with pytest.raises(PayloadError) as info:
            parse_digit_set(
                {"elements": [0, 2], "blocks": [{"scale": 1, "len": 2}]}, "digits"
            )
        assert info.value.position == "digits"

    def test_malformed_block(self) -> None:
        with pytest.raises(PayloadError) as info:
            parse_digit_set({"blocks": [{"scale": "1/2"}]}, "digits")
        assert info.value.position == "digits.blocks[0].len"
        with pytest.raises(PayloadError) as info:
            parse_digit_set({"blocks": [{"scale": 1, "len": 0}]}, "digits")
        assert info.value.position == "digits.blocks[0].len"
        with pytest.raises(PayloadError) as info:
            parse_digit_set({"blocks": [[1, 2]]}, "digits")
        assert info.value.position == "digits.blocks[0]"

    def test_duplicates_rejected(self) -> None:
        with pytest.raises(PayloadError):
            parse_digit_set([0, 1, 1], "digits")

    def test_dump_keeps_structure(self) -> None:
        assert dump_digit_set(DigitSet.of([0, 2])) == ["0", "2"]
        assert dump_digit_set(DigitSet.progression(Fraction(1, 2), 2)) == {
            "elements": ["0", "1/2"],
            "blocks": [{"scale": "1/2", "len": 2}],
        }

    def test_structured_dump_parses_back(self) -> None:
        d = DigitSet.progression(Fraction(2), 3)
        again = parse_digit_set(dump_digit_set(d), "digits")
        assert again == d
        assert again.blocks == d.blocks


class TestEncoding:
    def test_spec_dump_parses_back(self) -> None:
        spec = Alternating(Fraction(1, 8), 2, 4)
        again = parse_spec(dump_spec(spec))
        assert isinstance(again, Alternating)
        assert (again.rho, again.m, again.n) == (spec.rho, spec.m, spec.n)

    def test_hadamard_dump(self) -> None:
        ok = dump_hadamard(check_hadamard(4, DigitSet.of([0, 2]), consecutive(2)))
        assert ok["p"] == 4
        assert ok["witnesses"][0]["pair"] == ["0", "1"]
        bad = dump_hadamard(check_hadamard(4, consecutive(2), consecutive(2)))
        assert bad["pair"] == ["0", "1"]
        assert set(bad["root_sum"]) == {"order", "coefficients"}

    def test_certificate_dump_verifies(self) -> None:
        cert = build_product_form(1, 2, 2)
        data = dump_certificate(cert)
        assert data["p"] == 8
        assert data["checks"] == len(cert.checks)
        parsed = parse_certificate(data)
        assert parsed.digits == cert.digits
        assert verify_product_form(parsed).ok

    def test_plain_certificate(self) -> None:
        parsed = parse_certificate({"p": 4, "digits": [0, 2], "labels": [0, 1]})
        assert len(parsed.stages) == 1
        assert verify_product_form(parsed).ok

    def test_certificate_position(self) -> None:
        with pytest.raises(PayloadError) as info:
            parse_certificate(
                {"p": 4, "digits": [0, 2], "labels": [0, 1], "stages": [{}]}
            )
        assert info.value.position == "stages[0].labels"


# #[EOF]#######################################################################
