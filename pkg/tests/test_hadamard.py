# -*- coding: utf-8 -*-
"""
  test_hadamard.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 17.10.2026, 17:02:55

  Purpose: Hadamard triples, companion search and product forms.
"""

import itertools
import time

from fractions import Fraction

import pytest

from hypothesis import given, strategies as st

from jskspectral.libs.digit_sets import DigitSet, alternate_digit_set, consecutive
from jskspectral.libs.errors import DomainError
from jskspectral.libs.hadamard import (
    CompanionSearch,
    HadamardCertificate,
    HadamardFailure,
    ProductFormCertificate,
    ProductFormStage,
    ProductFormVerdict,
    assemble_digits,
    assemble_labels,
    build_product_form,
    check_hadamard,
    plain_triple,
    product_form_certificate,
    search_companion,
    unitarity_deviation,
    verify_product_form,
)


class TestCheckHadamard:
    def test_middle_fourth_triple(self) -> None:
        start = time.perf_counter()
        digits = DigitSet.of([0, 2])
        labels = DigitSet.of([0, 1])
        result = check_hadamard(4, digits, labels)
        assert isinstance(result, HadamardCertificate)
        assert result.verify()
        assert len(result.witnesses) == 1
        assert unitarity_deviation(4, digits, labels) < 1e-12
        assert time.perf_counter() - start < 1.0

    def test_failure_reports_pair(self) -> None:
        result = check_hadamard(4, DigitSet.of([0, 1]), DigitSet.of([0, 1]))
        assert isinstance(result, HadamardFailure)
        assert result.pair == (Fraction(0), Fraction(1))
        assert abs(result.value) > 0.5
        assert not result.root_sum.is_zero()

    def test_consecutive_digits(self) -> None:
        result = check_hadamard(6, consecutive(3), DigitSet.progression(2, 3))
        assert isinstance(result, HadamardCertificate)
        labels = DigitSet.progression(2, 3)
        assert unitarity_deviation(6, consecutive(3), labels) < 1e-12

    @given(
        p=st.integers(min_value=2, max_value=12),
        gap=st.integers(min_value=1, max_value=20),
        label=st.integers(min_value=1, max_value=20),
    )
    def test_exact_test_matches_unitarity(self, p: int, gap: int, label: int) -> None:
        digits = DigitSet.of([0, gap])
        labels = DigitSet.of([0, label])
        exact = isinstance(check_hadamard(p, digits, labels), HadamardCertificate)
        assert exact is (unitarity_deviation(p, digits, labels) < 1e-9)

    @given(shift=st.integers(min_value=-50, max_value=50))
    def test_translation_invariance(self, shift: int) -> None:
        digits = DigitSet.of([0, 2]).translated(shift)
        result = check_hadamard(4, digits, DigitSet.of([0, 1]))
        assert isinstance(result, HadamardCertificate)

    def test_invalid_arguments(self) -> None:
        with pytest.raises(DomainError):
            check_hadamard(0, consecutive(2), consecutive(2))
        with pytest.raises(DomainError):
            check_hadamard(4, consecutive(2), consecutive(3))


class TestCompanionSearch:
    def test_finds_first_companion(self) -> None:
        cert = search_companion(4, DigitSet.of([0, 2]), 4)
        assert cert is not None
        assert cert.labels == DigitSet.of([0, 1])

    def test_not_admissible(self) -> None:
        start = time.perf_counter()
        search = CompanionSearch(4, DigitSet.of([0, 1, 8, 9]), 64)
        assert search.run() is None
        assert search.explored > 0
        assert time.perf_counter() - start < 60.0

    def test_threads_agree(self) -> None:
        single = search_companion(6, consecutive(3), 12)
        threaded = search_companion(6, consecutive(3), 12, threads=3)
        assert single is not None and threaded is not None
        assert single.labels == threaded.labels == DigitSet.of([0, 2, 4])

    def test_bound_too_small(self) -> None:
        assert search_companion(6, consecutive(3), 1) is None

    def test_singleton_digits(self) -> None:
        cert = search_companion(5, DigitSet.of([0]), 0)
        assert cert is not None
        assert cert.labels == DigitSet.of([0])

    def test_invalid_arguments(self) -> None:
        with pytest.raises(DomainError):
            CompanionSearch(0, consecutive(2), 4)


class TestProductForm:
    def test_build_all_small_parameters(self) -> None:
        start = time.perf_counter()
        for m, n_param, p_prime in itertools.product(range(1, 6), repeat=3):
            cert = build_product_form(m, n_param, p_prime)
            assert cert.p == 2 * m * n_param * p_prime
            assert len(cert.digits) == len(cert.labels) == 2 * m * n_param
            verdict = verify_product_form(cert)
            assert verdict.ok, (m, n_param, p_prime, verdict.detail)
        assert time.perf_counter() - start < 60.0

    def test_assembly(self) -> None:
        cert = build_product_form(2, 1, 1)
        assert cert.depth == 2
        assert assemble_digits(cert.p, cert.stages) == cert.digits
        assert assemble_labels(cert.stages).elements == tuple(
            Fraction(k) for k in range(4)
        )

    def test_tampered_digits_rejected(self) -> None:
        cert = build_product_form(1, 2, 1)
        bad = ProductFormCertificate(
            cert.p,
            cert.stages,
            cert.digits.translated(1),
            cert.labels,
            cert.checks,
        )
        verdict = verify_product_form(bad)
        assert not verdict.ok
        assert "differ" in verdict.detail

    def test_tampered_labels_report_pair(self) -> None:
        cert = build_product_form(1, 1, 1)
        stage = ProductFormStage(
            0, DigitSet.of([0, 2]), digits=cert.stages[0].digits
        )
        bad = ProductFormCertificate(
            cert.p,
            (stage,) + cert.stages[1:],
            cert.digits,
            cert.labels,
            cert.checks,
        )
        verdict = verify_product_form(bad)
        assert not verdict.ok
        assert verdict.failure is not None
        assert verdict.failure.pair == (Fraction(0), Fraction(2))
        assert verdict.detail.startswith("stage 0")

    @given(
        st.integers(min_value=1, max_value=5),
        st.integers(min_value=1, max_value=5),
        st.integers(min_value=1, max_value=5),
    )
    def test_digits_are_scaled_alternate_set(
        self, m: int, n_param: int, p_prime: int
    ) -> None:
        cert = build_product_form(m, n_param, p_prime)
        expected = alternate_digit_set(m, n_param, Fraction(1, cert.p))
        assert cert.digits.elements == expected.scaled(cert.p).elements

    def test_failing_stage_reports_pair(self) -> None:
        stages = (ProductFormStage(0, consecutive(2), digits=consecutive(2)),)
        result = product_form_certificate(4, stages)
        assert isinstance(result, ProductFormVerdict)
        assert not result.ok
        assert result.failure is not None
        assert result.failure.pair == (Fraction(0), Fraction(1))

    def test_branching_stage(self) -> None:
        # E_1 depends on the stage 0 digit
        stages = (
            ProductFormStage(0, DigitSet.of([0, 2]), digits=DigitSet.of([0, 1])),
            ProductFormStage(
                1,
                DigitSet.of([0, 1]),
                branches=(
                    (Fraction(0), DigitSet.of([0, 2])),
                    (Fraction(1), DigitSet.of([0, 6])),
                ),
            ),
        )
        result = product_form_certificate(4, stages)
        assert isinstance(result, ProductFormCertificate)
        assert result.digits.elements == tuple(Fraction(k) for k in (0, 1, 8, 25))
        assert verify_product_form(result).ok

    def test_stage_needs_one_digit_source(self) -> None:
        with pytest.raises(DomainError):
            ProductFormStage(0, consecutive(2))
        with pytest.raises(DomainError):
            ProductFormStage(
                0,
                consecutive(2),
                digits=consecutive(2),
                branches=((Fraction(0), consecutive(2)),),
            )
        with pytest.raises(DomainError):
            ProductFormStage(-1, consecutive(2), digits=consecutive(2))

    def test_plain_triple(self) -> None:
        cert = plain_triple(4, DigitSet.of([0, 2]), DigitSet.of([0, 1]))
        assert cert.depth == 0
        assert len(cert.checks) == 1
        with pytest.raises(DomainError):
            plain_triple(4, consecutive(2), consecutive(2))


# #[EOF]#######################################################################
