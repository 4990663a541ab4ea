# -*- coding: utf-8 -*-
"""
  test_spectra.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 17.10.2026, 17:40:18

  Purpose: Zero oracle, orthogonality, Q-function, clique search and
  spectrality decisions.
"""

import time

from fractions import Fraction

import pytest

from jskspectral.libs.digit_sets import DigitSet, consecutive
from jskspectral.libs.errors import (
    DegenerateLabelSetError,
    DomainError,
    IndeterminateError,
)
from jskspectral.libs.hadamard import build_product_form
from jskspectral.libs.keys import StatusKeys
from jskspectral.libs.measures import (
    Alternating,
    AlternatingSymmetric,
    Moran,
    SelfSimilar,
)
from jskspectral.libs.spectra import (
    CliqueMode,
    CliqueSearch,
    FrequencySet,
    OracleMethod,
    SpectralityKeys,
    ZeroOracle,
    canonical_spectrum,
    decide_spec,
    decompose_spectrum,
    even_superset_candidates,
    is_orthogonal,
    max_orthogonal_family,
    nu_zero_superset_member,
    odd_superset_candidates,
    orthogonality_bound,
    q_function,
    spectrality_decision,
    symmetric_spectrality_decision,
)

# 1/rho = k is spectral exactly for these k in 2..9, keyed by (m, N)
SPECTRAL_TABLE = {
    (1, 1): {2, 4, 6, 8},
    (1, 2): {4, 8},
    (2, 1): {4, 8},
    (2, 2): {8},
}


class TestFrequencySet:
    def test_of_merges_duplicates(self) -> None:
        lam = FrequencySet.of([1, "1/2", 1, 0])
        assert lam.elements == (Fraction(0), Fraction(1, 2), Fraction(1))
        assert Fraction(1, 2) in lam
        assert len(FrequencySet.of([])) == 0

    def test_unsorted_rejected(self) -> None:
        with pytest.raises(DomainError):
            FrequencySet((Fraction(1), Fraction(0)))


class TestZeroOracle:
    def test_zero_set_step(self, middle_fourth: SelfSimilar) -> None:
        oracle = ZeroOracle(middle_fourth)
        assert oracle.decide(1) is True
        assert oracle.decide(-1) is True
        assert oracle.decide(2) is False
        assert oracle.method(1) == OracleMethod.ZERO_SET
        assert oracle.decide(0) is False
        assert oracle.method(0) == OracleMethod.TRIVIAL

    def test_exact_scan_without_structure(self) -> None:
        oracle = ZeroOracle(SelfSimilar(Fraction(1, 4), DigitSet.of([0, 2])))
        assert not oracle.zero_set.is_known
        assert oracle.decide(Fraction(3)) is True
        assert oracle.method(3) == OracleMethod.EXACT_SCAN

    def test_superset_step(self, odd_alternating: Alternating) -> None:
        oracle = ZeroOracle(odd_alternating)
        assert oracle.decide(Fraction(1, 6)) is False
        assert oracle.method(Fraction(1, 6)) == OracleMethod.SUPERSET

    def test_superset_membership(self) -> None:
        assert nu_zero_superset_member(3, Fraction(1, 2), Fraction(1, 3))
        assert nu_zero_superset_member(3, Fraction(1, 2), Fraction(4, 3))
        assert not nu_zero_superset_member(3, Fraction(1, 2), Fraction(1, 6))
        assert not nu_zero_superset_member(3, Fraction(1, 2), 1)
        assert not nu_zero_superset_member(3, Fraction(1, 2), 0)
        with pytest.raises(DomainError):
            nu_zero_superset_member(4, Fraction(1, 2), 1)
        with pytest.raises(DomainError):
            nu_zero_superset_member(3, Fraction(3, 2), 1)


class TestOrthogonality:
    def test_structured_digits(self, middle_fourth: SelfSimilar) -> None:
        lam = canonical_spectrum(4, DigitSet.of([0, 1]), 2)
        assert lam.elements == tuple(Fraction(k) for k in (0, 1, 4, 5))
        assert is_orthogonal(middle_fourth, lam).status == StatusKeys.TRUE

    def test_unstructured_digits(self) -> None:
        spec = SelfSimilar(Fraction(1, 4), DigitSet.of([0, 2]))
        assert is_orthogonal(spec, FrequencySet.of([0, 1, 4, 5])).status == (
            StatusKeys.TRUE
        )
        result = is_orthogonal(spec, FrequencySet.of([0, 2]))
        assert result.status == StatusKeys.FALSE
        assert result.witness == (Fraction(0), Fraction(2))
        assert result.difference == 2

    def test_trivial_sets(self, cantor: SelfSimilar) -> None:
        assert is_orthogonal(cantor, FrequencySet.of([])).status == StatusKeys.TRUE
        assert is_orthogonal(cantor, FrequencySet.of([7])).status == StatusKeys.TRUE

    def test_product_form_spectrum(self) -> None:
        cert = build_product_form(2, 3, 1)
        lam = canonical_spectrum(cert.p, cert.labels, 1)
        assert len(lam) == 12
        spec = SelfSimilar(Fraction(1, cert.p), cert.digits)
        deeper = canonical_spectrum(cert.p, cert.labels, 2)
        assert is_orthogonal(spec, deeper).status == StatusKeys.TRUE
        # the same measure written as the alternating family on D_12
        alternating = Alternating(Fraction(1, cert.p), 2, 12)
        scaled = FrequencySet.of(cert.p * x for x in lam)
        assert is_orthogonal(alternating, scaled).status == StatusKeys.TRUE


class TestCanonicalSpectrum:
    def test_collision(self) -> None:
        with pytest.raises(DegenerateLabelSetError):
            canonical_spectrum(2, consecutive(3), 2)

    def test_requires_zero_label(self) -> None:
        with pytest.raises(DomainError):
            canonical_spectrum(4, DigitSet.of([1, 2]), 2)
        with pytest.raises(DomainError):
            canonical_spectrum(4, DigitSet.of([0, 1]), 0)


class TestQFunction:
    def test_empty_set(self, cantor: SelfSimilar) -> None:
        value = q_function(cantor, FrequencySet.of([]), 0.3)
        assert value.value == 0.0

    def test_tolerance_checked(self, cantor: SelfSimilar) -> None:
        with pytest.raises(DomainError):
            q_function(cantor, FrequencySet.of([0]), 0.3, tol=0.0)

    @pytest.mark.parametrize("xi", [float("nan"), float("inf")])
    def test_non_finite_point(self, cantor: SelfSimilar, xi: float) -> None:
        with pytest.raises(DomainError):
            q_function(cantor, FrequencySet.of([0, 1]), xi)
        with pytest.raises(DomainError):
            q_function(cantor, FrequencySet.of([]), xi)

    def test_middle_fourth_convergence(self, middle_fourth: SelfSimilar) -> None:
        grid = [i / 100 for i in range(100)]
        minima = []
        worst_bound = 0.0
        for depth in (4, 6, 8):
            lam = canonical_spectrum(4, DigitSet.of([0, 1]), depth)
            values = [q_function(middle_fourth, lam, xi, 1e-10) for xi in grid]
            for q in values:
                assert q.value <= 1.0 + q.error_bound + 1e-12
                worst_bound = max(worst_bound, q.error_bound)
            minima.append(min(q.value for q in values))
        assert minima[0] <= minima[1] + 2 * worst_bound + 1e-12
        assert minima[1] <= minima[2] + 2 * worst_bound + 1e-12
        assert minima[2] >= 0.999


class TestCliqueSearch:
    def test_orthogonality_bound(self) -> None:
        assert orthogonality_bound(2, 3) == 3
        assert orthogonality_bound(3, 3) is None
        with pytest.raises(DomainError):
            orthogonality_bound(1, 3)

    def test_candidate_windows(self) -> None:
        odd = odd_superset_candidates(3, 1)
        assert len(odd) == 9
        assert Fraction(1, 6) in odd and Fraction(1, 2) not in odd
        even = even_superset_candidates(3, 2, 1)
        assert even.elements == tuple(
            Fraction(k, 4) for k in (-3, -1, 0, 1, 3)
        )
        with pytest.raises(DomainError):
            odd_superset_candidates(4, 1)
        with pytest.raises(DomainError):
            even_superset_candidates(3, 3, 1)

    def test_small_graph(self, middle_fourth: SelfSimilar) -> None:
        search = CliqueSearch(middle_fourth, FrequencySet.of([0, 1, 2, 4, 5]))
        result = search.run()
        assert result.size == 4
        assert result.family == FrequencySet.of([0, 1, 4, 5])
        assert result.certified
        assert search.graph.number_of_nodes() == 5

    def test_strict_mode_names_undecided_pair(self, cantor: SelfSimilar) -> None:
        class Undecided(ZeroOracle):
            def decide(self, x: object) -> None:
                return None

        search = CliqueSearch(
            cantor,
            FrequencySet.of([0, Fraction(1, 2)]),
            oracle=Undecided(cantor),
        )
        with pytest.raises(IndeterminateError) as info:
            search.run()
        assert info.value.pair == (Fraction(0), Fraction(1, 2))
        assert "undecided" in str(info.value)

    def test_unknown_mode(self, cantor: SelfSimilar) -> None:
        with pytest.raises(DomainError):
            CliqueSearch(cantor, FrequencySet.of([0]), mode="greedy")

    def test_odd_family_bound(self, odd_alternating: Alternating) -> None:
        start = time.perf_counter()
        candidates = odd_superset_candidates(3, 20)
        result = max_orthogonal_family(
            odd_alternating, candidates, CliqueMode.UPPER_BOUND
        )
        assert 1 <= result.size <= 3
        status = is_orthogonal(odd_alternating, result.family).status
        assert status != StatusKeys.FALSE
        if result.certified:
            assert status == StatusKeys.TRUE
        assert time.perf_counter() - start < 60.0

    def test_even_family_bound(self) -> None:
        start = time.perf_counter()
        spec = Alternating(Fraction(1, 3), 1, 2)
        candidates = even_superset_candidates(3, 2, 20)
        result = max_orthogonal_family(spec, candidates)
        assert result.size == 2
        assert result.certified
        assert is_orthogonal(spec, result.family).status == StatusKeys.TRUE
        assert time.perf_counter() - start < 60.0


class TestDecomposition:
    def test_cells(self) -> None:
        lam = FrequencySet.of([0, 1, 2, 3, "4/3"])
        result = decompose_spectrum(lam, 2, 2, 1, 2)
        assert result.cells[0] == FrequencySet.of([0, 1])
        assert result.cells[1] == FrequencySet.of([0, 1])
        assert result.leftovers == FrequencySet.of(["2/3"])
        assert result.uniform_rows()
        assert result.reconstruct() == lam

    def test_uneven_rows(self) -> None:
        result = decompose_spectrum(FrequencySet.of([0, 1, 4, 5]), 1, 4, 2, 2)
        assert result.cells[0] == FrequencySet.of([0, 1, 4, 5])
        assert not result.uniform_rows()

    def test_cells_must_fit(self) -> None:
        with pytest.raises(DomainError):
            decompose_spectrum(FrequencySet.of([0]), 1, 2, 2, 2)
        with pytest.raises(DomainError):
            decompose_spectrum(FrequencySet.of([0]), 0, 2, 1, 1)


class TestSpectrality:
    def test_decision_table(self) -> None:
        for (m, n_param), spectral in SPECTRAL_TABLE.items():
            for k in range(2, 10):
                decision = spectrality_decision(m, n_param, Fraction(1, k))
                assert decision.is_spectral is (k in spectral), (m, n_param, k)

    def test_non_integer_inverse(self) -> None:
        decision = spectrality_decision(1, 1, Fraction(2, 5))
        assert decision.status == SpectralityKeys.NOT_SPECTRAL
        assert "not an integer" in decision.reason

    def test_symmetric(self) -> None:
        assert symmetric_spectrality_decision(1, Fraction(1, 6)).is_spectral
        assert not symmetric_spectrality_decision(2, Fraction(1, 6)).is_spectral

    def test_decide_spec(
        self, odd_alternating: Alternating, moran_mixed: Moran
    ) -> None:
        assert decide_spec(SelfSimilar(Fraction(1, 6), consecutive(3))).is_spectral
        assert not decide_spec(SelfSimilar(Fraction(1, 4), consecutive(3))).is_spectral
        assert decide_spec(AlternatingSymmetric(Fraction(1, 3), 1)).is_spectral
        assert decide_spec(Alternating(Fraction(1, 4), 1, 2)).is_spectral
        assert not decide_spec(odd_alternating).is_spectral
        assert decide_spec(Alternating(Fraction(1, 3), 1, 3)).is_spectral is None
        assert decide_spec(moran_mixed).status == SpectralityKeys.UNDETERMINED

    def test_invalid_ratio(self) -> None:
        with pytest.raises(DomainError):
            spectrality_decision(1, 1, Fraction(1))


# #[EOF]#######################################################################
