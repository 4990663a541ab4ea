# -*- coding: utf-8 -*-
"""
  spectra.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 16.10.2026, 13:20:44

  Purpose: Orthogonal families, the Q-function, spectrum truncations and
  closed-form spectrality decisions.
"""

import itertools
import math

from dataclasses import dataclass, field
from fractions import Fraction
from inspect import currentframe
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from jsktoolbox.attribtool import ReadOnlyClass
from jsktoolbox.logstool.logs import LoggerClient
from jsktoolbox.raisetool import Raise

from jskspectral.libs.base import BLogs
from jskspectral.libs.digit_sets import DigitSet
from jskspectral.libs.errors import (
    DegenerateLabelSetError,
    DomainError,
    IndeterminateError,
)
from jskspectral.libs.exact_core import RationalLike, to_rational
from jskspectral.libs.fourier import ft, ft_array, transform_vanishes
from jskspectral.libs.keys import Keys, StatusKeys
from jskspectral.libs.measures import (
    Alternating,
    AlternatingSymmetric,
    MeasureSpec,
    SelfSimilar,
)
from jskspectral.libs.zero_sets import UnknownZeroSet, ZeroSet, measure_zero_set


@dataclass(frozen=True)
class FrequencySet:
    """Sorted duplicate-free finite set of frequencies."""

    elements: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for left, right in zip(self.elements, self.elements[1:]):
            if not left < right:
                raise Raise.error(
                    f"Elements must be strictly increasing: {left}, {right}",
                    DomainError,
                    self.__class__.__name__,
                    currentframe(),
                )

    @classmethod
    def of(cls, values: Iterable[RationalLike]) -> "FrequencySet":
        """Builds a set from values, duplicates merged."""
        return cls(tuple(sorted({to_rational(v) for v in values})))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def as_floats(self) -> np.ndarray:
        return np.array([float(e) for e in self.elements], dtype=float)


# zero oracle #################################################################


class OracleMethod(object, metaclass=ReadOnlyClass):
    """Names of the decision steps."""

    TRIVIAL: str = "trivial"
    ZERO_SET: str = "zero_set"
    EXACT_SCAN: str = "exact_scan"
    SUPERSET: str = "superset"
    NUMERIC: str = "numeric"
    UNDECIDED: str = "undecided"


def nu_zero_superset_member(s: int, rho: RationalLike, x: RationalLike) -> bool:
    """Membership in the known superset of the odd family zero set.

    The zero set of nu for signs (-1)**d on D_s, s odd, lies in the union
    over k >= 1 of ((2Z + 1) \\ s(2Z + 1)) / (2 rho**k s) and
    (Z \\ sZ) / (rho**k s).
    """
    if s < 3 or s % 2 == 0:
        raise Raise.error(
            f"Expected odd s >= 3, received: {s}",
            DomainError,
            __name__,
            currentframe(),
        )
    r = to_rational(rho)
    if not 0 < r < 1:
        raise Raise.error(
            f"Contraction ratio outside (0, 1): {r}",
            DomainError,
            __name__,
            currentframe(),
        )
    point = to_rational(x)
    if point == 0:
        return False
    y = 2 * s * point * r
    while abs(y) >= 1:
        if y.denominator == 1 and y.numerator % 2 and y.numerator % s:
            return True
        z = y / 2
        if z.denominator == 1 and z.numerator % s:
            return True
        y *= r
    return False


def _odd_family(spec: MeasureSpec) -> Optional[Alternating]:
    """The spec if it is the alternating family m = 1 on D_s with s odd."""
    if isinstance(spec, Alternating) and spec.m == 1 and spec.n % 2 and spec.n >= 3:
        return spec
    return None


class ZeroOracle(BLogs):
    """Decides whether the measure transform vanishes at a point.

    Steps, first decisive one wins: exact zero set, exact vanishing scan,
    odd family superset exclusion, certified numeric value. Answers are
    cached by |x|; the transform of a real measure vanishes at x iff it
    vanishes at -x.
    """

    def __init__(
        self,
        spec: MeasureSpec,
        tol: float = 1e-9,
        logs: Optional[LoggerClient] = None,
    ) -> None:
        """Constructor."""
        self._set_data(key=Keys.SPEC, value=spec, set_default_type=object)
        self._set_data(key=Keys.TOL, value=float(tol), set_default_type=float)
        self._set_data(
            key=Keys.ZERO_SET, value=measure_zero_set(spec), set_default_type=object
        )
        self._set_data(key=Keys.MEMO, value={}, set_default_type=dict)
        self.logs = logs

    @property
    def spec(self) -> MeasureSpec:
        return self._get_data(key=Keys.SPEC)  # type: ignore

    @property
    def zero_set(self) -> ZeroSet:
        """Exact zero set, or UnknownZeroSet."""
        return self._get_data(key=Keys.ZERO_SET)  # type: ignore

    def method(self, x: RationalLike) -> str:
        """Step that decided x, running the decision if needed."""
        self.decide(x)
        memo: Dict = self._get_data(key=Keys.MEMO)  # type: ignore
        return memo[abs(to_rational(x))][1]

    def decide(self, x: RationalLike) -> Optional[bool]:
        """True if the transform vanishes at x, False if not, None if unknown."""
        point = abs(to_rational(x))
        memo: Dict = self._get_data(key=Keys.MEMO)  # type: ignore
        if point not in memo:
            memo[point] = self.__decide(point)
        return memo[point][0]

    def __decide(self, x: Fraction) -> Tuple[Optional[bool], str]:
        if x == 0:
            return False, OracleMethod.TRIVIAL
        zero_set = self.zero_set
        if not isinstance(zero_set, UnknownZeroSet):
            return zero_set.contains(x), OracleMethod.ZERO_SET
        spec = self.spec
        scan = transform_vanishes(spec, x)
        if scan is not None:
            return scan, OracleMethod.EXACT_SCAN
        odd = _odd_family(spec)
        if odd is not None and not nu_zero_superset_member(odd.n, odd.rho, x):
            return False, OracleMethod.SUPERSET
        value = ft(spec, x, self._get_data(key=Keys.TOL))  # type: ignore
        if value.excludes_zero():
            return False, OracleMethod.NUMERIC
        if value.pins_zero():
            return True, OracleMethod.NUMERIC
        if self.logs is not None:
            self.logs.message_debug = (
                f"undecided at x={x}: |value|={value.abs:.3e}, "
                f"bound={value.error_bound:.3e}"
            )
        return None, OracleMethod.UNDECIDED


# orthogonality ###############################################################


@dataclass(frozen=True)
class OrthogonalityResult:
    """Orthogonality status with the first offending pair."""

    status: str
    witness: Optional[Tuple[Fraction, Fraction]] = None

    @property
    def difference(self) -> Optional[Fraction]:
        """Difference of the witness pair."""
        if self.witness is None:
            return None
        return self.witness[1] - self.witness[0]


def is_orthogonal(
    spec: MeasureSpec,
    lam: FrequencySet,
    oracle: Optional[ZeroOracle] = None,
    tol: float = 1e-9,
) -> OrthogonalityResult:
    """Tests (lam - lam) \\ {0} against the zero set of the transform."""
    if oracle is None:
        oracle = ZeroOracle(spec, tol)
    undecided: Optional[Tuple[Fraction, Fraction]] = None
    for a, b in itertools.combinations(lam.elements, 2):
        answer = oracle.decide(b - a)
        if answer is False:
            return OrthogonalityResult(StatusKeys.FALSE, (a, b))
        if answer is None and undecided is None:
            undecided = (a, b)
    if undecided is not None:
        return OrthogonalityResult(StatusKeys.INDETERMINATE, undecided)
    return OrthogonalityResult(StatusKeys.TRUE)


# Q-function ##################################################################


@dataclass(frozen=True)
class QValue:
    """Q(xi) with |true - value| <= error_bound."""

    value: float
    error_bound: float


def q_function(
    spec: MeasureSpec, lam: FrequencySet, xi: float, tol: float = 1e-9
) -> QValue:
    """sum over lam of |transform(xi + lambda)|**2."""
    if not tol > 0:
        raise Raise.error(
            f"Tolerance must be positive, received: {tol}",
            DomainError,
            __name__,
            currentframe(),
        )
    if not math.isfinite(xi):
        raise Raise.error(
            f"Frequency must be finite, received: {xi}",
            DomainError,
            __name__,
            currentframe(),
        )
    if not len(lam):
        return QValue(0.0, 0.0)
    per_term = tol / (4.0 * len(lam))
    values, bounds = ft_array(spec, float(xi) + lam.as_floats(), per_term)
    moduli = np.abs(values)
    # ||a|^2 - |b|^2| <= (2|b| + e) e for |a - b| <= e
    errors = (2.0 * moduli + bounds) * bounds
    total = float(np.sum(moduli**2))
    rounding = 4.0 * float(np.finfo(float).eps) * len(lam) * max(total, 1.0)
    return QValue(total, float(np.sum(errors)) + rounding)


# canonical spectrum ##########################################################


def canonical_spectrum(p: int, labels: DigitSet, depth: int) -> FrequencySet:
    """Returns {sum_{j < depth} p**j l_j : l_j in labels}."""
    if p < 1 or depth < 1:
        raise Raise.error(
            f"Expected p >= 1 and depth >= 1, received: {p}, {depth}",
            DomainError,
            __name__,
            currentframe(),
        )
    if 0 not in labels:
        raise Raise.error(
            "Label set must contain 0",
            DomainError,
            __name__,
            currentframe(),
        )
    current = [Fraction(0)]
    for j in range(depth):
        scale = Fraction(p) ** j
        current = [x + scale * label for x in current for label in labels.elements]
    if len(set(current)) != len(current):
        raise Raise.error(
            f"Degenerate label set: expansions in base {p} collide at depth {depth}",
            DegenerateLabelSetError,
            __name__,
            currentframe(),
        )
    return FrequencySet(tuple(sorted(current)))


# maximal orthogonal families #################################################


class CliqueMode(object, metaclass=ReadOnlyClass):
    """Handling of pairs the oracle cannot decide."""

    STRICT: str = "strict"
    UPPER_BOUND: str = "upper_bound"


@dataclass(frozen=True)
class CliqueResult:
    """Largest orthogonal family found in a candidate window."""

    size: int
    family: FrequencySet
    explored: int
    certified: bool
    undecided_pairs: Tuple[Tuple[Fraction, Fraction], ...] = field(default=())


class CliqueSearch(BLogs):
    """Exact maximum clique in the orthogonality graph.

    Vertices are candidate frequencies; lambda and lambda' are joined when
    lambda - lambda' lies in the zero set. Branch and bound orders vertices
    by degree and prunes with the number of colours of a greedy colouring
    of the remaining candidates.
    """

    def __init__(
        self,
        spec: MeasureSpec,
        candidates: FrequencySet,
        mode: str = CliqueMode.STRICT,
        tol: float = 1e-9,
        oracle: Optional[ZeroOracle] = None,
        logs: Optional[LoggerClient] = None,
    ) -> None:
        """Constructor."""
        if mode not in (CliqueMode.STRICT, CliqueMode.UPPER_BOUND):
            raise Raise.error(
                f"Unknown clique mode: '{mode}'",
                DomainError,
                self._c_name,
                currentframe(),
            )
        self._set_data(key=Keys.SPEC, value=spec, set_default_type=object)
        self._set_data(
            key=Keys.CANDIDATES, value=candidates, set_default_type=FrequencySet
        )
        self._set_data(key=Keys.MODE, value=mode, set_default_type=str)
        if oracle is None:
            oracle = ZeroOracle(spec, tol, logs)
        self._set_data(key=Keys.ORACLE, value=oracle, set_default_type=ZeroOracle)
        self._set_data(key=Keys.GRAPH, value=None, set_default_type=Optional[nx.Graph])
        self._set_data(key=Keys.EDGES_UNDECIDED, value=[], set_default_type=list)
        self._set_data(key=Keys.EXPLORED, value=0, set_default_type=int)
        self.logs = logs

    @property
    def oracle(self) -> ZeroOracle:
        return self._get_data(key=Keys.ORACLE)  # type: ignore

    @property
    def graph(self) -> nx.Graph:
        """Orthogonality graph, built on first use."""
        if self._get_data(key=Keys.GRAPH) is None:
            self._set_data(key=Keys.GRAPH, value=self.__build())
        return self._get_data(key=Keys.GRAPH)  # type: ignore

    def __build(self) -> nx.Graph:
        candidates: FrequencySet = self._get_data(key=Keys.CANDIDATES)  # type: ignore
        strict = self._get_data(key=Keys.MODE) == CliqueMode.STRICT
        undecided: List = self._get_data(key=Keys.EDGES_UNDECIDED)  # type: ignore
        graph = nx.Graph()
        graph.add_nodes_from(candidates.elements)
        for a, b in itertools.combinations(candidates.elements, 2):
            answer = self.oracle.decide(b - a)
            if answer is None:
                if strict:
                    error = Raise.error(
                        f"Zero membership of {b - a} is undecided for pair ({a}, {b})",
                        IndeterminateError,
                        self._c_name,
                        currentframe(),
                    )
                    error.pair = (a, b)
                    raise error
                undecided.append((a, b))
                graph.add_edge(a, b)
            elif answer:
                graph.add_edge(a, b)
        return graph

    def run(self) -> CliqueResult:
        """Returns one maximum clique."""
        graph = self.graph
        undecided: List = self._get_data(key=Keys.EDGES_UNDECIDED)  # type: ignore
        order = sorted(graph.nodes, key=lambda v: (-graph.degree[v], v))
        best: List[Fraction] = []
        explored = 0

        def expand(chosen: List[Fraction], pool: List[Fraction]) -> None:
            nonlocal best, explored
            explored += 1
            if len(chosen) > len(best):
                best = list(chosen)
            if not pool:
                return
            colours = nx.coloring.greedy_color(
                graph.subgraph(pool), strategy="largest_first"
            )
            if len(chosen) + len(set(colours.values())) <= len(best):
                return
            for i, v in enumerate(pool):
                if len(chosen) + len(pool) - i <= len(best):
                    return
                expand(chosen + [v], [u for u in pool[i + 1 :] if graph.has_edge(v, u)])

        expand([], order)
        self._set_data(key=Keys.EXPLORED, value=explored)
        family = FrequencySet.of(best)
        used = [pair for pair in undecided if pair[0] in family and pair[1] in family]
        if self.logs is not None:
            self.logs.message_info = (
                f"clique search over {graph.number_of_nodes()} candidates: "
                f"size {len(family)}, {explored} nodes, "
                f"{len(undecided)} undecided pairs"
            )
        return CliqueResult(
            size=len(family),
            family=family,
            explored=explored,
            certified=not undecided,
            undecided_pairs=tuple(used),
        )


def max_orthogonal_family(
    spec: MeasureSpec,
    candidates: FrequencySet,
    mode: str = CliqueMode.STRICT,
    tol: float = 1e-9,
    logs: Optional[LoggerClient] = None,
) -> CliqueResult:
    """Largest orthogonal family within candidates."""
    return CliqueSearch(spec, candidates, mode, tol, logs=logs).run()


def orthogonality_bound(p: int, s: int) -> Optional[int]:
    """s when gcd(p, s) = 1, None when the bound does not apply."""
    if p < 2 or s < 2:
        raise Raise.error(
            f"Expected p, s >= 2, received: {p}, {s}",
            DomainError,
            __name__,
            currentframe(),
        )
    return s if math.gcd(p, s) == 1 else None


def _window(denominator: int, modulus: int, window: RationalLike) -> FrequencySet:
    w = to_rational(window)
    if w < 0:
        raise Raise.error(
            f"Negative window: {w}", DomainError, __name__, currentframe()
        )
    reach = math.floor(w * abs(denominator))
    values = [Fraction(0)]
    values.extend(
        Fraction(k, denominator)
        for k in range(-reach, reach + 1)
        if k % modulus
    )
    return FrequencySet.of(values)


def odd_superset_candidates(s: int, window: RationalLike) -> FrequencySet:
    """{0} plus (Z \\ sZ) / (2s) within [-window, window]."""
    if s < 3 or s % 2 == 0:
        raise Raise.error(
            f"Expected odd s >= 3, received: {s}", DomainError, __name__, currentframe()
        )
    return _window(2 * s, s, window)


def even_superset_candidates(p: int, s: int, window: RationalLike) -> FrequencySet:
    """{0} plus (Z \\ sZ) / (sQ) within [-window, window], Q = p(1 - s) + 1."""
    if p < 2 or s < 2 or s % 2:
        raise Raise.error(
            f"Expected p >= 2 and even s >= 2, received: {p}, {s}",
            DomainError,
            __name__,
            currentframe(),
        )
    return _window(s * (p * (1 - s) + 1), s, window)


# spectrum decomposition ######################################################


@dataclass(frozen=True)
class DecompositionResult:
    """Cells Lambda_{i + q1 j} and unmatched elements.

    Cell members z satisfy b1 ((i + q1 j) / c + z) in the input; leftovers
    are kept as lambda / b1.
    """

    b1: Fraction
    c: int
    q1: int
    gamma1: int
    cells: Dict[int, FrequencySet]
    leftovers: FrequencySet

    def reconstruct(self) -> FrequencySet:
        """Input set rebuilt from cells and leftovers."""
        values: List[Fraction] = []
        for index, cell in self.cells.items():
            values.extend(self.b1 * (Fraction(index, self.c) + z) for z in cell)
        values.extend(self.b1 * x for x in self.leftovers)
        return FrequencySet.of(values)

    def uniform_rows(self) -> bool:
        """True if for every i the cells i + q1 j are all empty or all nonempty."""
        for i in range(self.q1):
            row = [self.cells[i + self.q1 * j] for j in range(self.gamma1)]
            filled = {bool(len(cell)) for cell in row}
            if len(filled) > 1:
                return False
        return True


def decompose_spectrum(
    lam: FrequencySet, b1: RationalLike, c: int, q1: int, gamma1: int
) -> DecompositionResult:
    """Files lambda / b1 = (i + q1 j) / c + z into cell i + q1 j."""
    b = to_rational(b1)
    if b == 0 or c < 1 or q1 < 1 or gamma1 < 1:
        raise Raise.error(
            f"Expected b1 != 0 and positive c, q1, gamma1, received: "
            f"{b}, {c}, {q1}, {gamma1}",
            DomainError,
            __name__,
            currentframe(),
        )
    if q1 * gamma1 > c:
        raise Raise.error(
            f"Cell indices reach {q1 * gamma1 - 1}, beyond c - 1 = {c - 1}",
            DomainError,
            __name__,
            currentframe(),
        )
    buckets: Dict[int, List[Fraction]] = {k: [] for k in range(q1 * gamma1)}
    leftovers: List[Fraction] = []
    for value in lam:
        scaled = value / b
        r = scaled * c
        if r.denominator == 1 and r.numerator % c in buckets:
            index = r.numerator % c
            buckets[index].append(Fraction((r.numerator - index) // c))
        else:
            leftovers.append(scaled)
    return DecompositionResult(
        b1=b,
        c=c,
        q1=q1,
        gamma1=gamma1,
        cells={k: FrequencySet.of(v) for k, v in buckets.items()},
        leftovers=FrequencySet.of(leftovers),
    )


# spectrality decisions #######################################################


class SpectralityKeys(object, metaclass=ReadOnlyClass):
    """Decision values."""

    SPECTRAL: str = "spectral"
    NOT_SPECTRAL: str = "not_spectral"
    UNDETERMINED: str = "undetermined"


@dataclass(frozen=True)
class SpectralityDecision:
    """Decision with a human readable reason."""

    status: str
    reason: str

    @property
    def is_spectral(self) -> Optional[bool]:
        if self.status == SpectralityKeys.UNDETERMINED:
            return None
        return self.status == SpectralityKeys.SPECTRAL


def _check_ratio(rho: Fraction) -> None:
    if not 0 < rho < 1:
        raise Raise.error(
            f"Contraction ratio outside (0, 1): {rho}",
            DomainError,
            __name__,
            currentframe(),
        )


def _divisibility_decision(rho: Fraction, modulus: int) -> SpectralityDecision:
    inverse = 1 / rho
    if inverse.denominator != 1:
        return SpectralityDecision(
            SpectralityKeys.NOT_SPECTRAL, f"1/ρ = {inverse} is not an integer"
        )
    p = inverse.numerator
    if p % modulus:
        return SpectralityDecision(SpectralityKeys.NOT_SPECTRAL, f"{modulus}∤{p}")
    return SpectralityDecision(SpectralityKeys.SPECTRAL, f"{modulus}∣{p}")


def spectrality_decision(
    m: int, n_param: int, rho: RationalLike
) -> SpectralityDecision:
    """nu on D_{2Nm} with period m is spectral iff 1/rho in N and 2Nm | 1/rho."""
    if m < 1 or n_param < 1:
        raise Raise.error(
            f"Expected positive m and N, received: {m}, {n_param}",
            DomainError,
            __name__,
            currentframe(),
        )
    r = to_rational(rho)
    _check_ratio(r)
    return _divisibility_decision(r, 2 * n_param * m)


def symmetric_spectrality_decision(n: int, rho: RationalLike) -> SpectralityDecision:
    """Spectral iff 1/rho in (2n + 1)N.

    nu on {-n, ..., n} is a translate of mu on D_{2n+1}.
    """
    if n < 1:
        raise Raise.error(
            f"Expected n >= 1, received: {n}", DomainError, __name__, currentframe()
        )
    r = to_rational(rho)
    _check_ratio(r)
    return _divisibility_decision(r, 2 * n + 1)


def decide_spec(spec: MeasureSpec) -> SpectralityDecision:
    """Closed-form decision where one is known."""
    if isinstance(spec, AlternatingSymmetric):
        return symmetric_spectrality_decision(spec.n, spec.rho)
    if isinstance(spec, Alternating):
        if spec.is_even_family:
            return spectrality_decision(spec.m, spec.n // (2 * spec.m), spec.rho)
        inverse = 1 / spec.rho
        if spec.m == 1 and inverse.denominator == 1:
            p = inverse.numerator
            if math.gcd(p, spec.n) == 1:
                return SpectralityDecision(
                    SpectralityKeys.NOT_SPECTRAL,
                    f"gcd({p}, {spec.n}) = 1: at most {spec.n} "
                    "mutually orthogonal exponentials",
                )
        return SpectralityDecision(
            SpectralityKeys.UNDETERMINED, "odd alternating family outside gcd(p, s) = 1"
        )
    if isinstance(spec, SelfSimilar):
        n = len(spec.digits)
        if n >= 2 and spec.digits.elements == tuple(Fraction(k) for k in range(n)):
            return _divisibility_decision(spec.rho, n)
    return SpectralityDecision(
        SpectralityKeys.UNDETERMINED, "no closed-form rule for this measure"
    )


# #[EOF]#######################################################################
