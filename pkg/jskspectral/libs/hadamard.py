# -*- coding: utf-8 -*-
"""
  hadamard.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 16.10.2026, 08:37:14

  Purpose: Hadamard triples and product-form Hadamard triples.

  (p, D, L) is a Hadamard triple when m_D((l2 - l1) / p) = 0 for every pair
  of distinct labels; this is tested exactly with root-of-unity sums.

  A product form is a list of stages. Stage 0 holds (E_0, L_0); stage j
  holds a cumulative shift s_j, the label set L_j and either one digit set
  E_j or a map d -> E_j(d) over the digits assembled so far:

      D^(0) = E_0
      D^(j) = union over d in D^(j-1) of d + p**s_j E_j(d)
"""

import itertools

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from inspect import currentframe
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from jsktoolbox.logstool.logs import LoggerClient
from jsktoolbox.raisetool import Raise

from jskspectral.libs.base import BLogs
from jskspectral.libs.digit_sets import (
    DigitSet,
    consecutive,
    direct_sum,
    mask_eval,
    mask_root_sum,
    mask_vanishes,
    vanishing_factor,
)
from jskspectral.libs.errors import (
    DomainError,
    InternalConsistencyError,
    NotADirectSumError,
)
from jskspectral.libs.exact_core import RootOfUnitySum
from jskspectral.libs.keys import Keys


@dataclass(frozen=True)
class HadamardWitness:
    """Vanishing factor of m_D((l2 - l1) / p)."""

    pair: Tuple[Fraction, Fraction]
    factor: RootOfUnitySum

    def verify(self) -> bool:
        return self.factor.is_zero()


@dataclass(frozen=True)
class HadamardCertificate:
    """Verified Hadamard triple."""

    p: int
    digits: DigitSet
    labels: DigitSet
    witnesses: Tuple[HadamardWitness, ...]

    def verify(self) -> bool:
        """Re-checks the witnesses and the triple itself."""
        if len(self.witnesses) != comb(len(self.labels), 2):
            return False
        if not all(w.verify() for w in self.witnesses):
            return False
        result = check_hadamard(self.p, self.digits, self.labels)
        return isinstance(result, HadamardCertificate)


@dataclass(frozen=True)
class HadamardFailure:
    """First label pair whose mask value does not vanish."""

    pair: Tuple[Fraction, Fraction]
    value: complex
    root_sum: RootOfUnitySum


HadamardResult = Union[HadamardCertificate, HadamardFailure]


def check_hadamard(p: int, digits: DigitSet, labels: DigitSet) -> HadamardResult:
    """Exact Hadamard test over all label pairs."""
    if p < 1:
        raise Raise.error(
            f"Modulus must be positive, received: {p}",
            DomainError,
            __name__,
            currentframe(),
        )
    if len(digits) != len(labels):
        raise Raise.error(
            f"Cardinality mismatch: #D={len(digits)}, #L={len(labels)}",
            DomainError,
            __name__,
            currentframe(),
        )
    witnesses: List[HadamardWitness] = []
    for l1, l2 in itertools.combinations(labels.elements, 2):
        x = (l2 - l1) / p
        factor = vanishing_factor(digits, x)
        if factor is None:
            return HadamardFailure(
                (l1, l2), mask_eval(digits, x), mask_root_sum(digits, x)
            )
        witnesses.append(HadamardWitness((l1, l2), factor))
    return HadamardCertificate(p, digits, labels, tuple(witnesses))


@lru_cache(maxsize=1 << 14)
def _cached_check(p: int, digits: DigitSet, labels: DigitSet) -> HadamardResult:
    return check_hadamard(p, digits, labels)


def unitarity_deviation(p: int, digits: DigitSet, labels: DigitSet) -> float:
    """max |H* H - I| for H = (1/sqrt #D) exp(2 pi i d l / p)."""
    d = digits.as_floats()
    lab = labels.as_floats()
    h = np.exp(2j * np.pi * np.multiply.outer(d, lab) / p) / np.sqrt(len(d))
    gram = h.conj().T @ h
    return float(np.abs(gram - np.eye(len(lab))).max())


# companion search ############################################################


class CompanionSearch(BLogs):
    """Exhaustive search for a label set completing (p, D)."""

    def __init__(
        self,
        p: int,
        digits: DigitSet,
        label_bound: int,
        threads: int = 1,
        logs: Optional[LoggerClient] = None,
    ) -> None:
        """Constructor."""
        if p < 1 or label_bound < 0:
            raise Raise.error(
                f"Expected p >= 1 and bound >= 0, received: {p}, {label_bound}",
                DomainError,
                self._c_name,
                currentframe(),
            )
        self._set_data(key=Keys.MODULUS, value=p, set_default_type=int)
        self._set_data(key=Keys.DIGITS, value=digits, set_default_type=DigitSet)
        self._set_data(key=Keys.LABEL_BOUND, value=label_bound, set_default_type=int)
        self._set_data(key=Keys.THREADS, value=max(1, threads), set_default_type=int)
        self._set_data(key=Keys.EXPLORED, value=0, set_default_type=int)
        self.logs = logs

    @property
    def explored(self) -> int:
        """Search nodes visited by the last run."""
        return self._get_data(key=Keys.EXPLORED)  # type: ignore

    def __compatible(self) -> List[bool]:
        p: int = self._get_data(key=Keys.MODULUS)  # type: ignore
        digits: DigitSet = self._get_data(key=Keys.DIGITS)  # type: ignore
        bound: int = self._get_data(key=Keys.LABEL_BOUND)  # type: ignore
        return [False] + [
            mask_vanishes(digits, Fraction(delta, p)) for delta in range(1, bound + 1)
        ]

    def __branch(self, ok: List[bool], first: int) -> Tuple[Optional[List[int]], int]:
        size = len(self._get_data(key=Keys.DIGITS))  # type: ignore
        bound: int = self._get_data(key=Keys.LABEL_BOUND)  # type: ignore
        nodes = 0

        def extend(chosen: List[int], start: int) -> Optional[List[int]]:
            nonlocal nodes
            nodes += 1
            if len(chosen) == size:
                return chosen
            for cand in range(start, bound + 1):
                if bound - cand + 1 < size - len(chosen):
                    break
                if all(ok[cand - x] for x in chosen):
                    found = extend(chosen + [cand], cand + 1)
                    if found is not None:
                        return found
            return None

        return extend([0, first], first + 1), nodes

    def run(self) -> Optional[HadamardCertificate]:
        """Returns the lexicographically first certificate, or None."""
        p: int = self._get_data(key=Keys.MODULUS)  # type: ignore
        digits: DigitSet = self._get_data(key=Keys.DIGITS)  # type: ignore
        bound: int = self._get_data(key=Keys.LABEL_BOUND)  # type: ignore
        threads: int = self._get_data(key=Keys.THREADS)  # type: ignore
        found: Optional[List[int]] = None
        explored = 0
        if len(digits) == 1:
            found = [0]
        elif bound >= len(digits) - 1:
            ok = self.__compatible()
            firsts = [c for c in range(1, bound + 1) if ok[c]]
            if threads > 1 and len(firsts) > 1:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    results = list(pool.map(lambda c: self.__branch(ok, c), firsts))
            else:
                results = []
                for first in firsts:
                    results.append(self.__branch(ok, first))
                    if results[-1][0] is not None:
                        break
            for labels, nodes in results:
                explored += nodes
                if found is None and labels is not None:
                    found = labels
        self._set_data(key=Keys.EXPLORED, value=explored)
        if self.logs is not None:
            self.logs.message_debug = (
                f"companion search p={p} #D={len(digits)} bound={bound}: "
                f"{'found ' + str(found) if found else 'none'}, {explored} nodes"
            )
        if found is None:
            return None
        result = check_hadamard(p, digits, DigitSet.of(found))
        if not isinstance(result, HadamardCertificate):
            raise Raise.error(
                f"Search produced a non-Hadamard label set: {found}",
                InternalConsistencyError,
                self._c_name,
                currentframe(),
            )
        return result


def search_companion(
    p: int,
    digits: DigitSet,
    label_bound: int,
    threads: int = 1,
    logs: Optional[LoggerClient] = None,
) -> Optional[HadamardCertificate]:
    """Searches labels {0} + subsets of {1, ..., label_bound}."""
    return CompanionSearch(p, digits, label_bound, threads, logs).run()


# product form ################################################################


@dataclass(frozen=True)
class ProductFormStage:
    """One stage: cumulative shift, labels and a constant or branching digit map."""

    shift: int
    labels: DigitSet
    digits: Optional[DigitSet] = None
    branches: Optional[Tuple[Tuple[Fraction, DigitSet], ...]] = None

    def __post_init__(self) -> None:
        if (self.digits is None) == (self.branches is None):
            raise Raise.error(
                "Stage needs exactly one of digits and branches",
                DomainError,
                self.__class__.__name__,
                currentframe(),
            )
        if self.shift < 0:
            raise Raise.error(
                f"Negative stage shift: {self.shift}",
                DomainError,
                self.__class__.__name__,
                currentframe(),
            )

    @property
    def is_constant(self) -> bool:
        return self.digits is not None

    def digits_for(self, d: Fraction) -> Optional[DigitSet]:
        """E_j(d), None when the branch is missing."""
        if self.digits is not None:
            return self.digits
        return dict(self.branches or ()).get(d)

    def options(self) -> Tuple[DigitSet, ...]:
        """Distinct digit sets this stage can use."""
        if self.digits is not None:
            return (self.digits,)
        out: List[DigitSet] = []
        for _, value in self.branches or ():
            if value not in out:
                out.append(value)
        return tuple(out)


@dataclass(frozen=True)
class ProductFormCertificate:
    """Product-form triple with every sub-triple certificate."""

    p: int
    stages: Tuple[ProductFormStage, ...]
    digits: DigitSet
    labels: DigitSet
    checks: Tuple[HadamardCertificate, ...]

    @property
    def depth(self) -> int:
        """Number of stages after stage 0."""
        return len(self.stages) - 1


@dataclass(frozen=True)
class ProductFormVerdict:
    """Outcome of verify_product_form."""

    ok: bool
    detail: str
    failure: Optional[HadamardFailure] = None


def assemble_digits(p: int, stages: Iterable[ProductFormStage]) -> DigitSet:
    """Runs the stage recursion and returns D^(k)."""
    items = list(stages)
    if not items or items[0].digits is None:
        raise Raise.error(
            "Stage 0 must hold a constant digit set",
            DomainError,
            __name__,
            currentframe(),
        )
    current: DigitSet = items[0].digits
    for stage in items[1:]:
        factor = Fraction(p) ** stage.shift
        if stage.digits is not None:
            current = direct_sum(current, stage.digits.scaled(factor))
            continue
        values: List[Fraction] = []
        for d in current.elements:
            branch = stage.digits_for(d)
            if branch is None:
                raise Raise.error(
                    f"Missing branch for digit {d}",
                    DomainError,
                    __name__,
                    currentframe(),
                )
            values.extend(d + factor * e for e in branch.elements)
        if len(set(values)) != len(values):
            raise Raise.error(
                "Stage recursion is not a direct sum",
                NotADirectSumError,
                __name__,
                currentframe(),
            )
        current = DigitSet.of(values)
    return current


def assemble_labels(stages: Iterable[ProductFormStage]) -> DigitSet:
    """Returns L_0 + L_1 + ... + L_k."""
    items = list(stages)
    out = items[0].labels
    for stage in items[1:]:
        out = direct_sum(out, stage.labels)
    return out


def _chain_sums(chain: Iterable[DigitSet]) -> Optional[DigitSet]:
    items = list(chain)
    out = items[0]
    try:
        for item in items[1:]:
            out = direct_sum(out, item)
    except NotADirectSumError:
        return None
    return out


def _sub_triples(
    stages: Tuple[ProductFormStage, ...]
) -> List[Tuple[str, Optional[DigitSet], Optional[DigitSet]]]:
    """Lists (name, digits, labels) of every required sub-triple.

    Independent branch choices are combined at every stage, so a branching
    map is checked under all combinations reachable in the recursion.
    """
    k = len(stages) - 1
    options = [stages[0].options()] + [s.options() for s in stages[1:]]
    out: List[Tuple[str, Optional[DigitSet], Optional[DigitSet]]] = []
    for j, stage in enumerate(stages):
        for e in options[j]:
            out.append((f"stage {j}", e, stage.labels))
    for m in range(1, k + 1):
        labels_head = _chain_sums(s.labels for s in stages[: m + 1])
        for combo in itertools.product(*options[: m + 1]):
            out.append((f"stages 0..{m}", _chain_sums(combo), labels_head))
        labels_tail = _chain_sums(s.labels for s in stages[m:])
        for combo in itertools.product(*options[m:]):
            out.append((f"stages {m}..{k}", _chain_sums(combo), labels_tail))
    return out


def _run_checks(
    p: int, stages: Tuple[ProductFormStage, ...]
) -> Tuple[ProductFormVerdict, Tuple[HadamardCertificate, ...]]:
    seen: Dict[Tuple[DigitSet, DigitSet], HadamardCertificate] = {}
    for name, digits, labels in _sub_triples(stages):
        if digits is None or labels is None:
            return ProductFormVerdict(False, f"{name}: not a direct sum"), ()
        if (digits, labels) in seen:
            continue
        if len(digits) != len(labels):
            return (
                ProductFormVerdict(
                    False, f"{name}: #E={len(digits)} differs from #L={len(labels)}"
                ),
                (),
            )
        result = _cached_check(p, digits, labels)
        if isinstance(result, HadamardFailure):
            return (
                ProductFormVerdict(
                    False,
                    f"{name}: m_E(({result.pair[1]} - {result.pair[0]})/{p}) != 0",
                    result,
                ),
                (),
            )
        seen[(digits, labels)] = result
    verdict = ProductFormVerdict(True, "all sub-triples are Hadamard")
    return verdict, tuple(seen.values())


def verify_product_form(cert: ProductFormCertificate) -> ProductFormVerdict:
    """Re-runs every sub-triple check, then re-derives D^(k) and L^(k).

    A failing sub-triple is reported with its pair even when the assembled
    sets no longer match the certificate.
    """
    if not cert.stages:
        return ProductFormVerdict(False, "no stages")
    if cert.stages[0].digits is None or cert.stages[0].shift != 0:
        return ProductFormVerdict(False, "stage 0 must be constant with shift 0")
    try:
        verdict, _ = _run_checks(cert.p, cert.stages)
        if not verdict.ok:
            return verdict
        digits = assemble_digits(cert.p, cert.stages)
        labels = assemble_labels(cert.stages)
    except NotADirectSumError as ex:
        return ProductFormVerdict(False, f"assembly collides: {ex}")
    except DomainError as ex:
        return ProductFormVerdict(False, f"malformed stages: {ex}")
    if digits.elements != cert.digits.elements:
        return ProductFormVerdict(False, "assembled digits differ from the recursion")
    if labels.elements != cert.labels.elements:
        return ProductFormVerdict(False, "assembled labels differ from L_0 + ... + L_k")
    return verdict


def product_form_certificate(
    p: int, stages: Iterable[ProductFormStage]
) -> Union[ProductFormCertificate, ProductFormVerdict]:
    """Assembles and checks stages, returning a certificate or the failure."""
    items = tuple(stages)
    if not items or items[0].digits is None or items[0].shift != 0:
        return ProductFormVerdict(False, "stage 0 must be constant with shift 0")
    try:
        digits = assemble_digits(p, items)
        labels = assemble_labels(items)
    except NotADirectSumError as ex:
        return ProductFormVerdict(False, f"assembly collides: {ex}")
    verdict, checks = _run_checks(p, items)
    if not verdict.ok:
        return verdict
    return ProductFormCertificate(p, items, digits, labels, checks)


def build_product_form(m: int, n_param: int, p_prime: int) -> ProductFormCertificate:
    """Two-stage product form of (p, pD, L) for p = 2mNp'.

    E_0 = {0, (1 - 2mN)p + m}, E_1 = D_m, E_2 = 2m D_N with labels
    L_0 = {0, Np'}, L_1 = 2Np' D_m, L_2 = p' D_N. Both later stages sit at
    shift 1, so that D^(2) = E_0 + pE_1 + pE_2 = pD.
    """
    if m < 1 or n_param < 1 or p_prime < 1:
        raise Raise.error(
            f"Expected positive parameters, received: {m}, {n_param}, {p_prime}",
            DomainError,
            __name__,
            currentframe(),
        )
    p = 2 * m * n_param * p_prime
    stages = (
        ProductFormStage(
            0,
            DigitSet.progression(n_param * p_prime, 2),
            digits=DigitSet.progression((1 - 2 * m * n_param) * p + m, 2),
        ),
        ProductFormStage(
            1,
            DigitSet.progression(2 * n_param * p_prime, m),
            digits=consecutive(m),
        ),
        ProductFormStage(
            1,
            DigitSet.progression(p_prime, n_param),
            digits=DigitSet.progression(2 * m, n_param),
        ),
    )
    result = product_form_certificate(p, stages)
    if isinstance(result, ProductFormVerdict):
        raise Raise.error(
            f"Product form for m={m}, N={n_param}, p'={p_prime} failed: "
            f"{result.detail}",
            InternalConsistencyError,
            __name__,
            currentframe(),
        )
    return result


def plain_triple(p: int, digits: DigitSet, labels: DigitSet) -> ProductFormCertificate:
    """Zero-stage product form of a plain triple; raises if it is not Hadamard."""
    result = product_form_certificate(
        p, (ProductFormStage(0, labels, digits=digits),)
    )
    if isinstance(result, ProductFormVerdict):
        raise Raise.error(
            f"Not a Hadamard triple: {result.detail}",
            DomainError,
            __name__,
            currentframe(),
        )
    return result


# #[EOF]#######################################################################
