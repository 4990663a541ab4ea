#!/usr/bin/env python3
# -*- coding: UTF-8 -*-
"""
  Author:  Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 17.10.2026

  Purpose: command-line front end.

  jskspectral [--output PATH] [--format json|csv] [--threads N] [--tol FLOAT]
              [--verbose] COMMAND [PAYLOAD]

  PAYLOAD is JSON text, '@path' to read it from a file, or '-' (default)
  for stdin. Exit codes: 0 true, 1 false, 2 invalid input, 3 indeterminate.
"""

import argparse
import json
import sys

from dataclasses import dataclass
from inspect import currentframe
from typing import Any, Callable, Dict, List, Optional, Tuple

from jsktoolbox.logstool.logs import LoggerClient
from jsktoolbox.raisetool import Raise

from jskspectral import __version__
from jskspectral.libs import codec
from jskspectral.libs.base import BConfigHandler, BLogs
from jskspectral.libs.config import Config
from jskspectral.libs.errors import (
    IndeterminateError,
    PayloadError,
    SpectralError,
)
from jskspectral.libs.fourier import (
    IdentityReport,
    ft,
    sweep,
    verify_nu_equals_mu,
    verify_symmetric_example,
)
from jskspectral.libs.hadamard import (
    HadamardCertificate,
    build_product_form,
    check_hadamard,
    search_companion,
    unitarity_deviation,
    verify_product_form,
)
from jskspectral.libs.keys import ExitKeys, StatusKeys
from jskspectral.libs.logs import LogsProcessor
from jskspectral.libs.measures import Alternating
from jskspectral.libs.report import (
    SWEEP_HEADER,
    Report,
    dump_csv,
    sweep_rows,
)
from jskspectral.libs.spectra import (
    CliqueMode,
    FrequencySet,
    SpectralityDecision,
    SpectralityKeys,
    ZeroOracle,
    canonical_spectrum,
    decide_spec,
    decompose_spectrum,
    even_superset_candidates,
    is_orthogonal,
    max_orthogonal_family,
    odd_superset_candidates,
    orthogonality_bound,
    q_function,
    spectrality_decision,
)

COMMANDS: Tuple[str, ...] = (
    "check-hadamard",
    "search-companion",
    "build-product-form",
    "verify-certificate",
    "eval-ft",
    "sweep-ft",
    "zero-member",
    "check-orthogonal",
    "q-function",
    "max-family",
    "decompose",
    "decide-spectral",
    "verify-nu-mu",
    "verify-symmetric",
)

EXIT_CODES: Dict[str, int] = {
    StatusKeys.TRUE: ExitKeys.TRUE,
    StatusKeys.FALSE: ExitKeys.FALSE,
    StatusKeys.INVALID: ExitKeys.INVALID,
    StatusKeys.INDETERMINATE: ExitKeys.INDETERMINATE,
}

Outcome = Tuple[str, Dict[str, Any]]


@dataclass
class JobSpec:
    """One command invocation."""

    command: str
    payload: Any
    output: Optional[str] = None
    format: Optional[str] = None


def _status(flag: Optional[bool]) -> str:
    if flag is None:
        return StatusKeys.INDETERMINATE
    return StatusKeys.TRUE if flag else StatusKeys.FALSE


def _identity_result(report: IdentityReport) -> Dict[str, Any]:
    return {
        "name": report.name,
        "samples": report.samples,
        "window": report.window,
        "tol": report.tol,
        "max_deviation": report.max_deviation,
        "max_bound": report.max_bound,
        "worst_point": report.worst_point,
        "passed": report.passed,
    }


def _decision_result(decision: SpectralityDecision) -> Outcome:
    status = {
        SpectralityKeys.SPECTRAL: StatusKeys.TRUE,
        SpectralityKeys.NOT_SPECTRAL: StatusKeys.FALSE,
    }.get(decision.status, StatusKeys.INDETERMINATE)
    return status, {"decision": decision.status, "reason": decision.reason}


class SpectralCli(BLogs, BConfigHandler):
    """Runs jobs and renders their reports."""

    def __init__(self, conf: Config, logs: Optional[LoggerClient] = None) -> None:
        """Constructor."""
        self._conf = conf
        self.logs = logs

    def __tol(self, payload: Dict[str, Any]) -> float:
        if "tol" in payload:
            tol = codec.parse_float(payload["tol"], "tol")
            if not tol > 0:
                raise Raise.error(
                    "tol: expected a positive number",
                    PayloadError,
                    self._c_name,
                    currentframe(),
                )
            return tol
        return self._conf.tolerance

    def __handlers(self) -> Dict[str, Callable[[Dict[str, Any]], Outcome]]:
        return {
            "check-hadamard": self.__check_hadamard,
            "search-companion": self.__search_companion,
            "build-product-form": self.__build_product_form,
            "verify-certificate": self.__verify_certificate,
            "eval-ft": self.__eval_ft,
            "sweep-ft": self.__sweep_ft,
            "zero-member": self.__zero_member,
            "check-orthogonal": self.__check_orthogonal,
            "q-function": self.__q_function,
            "max-family": self.__max_family,
            "decompose": self.__decompose,
            "decide-spectral": self.__decide_spectral,
            "verify-nu-mu": self.__verify_nu_mu,
            "verify-symmetric": self.__verify_symmetric,
        }

    def run(self, job: JobSpec) -> Tuple[int, str]:
        """Returns (exit code, rendered report)."""
        report = Report(job.command, job.payload)
        handler = self.__handlers().get(job.command)
        try:
            if handler is None:
                raise Raise.error(
                    f"Unknown command: '{job.command}'",
                    PayloadError,
                    self._c_name,
                    currentframe(),
                )
            if not isinstance(job.payload, dict):
                raise Raise.error(
                    "Payload must be a JSON object",
                    PayloadError,
                    self._c_name,
                    currentframe(),
                )
            status, result = handler(job.payload)
            report.status = status
            report.result = result
        except IndeterminateError as ex:
            report.status = StatusKeys.INDETERMINATE
            report.result = {
                "error": str(ex),
                "pair": codec.dump_rationals(ex.pair) if ex.pair else None,
            }
        except SpectralError as ex:
            report.status = StatusKeys.INVALID
            failure: Dict[str, Any] = {"error": str(ex)}
            if isinstance(ex, PayloadError) and ex.position is not None:
                failure["position"] = ex.position
            report.result = failure
        if self.logs is not None:
            self.logs.message_info = f"{job.command}: {report.status}"
        code = EXIT_CODES[report.status]
        if job.command == "sweep-ft" and report.status == StatusKeys.TRUE:
            if job.format in (None, "csv"):
                return code, report.result.pop("_csv")
        report.result.pop("_csv", None)
        return code, report.to_json()

    # handlers ################################################################

    def __check_hadamard(self, payload: Dict[str, Any]) -> Outcome:
        p = codec.parse_int(codec.require(payload, "p"), "p", 1)
        digits = codec.parse_digit_set(codec.require(payload, "digits"), "digits")
        labels = codec.parse_digit_set(codec.require(payload, "labels"), "labels")
        result = check_hadamard(p, digits, labels)
        out = codec.dump_hadamard(result)
        if isinstance(result, HadamardCertificate):
            out["unitarity_deviation"] = unitarity_deviation(p, digits, labels)
            return StatusKeys.TRUE, out
        return StatusKeys.FALSE, out

    def __search_companion(self, payload: Dict[str, Any]) -> Outcome:
        p = codec.parse_int(codec.require(payload, "p"), "p", 1)
        digits = codec.parse_digit_set(codec.require(payload, "digits"), "digits")
        bound = codec.parse_int(
            codec.require(payload, "label_bound"), "label_bound", 0
        )
        cert = search_companion(p, digits, bound, self._conf.threads, self.logs)
        if cert is None:
            return StatusKeys.FALSE, {"found": False, "label_bound": bound}
        out = codec.dump_hadamard(cert)
        out["found"] = True
        return StatusKeys.TRUE, out

    def __build_product_form(self, payload: Dict[str, Any]) -> Outcome:
        m = codec.parse_int(codec.require(payload, "m"), "m", 1)
        n_param = codec.parse_int(codec.require(payload, "N"), "N", 1)
        p_prime = codec.parse_int(codec.require(payload, "p_prime"), "p_prime", 1)
        cert = build_product_form(m, n_param, p_prime)
        return StatusKeys.TRUE, codec.dump_certificate(cert)

    def __verify_certificate(self, payload: Dict[str, Any]) -> Outcome:
        cert = codec.parse_certificate(payload)
        verdict = verify_product_form(cert)
        return _status(verdict.ok), codec.dump_verdict(verdict)

    def __eval_ft(self, payload: Dict[str, Any]) -> Outcome:
        spec = codec.parse_spec(codec.require(payload, "spec"))
        xi = codec.parse_point(codec.require(payload, "xi"), "xi")
        value = ft(spec, xi, self.__tol(payload), self._conf.exact_order_limit)
        return StatusKeys.TRUE, {
            "re": value.value.real,
            "im": value.value.imag,
            "abs": value.abs,
            "error_bound": value.error_bound,
        }

    def __sweep_ft(self, payload: Dict[str, Any]) -> Outcome:
        spec = codec.parse_spec(codec.require(payload, "spec"))
        start = codec.parse_float(codec.require(payload, "from"), "from")
        stop = codec.parse_float(codec.require(payload, "to"), "to")
        points = codec.parse_int(codec.require(payload, "points"), "points", 1)
        data = sweep(spec, start, stop, points, self.__tol(payload), self._conf.threads)
        rows = list(sweep_rows(data.xi, data.values, data.bounds))
        return StatusKeys.TRUE, {
            "points": points,
            "rows": [dict(zip(SWEEP_HEADER, row)) for row in rows],
            "_csv": dump_csv(SWEEP_HEADER, rows),
        }

    def __zero_member(self, payload: Dict[str, Any]) -> Outcome:
        spec = codec.parse_spec(codec.require(payload, "spec"))
        x = codec.parse_rational(codec.require(payload, "x"), "x")
        oracle = ZeroOracle(spec, self.__tol(payload), self.logs)
        answer = oracle.decide(x)
        return _status(answer), {
            "x": codec.dump_rational(x),
            "member": answer,
            "method": oracle.method(x),
            "zero_set_known": oracle.zero_set.is_known,
        }

    def __frequencies(self, payload: Dict[str, Any]) -> FrequencySet:
        if "lambda" in payload:
            return codec.parse_frequencies(payload["lambda"], "lambda")
        p = codec.parse_int(codec.require(payload, "p"), "p", 1)
        labels = codec.parse_digit_set(codec.require(payload, "labels"), "labels")
        depth = codec.parse_int(codec.require(payload, "depth"), "depth", 1)
        return canonical_spectrum(p, labels, depth)

    def __check_orthogonal(self, payload: Dict[str, Any]) -> Outcome:
        spec = codec.parse_spec(codec.require(payload, "spec"))
        lam = self.__frequencies(payload)
        oracle = ZeroOracle(spec, self.__tol(payload), self.logs)
        result = is_orthogonal(spec, lam, oracle)
        witness = result.witness
        return result.status, {
            "size": len(lam),
            "witness": codec.dump_rationals(witness) if witness else None,
            "difference": (
                codec.dump_rational(result.difference)
                if result.difference is not None
                else None
            ),
        }

    def __q_function(self, payload: Dict[str, Any]) -> Outcome:
        spec = codec.parse_spec(codec.require(payload, "spec"))
        lam = self.__frequencies(payload)
        xi = codec.parse_float(codec.require(payload, "xi"), "xi")
        value = q_function(spec, lam, xi, self.__tol(payload))
        return StatusKeys.TRUE, {
            "size": len(lam),
            "xi": xi,
            "value": value.value,
            "error_bound": value.error_bound,
        }

    def __candidates(self, payload: Dict[str, Any]) -> FrequencySet:
        if "candidates" in payload:
            return codec.parse_frequencies(payload["candidates"], "candidates")
        superset = codec.require(payload, "superset")
        kind = codec.require(superset, "kind", "superset")
        s = codec.parse_int(codec.require(superset, "s", "superset"), "superset.s", 2)
        window = codec.parse_rational(
            codec.require(superset, "window", "superset"), "superset.window"
        )
        if kind == "odd":
            return odd_superset_candidates(s, window)
        if kind == "even":
            p = codec.parse_int(
                codec.require(superset, "p", "superset"), "superset.p", 2
            )
            return even_superset_candidates(p, s, window)
        raise Raise.error(
            f"superset.kind: expected 'odd' or 'even', got {kind!r}",
            PayloadError,
            self._c_name,
            currentframe(),
        )

    def __max_family(self, payload: Dict[str, Any]) -> Outcome:
        spec = codec.parse_spec(codec.require(payload, "spec"))
        candidates = self.__candidates(payload)
        mode = payload.get("mode", CliqueMode.STRICT)
        result = max_orthogonal_family(
            spec, candidates, mode, self.__tol(payload), self.logs
        )
        bound: Optional[int] = None
        if isinstance(spec, Alternating) and spec.m == 1 and spec.n >= 2:
            inverse = 1 / spec.rho
            if inverse.denominator == 1 and inverse.numerator >= 2:
                bound = orthogonality_bound(inverse.numerator, spec.n)
        status = StatusKeys.TRUE if result.certified else StatusKeys.INDETERMINATE
        return status, {
            "candidates": len(candidates),
            "size": result.size,
            "family": codec.dump_frequencies(result.family),
            "explored": result.explored,
            "certified": result.certified,
            "undecided_pairs": [
                codec.dump_rationals(pair) for pair in result.undecided_pairs
            ],
            "orthogonality_bound": bound,
        }

    def __decompose(self, payload: Dict[str, Any]) -> Outcome:
        lam = codec.parse_frequencies(codec.require(payload, "lambda"), "lambda")
        b1 = codec.parse_rational(codec.require(payload, "b1"), "b1")
        c = codec.parse_int(codec.require(payload, "c"), "c", 1)
        q1 = codec.parse_int(codec.require(payload, "q1"), "q1", 1)
        gamma1 = codec.parse_int(codec.require(payload, "gamma1"), "gamma1", 1)
        result = decompose_spectrum(lam, b1, c, q1, gamma1)
        return StatusKeys.TRUE, {
            "cells": {
                str(k): codec.dump_frequencies(v) for k, v in result.cells.items()
            },
            "leftovers": codec.dump_frequencies(result.leftovers),
            "uniform_rows": result.uniform_rows(),
        }

    def __decide_spectral(self, payload: Dict[str, Any]) -> Outcome:
        if "spec" in payload:
            return _decision_result(decide_spec(codec.parse_spec(payload["spec"])))
        m = codec.parse_int(codec.require(payload, "m"), "m", 1)
        n_param = codec.parse_int(codec.require(payload, "N"), "N", 1)
        rho = codec.parse_rational(codec.require(payload, "rho"), "rho")
        return _decision_result(spectrality_decision(m, n_param, rho))

    def __sampling(self, payload: Dict[str, Any]) -> Dict[str, Any]:
        return {
            "sample_count": codec.parse_int(payload.get("samples", 200), "samples", 1),
            "window": codec.parse_float(payload.get("window", 10.0), "window"),
            "tol": codec.parse_float(payload.get("tol", 1e-8), "tol"),
            "seed": codec.parse_int(payload.get("seed", 0), "seed", 0),
        }

    def __verify_nu_mu(self, payload: Dict[str, Any]) -> Outcome:
        m = codec.parse_int(codec.require(payload, "m"), "m", 1)
        n_param = codec.parse_int(codec.require(payload, "N"), "N", 1)
        rho = codec.parse_rational(codec.require(payload, "rho"), "rho")
        report = verify_nu_equals_mu(m, n_param, rho, **self.__sampling(payload))
        return _status(report.passed), _identity_result(report)

    def __verify_symmetric(self, payload: Dict[str, Any]) -> Outcome:
        n = codec.parse_int(codec.require(payload, "n"), "n", 1)
        rho = codec.parse_rational(codec.require(payload, "rho"), "rho")
        report = verify_symmetric_example(n, rho, **self.__sampling(payload))
        return _status(report.passed), _identity_result(report)


# command line ################################################################


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jskspectral",
        description="Spectral measure verification toolkit.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--output", default=None, help="write the report to PATH")
    parser.add_argument("--format", choices=("json", "csv"), default=None)
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "payload", nargs="?", default="-", help="JSON text, @file, or - for stdin"
    )
    return parser


def _read_payload(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if source.startswith("@"):
        with open(source[1:], "r", encoding="utf-8") as file:
            return file.read()
    return source


def load_payload(text: str) -> Any:
    """Decodes payload text, reporting the line and column of syntax errors."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as ex:
        error = Raise.error(
            f"Malformed JSON: {ex.msg}",
            PayloadError,
            __name__,
            currentframe(),
        )
        error.position = f"line {ex.lineno} column {ex.colno}"
        raise error


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point, returns the process exit code."""
    parser = _parser()
    args = parser.parse_args(argv)
    conf = Config()
    malformed = conf.update_from_env()
    try:
        if args.tol is not None:
            conf.tolerance = args.tol
        if args.threads is not None:
            conf.threads = args.threads
    except ValueError as ex:
        parser.error(str(ex))
    if args.verbose:
        conf.verbose = True
    conf.output = args.output
    conf.format = args.format
    processor = LogsProcessor(verbose=conf.verbose)
    for name in malformed:
        processor.client.message_warning = f"ignoring malformed variable {name}"
    cli = SpectralCli(conf, processor.child("cli"))
    text = args.payload
    try:
        text = _read_payload(args.payload)
        payload = load_payload(text)
    except (PayloadError, OSError) as ex:
        report = Report(args.command, text)
        report.result = {"error": str(ex)}
        if isinstance(ex, PayloadError):
            report.result["position"] = ex.position
        code, text = ExitKeys.INVALID, report.to_json()
    else:
        code, text = cli.run(JobSpec(args.command, payload, conf.output, conf.format))
    if conf.output is None:
        sys.stdout.write(text)
    else:
        with open(conf.output, "w", encoding="utf-8") as file:
            file.write(text)
    processor.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())


# #[EOF]#######################################################################
