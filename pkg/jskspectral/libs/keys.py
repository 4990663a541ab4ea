# -*- coding: utf-8 -*-
"""
  keys.py
  Author : Jacek 'Szumak' Kotlarski --<szumak@virthost.pl>
  Created: 22.12.2023, 01:23:01

  Purpose: Keys container class.
"""

from jsktoolbox.attribtool import ReadOnlyClass


class Keys(object, metaclass=ReadOnlyClass):
    """Keys container class."""

    CANDIDATES: str = "__candidates__"
    CONF: str = "_CONF_"
    DIGITS: str = "__digits__"
    EDGES_UNDECIDED: str = "__edges_undecided__"
    EXACT_LIMIT: str = "__exact_order_limit__"
    EXPLORED: str = "__explored__"
    FORMAT: str = "__format__"
    GRAPH: str = "__graph__"
    LABEL_BOUND: str = "__label_bound__"
    LOGS: str = "_LOGS_"
    MEMO: str = "__memo__"
    MODE: str = "__mode__"
    MODULUS: str = "__modulus__"
    ORACLE: str = "__oracle__"
    OUTPUT: str = "__output__"
    SPEC: str = "__spec__"
    THREADS: str = "__threads__"
    TOL: str = "__tolerance__"
    VERBOSE: str = "__verbose__"
    ZERO_SET: str = "__zero_set__"


class StatusKeys(object, metaclass=ReadOnlyClass):
    """Report status values."""

    FALSE: str = "false"
    INDETERMINATE: str = "indeterminate"
    INVALID: str = "invalid"
    TRUE: str = "true"


class ExitKeys(object, metaclass=ReadOnlyClass):
    """Process exit codes."""

    FALSE: int = 1
    INDETERMINATE: int = 3
    INVALID: int = 2
    TRUE: int = 0


# #[EOF]#######################################################################
