"""Counting noncrossing factorizations of a Coxeter element."""

import json

try:
    from . import _ncfact
except ImportError:  # development build: the extension sits beside the sources
    import _ncfact

_EXPORTED = (
    "BudgetExceeded",
    "Error",
    "Group",
    "IndexOutOfRange",
    "NoTableRow",
    "NonIntegerResult",
    "NotInNC",
    "NotLengthTwo",
    "ParseError",
    "RankTooSmall",
    "UnsupportedGroup",
    "deg_discriminant",
    "deg_jacobian",
    "export_table",
    "position_prefactor",
)
globals().update({name: getattr(_ncfact, name) for name in _EXPORTED})

__version__ = _ncfact.__version__


def info(group):
    return json.loads(_ncfact.info_json(group))


def verify(group, p_max=5, cache=None):
    return json.loads(_ncfact.verify_json(group, p_max, cache))


def count(group, kind, argument=""):
    return json.loads(_ncfact.count_json(group, kind, str(argument)))


def table(target):
    return json.loads(_ncfact.table_json(target))
