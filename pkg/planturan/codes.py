"""
Process exit codes for the command line, so shell pipelines can branch on verification outcomes
"""

from __future__ import annotations
import collections

from .errors import GuardError, NotPlanarError, PatternFoundError


def _not_implemented(*_, **__):
    raise NotImplementedError("Cannot instantiate this class")


class CodeTable(type):
    """
    Metaclass for uninstantiable tables of annotated, unique, non-negative int constants
    Tables may not be modified after creation
    """

    def __new__(mcs, name, bases, attrs, **kwargs):
        for bad in ("__init__", "__new__"):
            if bad in attrs:
                raise AttributeError("Cannot define __init__ or __new__")
            attrs[bad] = _not_implemented
        public = {i: k for i, k in attrs.items() if not i.startswith("_")}
        cls = type.__new__(mcs, name, bases, attrs, **kwargs)
        annotations = cls.__annotations__
        if bad := set(public) ^ set(annotations):
            raise ValueError(f"Every code must be annotated and assigned: {bad}")
        if bad := {i for i, k in public.items() if not isinstance(k, int) or k < 0}:
            raise TypeError(f"Codes must be non-negative ints: {bad}")
        counts = collections.Counter(public.values())
        if dups := {i: k for i, k in public.items() if counts[k] > 1}:
            raise ValueError(f"Duplicate codes: {dups}")
        type.__setattr__(cls, "_names", {k: i for i, k in public.items()})
        return cls

    def name_of(cls, code: int) -> str:
        return cls._names[code]

    def __delattr__(cls, *_):
        raise AttributeError("This class cannot be modified")

    def __setattr__(cls, *_):
        raise AttributeError("This class cannot be modified")


class ExitCode(metaclass=CodeTable):
    OK: int = 0
    USAGE: int = 1
    GUARD: int = 2
    PATTERN_FOUND: int = 3
    NOT_PLANAR: int = 4


def exit_code_for(e: BaseException) -> int:
    """
    :return: The exit code reporting e; anything unrecognized is a usage failure
    """
    if isinstance(e, GuardError):
        return ExitCode.GUARD
    if isinstance(e, PatternFoundError):
        return ExitCode.PATTERN_FOUND
    if isinstance(e, NotPlanarError):
        return ExitCode.NOT_PLANAR
    return ExitCode.USAGE
