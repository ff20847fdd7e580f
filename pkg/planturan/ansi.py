from __future__ import annotations
from enum import Enum, unique, auto
from functools import cache
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Self


MODIFIERS = ("bold", "dim", "italic", "underline")

_PREFIX = "\033["


@unique
class PureColor(Enum):
    """
    The eight base ansi foreground colors plus the terminal default
    """

    black = 30
    red = auto()
    green = auto()
    yellow = auto()
    blue = auto()
    magenta = auto()
    cyan = auto()
    white = auto()
    default = 39


class _ColorMeta(type):
    """
    Class-level __getattr__ so that Color.bold_green builds a color
    """

    def __getattr__(cls, item: str) -> "Color":
        try:
            return cls(item)
        except ValueError as e:
            raise AttributeError(str(e)) from e


class Color(metaclass=_ColorMeta):
    """
    An ansi style; calling it on a string wraps the string in the style
    Names are "_" separated modifiers and at most one color, optionally preceded by "bright"
    Examples:
        Color.red
        Color.bold_green
        Color.dim
        Color.bright_magenta
    """

    __slots__ = ("code",)

    RESET: str = f"{_PREFIX}0m"

    def __init__(self, name: str = "", *, code: str = "") -> None:
        if name and code:
            raise ValueError("name and code may not both be passed")
        if code and (not code.startswith(_PREFIX) or not code.endswith("m")):
            raise ValueError(f"Invalid ansi color code: {code!r}")
        self.code: str = code or _parse(name)

    @classmethod
    def indexed(cls, offset: int) -> Self:
        """
        :return: The base color black + offset, wrapping around the eight colors
        """
        return cls(code=f"{_PREFIX}{PureColor.black.value + offset % 8}m")

    def __call__(self, string: str) -> str:
        return f"{self.code}{string}{self.RESET}"

    def __add__(self, other: Self) -> Self:
        if not isinstance(other, type(self)):
            raise TypeError("Cannot add non-Color to Color")
        return type(self)(code=f"{self.code[:-1]};{other.code[len(_PREFIX):]}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, type(self)) and self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __repr__(self) -> str:
        return f"<Color {self.code!r}>"


@cache
def _parse(name: str) -> str:
    ints: list[int] = []
    bright = False
    color_seen = False
    for word in (i for i in name.lower().split("_") if i):
        if word in MODIFIERS:
            ints.append(MODIFIERS.index(word) + 1)
        elif word == "bright":
            bright = True
        elif word in PureColor.__members__:
            if color_seen:
                raise ValueError(f"Multiple colors specified in {name!r}")
            color_seen = True
            ints.append(PureColor[word].value + (60 if bright else 0))
        else:
            raise ValueError(f"Unknown color or modifier {word!r} in {name!r}")
    if bright and not color_seen:
        raise ValueError(f"bright needs a color in {name!r}")
    if not ints:
        ints.append(0)
    return f"{_PREFIX}{';'.join(str(i) for i in ints)}m"
