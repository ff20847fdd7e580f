from __future__ import annotations
from logging import CRITICAL, ERROR, WARNING, INFO, DEBUG, Formatter
from typing import TYPE_CHECKING, TextIO
from zlib import adler32
from copy import copy

from ..ansi import Color

if TYPE_CHECKING:
    from logging import LogRecord


class CuteFormatter(Formatter):
    """
    A log formatter for the command line: colored level names, a stable color per logger,
    and dimmed records below dim_level
    """

    __slots__ = ("colored", "_cmap", "_lvl_cmap", "_dim_level", "_widths")
    DEFAULT_WIDTHS: dict[str, int] = {"cute_levelname": 8, "cute_name": 22}
    DEFAULT_LEVEL_COLORS: dict[int, Color] = {
        INFO: Color.blue,
        WARNING: Color.yellow,
        ERROR: Color.red,
        CRITICAL: Color.bold_bright_red,
    }

    # pylint: disable=too-many-arguments
    def __init__(
        self,
        fmt: str = "%(cute_levelname)s | %(cute_name)s | %(cute_message)s",
        *,
        colored: bool = True,
        dim_level: int = DEBUG,
        colors: dict[str, Color] | None = None,
        level_colors: dict[int, Color] | None = None,
        widths: dict[str, int] | None = None,
        **kwargs,
    ) -> None:
        """
        Pad cute_ fields via widths rather than in fmt, since padding must ignore color codes
        :param colored: If False, no colors are emitted
        :param dim_level: Records below this level are dimmed
        :param colors: Fixed colors per logger name; other loggers get a color hashed from their name
        :param level_colors: Merged over DEFAULT_LEVEL_COLORS; a level uses the closest entry at or below it
        :param widths: Minimum widths of the cute_ fields
        """
        super().__init__(fmt, **kwargs)
        self._dim_level: int = dim_level
        self._cmap: dict[str, Color] = dict(colors or {})
        self._lvl_cmap: dict[int, Color] = self.DEFAULT_LEVEL_COLORS | (level_colors or {})
        self._widths: dict[str, int] = self.DEFAULT_WIDTHS | (widths or {})
        if any(not i.startswith("cute_") for i in self._widths):
            raise ValueError("widths must only contain cute_ fields")
        self.colored: bool = colored

    @classmethod
    def for_stream(cls, stream: TextIO, *, color: bool = True, **kwargs) -> CuteFormatter:
        """
        :return: A formatter that colors only when stream is a terminal and color is allowed
        """
        isatty = getattr(stream, "isatty", None)
        return cls(colored=color and isatty is not None and isatty(), **kwargs)

    def _name_color(self, name: str) -> Color:
        if (ret := self._cmap.get(name)) is not None:
            return ret
        c = adler32(name.encode()) % 7
        return Color.indexed(c) if c else Color.default

    def format(self, record: LogRecord) -> str:
        w = self._widths.get
        levelname = record.levelname.ljust(w("cute_levelname", 0))
        name = record.name.ljust(w("cute_name", 0))
        message = record.getMessage().ljust(w("cute_message", 0))
        if self.colored:
            dim = record.levelno < self._dim_level
            below = [i for i in self._lvl_cmap if i <= record.levelno]
            col: Color | None = self._lvl_cmap[max(below)] if below else None
            if dim:
                col = Color.dim if col is None else col + Color.dim
            if col is not None:
                levelname = col(levelname)
            col = self._name_color(record.name)
            if dim:
                col += Color.dim
            name, message = col(name), col(message)
        new = copy(record)
        new.__dict__.update({"cute_levelname": levelname, "cute_name": name, "cute_message": message})
        return super().format(new)
