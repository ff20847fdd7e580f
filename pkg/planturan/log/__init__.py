from .cute import CuteFormatter
from .trace import TRACE
from . import trace
