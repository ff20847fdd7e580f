# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring
import logging
import unittest

from planturan.log import trace

from .base import CaptureBase


# mypy: disable_error_code="attr-defined"
class TestTrace(CaptureBase, unittest.TestCase):

    def test_install(self) -> None:
        """
        One test: installation mutates the logging module for the whole process
        """
        with self.assertRaises(ValueError):
            trace.install(value=0)
        with self.assertRaises(ValueError):
            trace.install(value=logging.DEBUG)
        level = trace.ensure_installed()
        self.assertEqual(trace.TRACE, level)
        self.assertEqual(level, trace.ensure_installed())
        self.assertEqual("TRACE", logging.getLevelName(level))
        self.assertEqual(level, logging.TRACE)
        with self.assertRaises(RuntimeError):
            trace.install()
        with self.capture("trace.logger", level=level) as lines:
            log = logging.getLogger("trace.logger")
            log.trace("kept")  # pylint: disable=no-member
            log.setLevel(logging.DEBUG)
            log.trace("dropped")  # pylint: disable=no-member
        self.assertEqual(["kept"], lines)
        trace.install(force=True)

    def test_level_below_debug(self) -> None:
        self.assertTrue(0 < trace.TRACE < logging.DEBUG)


if __name__ == "__main__":
    unittest.main()
