# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring,unused-variable
import unittest

from planturan.codes import CodeTable, ExitCode, exit_code_for
from planturan.errors import FormatError, GuardError, NotPlanarError, PatternFoundError
from planturan.graph import DoubleStarWitness


class TestCodeTable(unittest.TestCase):

    def test_valid(self) -> None:
        class Codes(metaclass=CodeTable):
            A: int = 0
            B: int = 7

        self.assertEqual(7, Codes.B)
        self.assertEqual("A", Codes.name_of(0))

    def test_dupe(self) -> None:
        with self.assertRaises(ValueError):

            class Codes(metaclass=CodeTable):
                A: int = 1
                B: int = 1

    def test_annotations(self) -> None:
        with self.assertRaises(ValueError):

            class Unannotated(metaclass=CodeTable):
                A = 1

        with self.assertRaises(ValueError):

            class Unassigned(metaclass=CodeTable):
                A: int

        with self.assertRaises(TypeError):

            class Negative(metaclass=CodeTable):
                A: int = -1

        with self.assertRaises(TypeError):

            class Text(metaclass=CodeTable):
                A: str = "a"

    def test_instantiation(self) -> None:
        with self.assertRaises(AttributeError):

            class WithInit(metaclass=CodeTable):
                A: int = 1

                def __init__(self):
                    pass

        with self.assertRaises(NotImplementedError):
            ExitCode()

    def test_frozen(self) -> None:
        with self.assertRaises(AttributeError):
            ExitCode.OK = 5  # type: ignore[misc]
        with self.assertRaises(AttributeError):
            del ExitCode.OK
        self.assertEqual(0, ExitCode.OK)


class TestExitCodes(unittest.TestCase):

    def test_values(self) -> None:
        codes = (ExitCode.OK, ExitCode.USAGE, ExitCode.GUARD, ExitCode.PATTERN_FOUND, ExitCode.NOT_PLANAR)
        self.assertEqual((0, 1, 2, 3, 4), codes)
        self.assertEqual("NOT_PLANAR", ExitCode.name_of(4))

    def test_mapping(self) -> None:
        witness = DoubleStarWitness(0, 1, frozenset({2, 3, 4}), frozenset({5, 6, 7}))
        self.assertEqual(ExitCode.GUARD, exit_code_for(GuardError("big")))
        self.assertEqual(ExitCode.PATTERN_FOUND, exit_code_for(PatternFoundError(witness)))
        self.assertEqual(ExitCode.NOT_PLANAR, exit_code_for(NotPlanarError()))
        self.assertEqual(ExitCode.USAGE, exit_code_for(FormatError("bad")))
        self.assertEqual(ExitCode.USAGE, exit_code_for(ValueError()))


if __name__ == "__main__":
    unittest.main()
