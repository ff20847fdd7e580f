# pylint: disable=missing-module-docstring,missing-class-docstring,missing-function-docstring
import unittest

from planturan.ansi import PureColor, Color


class TestColor(unittest.TestCase):

    def test_pure(self) -> None:
        for name, c in PureColor.__members__.items():
            self.assertEqual(f"\033[{c.value}mx\033[0m", getattr(Color, name)("x"))

    def test_bright(self) -> None:
        self.assertEqual("\033[91mx\033[0m", Color.bright_red("x"))
        self.assertEqual("\033[1;92mx\033[0m", Color.bold_bright_green("x"))

    def test_modifiers(self) -> None:
        self.assertEqual("\033[1;34mx\033[0m", Color.bold_blue("x"))
        self.assertEqual("\033[2mx\033[0m", Color.dim("x"))
        self.assertEqual("\033[3;4;39mx\033[0m", Color.italic_underline_default("x"))

    def test_add(self) -> None:
        self.assertEqual(Color.red + Color.dim, Color(code="\033[31;2m"))
        with self.assertRaises(TypeError):
            _ = Color.red + "dim"  # type: ignore[operator]

    def test_indexed(self) -> None:
        self.assertEqual(Color.green, Color.indexed(2))
        self.assertEqual(Color.black, Color.indexed(8))

    def test_errors(self) -> None:
        for bad in ("red_blue", "bright", "sparkly_red"):
            with self.assertRaises(ValueError):
                Color(bad)
        with self.assertRaises(ValueError):
            Color("red", code="\033[31m")
        with self.assertRaises(ValueError):
            Color(code="31")
        with self.assertRaises(AttributeError):
            _ = Color.not_a_color


if __name__ == "__main__":
    unittest.main()
