"""Dimensional matrices of the worked examples, as (bases, heads, dependent)."""

MATRIX1 = (("B1", "B2"), (("q", (1, 0)), ("q1", (1, 1))), "q")
MATRIX2 = (("B1", "B2"), (("q", (1, 0)), ("q1", (1, 1)), ("q2", (2, 0))), "q")
MATRIX3 = (("B1", "B2"), (("q", (1, 0)), ("q1", (1, 1)), ("q2", (2, 0)), ("q3", (0, 1))), "q")
CIRCLE = (("L",), (("a", (2,)), ("d", (1,))), "a")
PENDULUM = (
    ("L", "T", "M"),
    (("t", (0, 1, 0)), ("l", (1, 0, 0)), ("m", (0, 0, 1)), ("theta", (0, 0, 0)), ("g", (1, -2, 0))),
    "t",
)
RECTANGLE = (("L",), (("a", (2,)), ("l", (1,)), ("s", (1,))), "a")
ELLIPSE = (("L",), (("a", (2,)), ("t", (1,)), ("c", (1,))), "a")
MASS = (("M",), (("c", (1,)), ("a", (1,)), ("b", (1,))), "c")
KEPLER_NO_G = (
    ("L", "T", "M"),
    (("t", (0, 1, 0)), ("d", (1, 0, 0)), ("m1", (0, 0, 1)), ("m2", (0, 0, 1))),
    "t",
)
KEPLER = (
    ("L", "T", "M"),
    (("t", (0, 1, 0)), ("d", (1, 0, 0)), ("m1", (0, 0, 1)), ("m2", (0, 0, 1)), ("G", (3, -2, -1))),
    "t",
)
KOCH = (("L",), (("l", (1,)), ("d", (1,)), ("eta", (1,))), "l")

ALL = {
    "matrix1": MATRIX1,
    "matrix2": MATRIX2,
    "matrix3": MATRIX3,
    "circle": CIRCLE,
    "pendulum": PENDULUM,
    "rectangle": RECTANGLE,
    "ellipse": ELLIPSE,
    "mass": MASS,
    "kepler_no_g": KEPLER_NO_G,
    "kepler": KEPLER,
    "koch": KOCH,
}
