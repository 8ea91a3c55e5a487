"""Shared test fixtures: frozen golden coefficients and independent oracles.

The golden coefficient tables below are frozen reference values for the six
builtin patterns (ascending degree order, entry i = coefficient of n**i).
`falling_from_roots` expands n(n-1)...(n-k+1) through elementary symmetric
polynomials of the roots, a route entirely separate from the package's
repeated-multiplication implementation.
"""

from __future__ import annotations

from fractions import Fraction

from motifmoments import RationalPolynomial

F = Fraction

GOLDEN_MEANS = {
    "node": (0, 1),
    "edge": (0, F(-1, 4), F(1, 4)),
    "wedge": (0, F(1, 4), F(-3, 8), F(1, 8)),
    "triangle": (0, F(1, 24), F(-1, 16), F(1, 48)),
    "square": (0, F(-3, 64), F(11, 128), F(-3, 64), F(1, 128)),
    "k4": (0, F(-1, 256), F(11, 1536), F(-1, 256), F(1, 1536)),
}

GOLDEN_VARIANCES = {
    "node": (),
    "edge": (0, F(-1, 8), F(1, 8)),
    "wedge": (0, F(-7, 16), F(29, 32), F(-19, 32), F(1, 8)),
    "triangle": (0, F(-1, 96), F(1, 32), F(-11, 384), F(1, 128)),
    "square": (
        0,
        F(-63, 1024),
        F(327, 2048),
        F(-163, 1024),
        F(161, 2048),
        F(-5, 256),
        F(1, 512),
    ),
    "k4": (
        0,
        F(-11, 16384),
        F(115, 98304),
        F(-73, 98304),
        F(19, 49152),
        F(-17, 98304),
        F(1, 32768),
    ),
}

GOLDEN_COV_EDGE_TRIANGLE = (0, F(1, 16), F(-3, 32), F(1, 32))


def coeffs(poly: RationalPolynomial) -> tuple[Fraction, ...]:
    return poly.coeffs


def as_poly(values) -> RationalPolynomial:
    return RationalPolynomial(values)


def falling_from_roots(k: int) -> RationalPolynomial:
    """Independent expansion of the falling factorial via its roots 0..k-1:
    the coefficient of n**(k-j) is (-1)**j times the j-th elementary
    symmetric polynomial of the roots."""
    roots = list(range(k))
    elementary = [F(1)] + [F(0)] * k
    for root in roots:
        for j in range(k, 0, -1):
            elementary[j] += root * elementary[j - 1]
    out = [F(0)] * (k + 1)
    for j in range(k + 1):
        out[k - j] = (-1) ** j * elementary[j]
    return RationalPolynomial(out)


def parse_human(text: str) -> RationalPolynomial:
    """Parser for the CLI's human polynomial format (round-trip checking)."""
    text = text.strip()
    if text == "0":
        return RationalPolynomial()
    terms = text.replace(" - ", " + -").split(" + ")
    by_degree: dict[int, Fraction] = {}
    for term in terms:
        term = term.strip()
        negative = term.startswith("-")
        if negative:
            term = term[1:].strip()
        if " " in term:
            coeff_text, variable = term.split(" ", 1)
        elif term.startswith("n"):
            coeff_text, variable = "1", term
        else:
            coeff_text, variable = term, ""
        variable = variable.strip()
        if not variable:
            degree = 0
        elif variable == "n":
            degree = 1
        else:
            assert variable.startswith("n^"), f"bad term {term!r}"
            degree = int(variable[2:])
        value = Fraction(coeff_text)
        assert degree not in by_degree, f"duplicate degree in {text!r}"
        by_degree[degree] = -value if negative else value
    out = [F(0)] * (max(by_degree) + 1)
    for degree, value in by_degree.items():
        out[degree] = value
    return RationalPolynomial(out)
