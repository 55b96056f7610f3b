"""The SL(2) bridge: Khare's deformation polynomial and the A_plus_inf weight.

The Casimir acts on the (i+1)-dimensional sl2-irreducible by
``b_i = i(i+2)/8``; a deformation polynomial ``f`` corresponds to the weight
``lambda_i = (i+1)(1 + f(b_i))`` on A_plus_inf.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .roots import Weight
from .scalars import to_scalar


@dataclass(frozen=True)
class CasimirPolynomial:
    """``f(x) = coeffs[0] + coeffs[1] x + ...`` with rational coefficients.

    The usual convention has no constant term; a nonzero constant is
    accepted since only ``1 + f`` ever enters the formulas.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_rational(c) for c in self.coeffs))

    @classmethod
    def parse(cls, text: str, constant=0) -> "CasimirPolynomial":
        """From a list of the coefficients of ``x, x^2, ...``: ``"-4,0"`` is ``-4x``.

        The constant term is passed separately.
        """
        parts = [p.strip() for p in text.replace(";", ",").split(",") if p.strip()]
        return cls((constant, *parts))

    @property
    def has_constant_term(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] != 0

    def __call__(self, x) -> Fraction:
        return evaluate_poly(self.coeffs, x)


def _rational(c) -> Fraction:
    v = to_scalar(c)
    if not isinstance(v, Fraction):
        raise ValueError("Casimir polynomial coefficients must be rational")
    return v


def evaluate_poly(coeffs: Sequence, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def casimir_scalar(i: int) -> Fraction:
    """``b_i = i(i+2)/8``."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    return Fraction(i * (i + 2), 8)


def khare_lambda(f) -> Weight:
    """The A_plus_inf weight ``lambda_i = (i+1)(1 + f(b_i))``."""
    f = f if isinstance(f, CasimirPolynomial) else CasimirPolynomial(tuple(f))
    return Weight.khare(f.coeffs)


@dataclass(frozen=True, order=True)
class VrsModule:
    """``V(r, s) = V(s) + ... + V(r)`` as an sl2-module."""

    s: int
    r: int

    @property
    def dimension(self) -> int:
        return sum(i + 1 for i in range(self.s, self.r + 1))


def _khare_term(f: CasimirPolynomial, i: int) -> Fraction:
    return (i + 1) * (1 + f(casimir_scalar(i)))


def enumerate_Vrs(f, r_max: int) -> list[VrsModule]:
    """All ``(s, r)`` with ``r <= r_max`` meeting Khare's two conditions.

    The full sum over ``s..r`` vanishes and every tail sum over ``k..r``
    with ``s < k <= r`` is nonzero.
    """
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    f = f if isinstance(f, CasimirPolynomial) else CasimirPolynomial(tuple(f))
    terms = [_khare_term(f, i) for i in range(r_max + 1)]
    out = []
    for r in range(r_max + 1):
        tail = Fraction(0)
        tails_ok = True
        # Walk s downward from r; tail sums over k..r for k > s are the
        # sums seen before reaching s.
        for s in range(r, -1, -1):
            total = tail + terms[s]
            if total == 0 and tails_ok:
                out.append(VrsModule(s, r))
            tails_ok = tails_ok and total != 0
            tail = total
    return sorted(out, key=lambda m: (m.r, m.s))


def morita_params(c, k, group: str = "SL2") -> tuple[Weight, Fraction]:
    """Parameter dictionary ``(c, k) -> (lambda, nu)``.

    ``c`` is the deformation datum ``1 + f(Delta)`` given by its coefficient
    list in the Casimir (or as a :class:`CasimirPolynomial` for ``1 + f``).
    Returns ``(khare_lambda(f), 2k)``.  Only SL(2) is supported.
    """
    if group != "SL2":
        raise ValueError(f"only SL2 distributions are supported, got {group!r}")
    coeffs = list(c.coeffs if isinstance(c, CasimirPolynomial) else (_rational(x) for x in c))
    if not coeffs:
        coeffs = [Fraction(0)]
    f = CasimirPolynomial(tuple([coeffs[0] - 1] + coeffs[1:]))
    return khare_lambda(f), 2 * to_scalar(k)
