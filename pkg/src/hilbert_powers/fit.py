"""Exact recovery of Hilbert coefficients from length samples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .combinatorics import basis_value, binomial
from .errors import FitError


@dataclass(frozen=True)
class CoefficientFit:
    """Signed Hilbert coefficients under l(s) = sum (-1)^i e_i C(s+n-i-1, n-i).

    ``s_onset`` is the least sampled s from which every later sample is
    reproduced exactly.  ``residual_witness`` holds (s, predicted, actual)
    for the last sample that the polynomial misses, if any.
    """

    n: int
    e: tuple
    s_onset: int
    residual_witness: tuple | None = None

    @property
    def integral(self) -> bool:
        return all(Fraction(x).denominator == 1 for x in self.e)

    def predict(self, s: int):
        return sum(x * basis_value(self.n, i, s) for i, x in enumerate(self.e))

    def trimmed(self) -> tuple:
        """Coefficient tuple with trailing zeros removed (at least e_0 kept)."""
        e = list(self.e)
        while len(e) > 1 and e[-1] == 0:
            e.pop()
        return tuple(e)


def _solve(matrix: list, rhs: list) -> list:
    """Exact Gaussian elimination over Q for a square nonsingular system."""
    size = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        piv = next(r for r in range(col, size) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[-1] for row in a]


def _normalize(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def fit(samples: Mapping[int, int], n: int) -> CoefficientFit:
    """Fit e_0..e_n on the last n+1 samples and extend backwards to find the onset.

    At least n+2 consecutive samples are required so that at least one sample
    independently confirms the fit.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    data = {int(s): _normalize(Fraction(v)) for s, v in samples.items()}
    if any(s < 1 for s in data):
        raise ValueError("samples must be indexed by s >= 1")
    ss = sorted(data)
    need = n + 2
    if len(ss) < need:
        raise FitError(f"need at least {need} samples for n={n}, got {len(ss)}")
    # use the longest run of consecutive s ending at the largest sample
    run = [ss[-1]]
    for s in reversed(ss[:-1]):
        if s != run[-1] - 1:
            break
        run.append(s)
    run.reverse()
    if len(run) < need:
        raise FitError(
            f"need at least {need} consecutive samples ending at s={ss[-1]}, got {len(run)}"
        )
    if all(data[s] == 0 for s in run):
        raise FitError("all samples are zero: no Artinian quotient has this length function")

    window = run[-(n + 1):]
    matrix = [[basis_value(n, i, s) for i in range(n + 1)] for s in window]
    e = tuple(_normalize(x) for x in _solve(matrix, [data[s] for s in window]))

    def predict(s):
        return sum(x * basis_value(n, i, s) for i, x in enumerate(e))

    onset = window[0]
    witness = None
    for s in reversed(run[: -(n + 1)]):
        pred = predict(s)
        if pred != data[s]:
            witness = (s, _normalize(Fraction(pred)), data[s])
            break
        onset = s
    if onset == window[0]:
        raise FitError(
            "non-polynomial tail: the fit on the last "
            f"{n + 1} samples does not reproduce s={witness[0]}",
            witness=witness,
        )
    return CoefficientFit(n=n, e=e, s_onset=onset, residual_witness=witness)


def conj31_coefficients(n: int) -> tuple:
    """Predicted coefficients of (x_1..x_n)^2: e_j = C(n-j, j) 2^(n-2j), zero past n/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return tuple(binomial(n - j, j) * 2 ** (n - 2 * j) if 2 * j <= n else 0
                 for j in range(n + 1))
