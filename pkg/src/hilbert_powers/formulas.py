"""Closed-form series and identities used as comparison targets for the engines."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .combinatorics import binomial, lattice_point_count
from .monomial_engine import HilbertData
from .monomials import count_degree

C = binomial


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def ci_series_general(degrees, s: int) -> HilbertData:
    """Series of S_n / Q^s for a regular sequence of the given degrees.

    H(i) = sum over a in N^n with |a| <= s-1 of H_{S/Q}(i - sum a_i d_i),
    where S/Q has series prod (1 + t + ... + t^(d_i - 1)).
    """
    degrees = tuple(int(d) for d in degrees)
    if any(d < 1 for d in degrees) or s < 1:
        raise ValueError("degrees must be >= 1 and s >= 1")
    n = len(degrees)
    base = [1]
    for d in degrees:
        base = _poly_mul(base, [1] * d)
    top = (s - 1) * max(degrees) + len(base) - 1
    dims = [0] * (top + 1)
    for a in product(range(s), repeat=n):
        if sum(a) > s - 1:
            continue
        shift = sum(x * d for x, d in zip(a, degrees))
        for i, h in enumerate(base):
            dims[i + shift] += h
    return HilbertData(n, s, dims)


def ci_quadric_series(n: int, s: int) -> HilbertData:
    if n < 1 or s < 1:
        raise ValueError("n and s must be >= 1")
    dims = [C(i + n - 1, n - 1) for i in range(2 * s)]
    for i in range(2 * s, 2 * s + n - 1):
        dims.append(sum(lattice_point_count(n, j) * C(n, i - 2 * j) for j in range(s)))
    return HilbertData(n, s, dims)


def example_ci_series(n: int, s: int, printed: bool = True) -> HilbertData:
    """The worked n = 2..5 quadric complete-intersection series.

    For n = 2 the printed row uses (s+1) for every low degree; ``printed=False``
    gives the specialization of the general formula, (i+1).
    """
    low = [C(i + n - 1, n - 1) for i in range(2 * s)]
    if n == 2:
        if printed:
            low = [s + 1] * (2 * s)
        tail = [s]
    elif n == 3:
        tail = [3 * C(s + 1, 2), C(s + 1, 2)]
    elif n == 4:
        tail = [C(s + 1, 3) + 6 * C(s + 2, 3), 4 * C(s + 2, 3), C(s + 2, 3)]
    elif n == 5:
        tail = [5 * C(s + 2, 4) + 10 * C(s + 3, 4), C(s + 2, 4) + 10 * C(s + 3, 4),
                5 * C(s + 3, 4), C(s + 3, 4)]
    else:
        raise ValueError("worked examples exist only for n = 2..5")
    return HilbertData(n, s, low + tail)


def cor27_sides(k: int, s: int) -> tuple:
    """Both sides of the k-th length identity (k = 1..4)."""
    if k == 1:
        return C(2 * s + 1, 2) + s, 4 * C(s + 1, 2)
    if k == 2:
        return C(2 * s + 2, 3) + 4 * C(s + 1, 2), 8 * C(s + 2, 3)
    if k == 3:
        return C(2 * s + 3, 4) + C(s + 1, 3) + 11 * C(s + 2, 3), 16 * C(s + 3, 4)
    if k == 4:
        return C(2 * s + 4, 5) + 6 * C(s + 2, 4) + 26 * C(s + 3, 4), 32 * C(s + 4, 5)
    raise ValueError(f"k must be 1..4, got {k}")


def cor27_identity(k: int, s: int) -> bool:
    lhs, rhs = cor27_sides(k, s)
    return lhs == rhs


def conj31_sum(n: int, s: int, printed: bool) -> int:
    shift = 0 if printed else -1
    return sum((-1) ** j * 2 ** (n - 2 * j) * C(n - j, j) * C(s + n - j + shift, n - j)
               for j in range(n // 2 + 1))


def conj31_identity(n: int, s: int) -> dict:
    """Truth of C(2s-1+n, n) = sum_j ... under the printed and corrected binomial index."""
    lhs = C(2 * s - 1 + n, n)
    return {
        "lhs": lhs,
        "printed": conj31_sum(n, s, printed=True) == lhs,
        "corrected": conj31_sum(n, s, printed=False) == lhs,
    }


# -- catalog of stated series -----------------------------------------------

@dataclass(frozen=True)
class FormulaCase:
    identifier: str
    kind: str            # "generic" or "monomial"
    n: int
    threshold: int       # stated validity: s >= threshold
    status: str          # "theorem" or "conjecture"
    printed_coefficients: tuple | None
    r: int | None = None
    pairs: tuple = ()
    description: str = ""


@dataclass(frozen=True)
class KnownSeries:
    """A stated series: full low part plus the part in degrees >= 2s.

    ``interesting`` lists (degree, value) when the statement gives degrees;
    otherwise only ``interesting_total`` is stated.
    """

    case: str
    n: int
    s: int
    interesting_total: int
    interesting: tuple | None

    @property
    def head(self) -> tuple:
        return tuple(count_degree(self.n, i) for i in range(2 * self.s))

    @property
    def length(self) -> int:
        return sum(self.head) + self.interesting_total

    def as_hilbert_data(self) -> HilbertData:
        if self.interesting is None:
            raise ValueError(f"{self.case} states only the total in degrees >= 2s")
        dims = list(self.head)
        for deg, val in self.interesting:
            while len(dims) <= deg:
                dims.append(0)
            dims[deg] += val
        return HilbertData(self.n, self.s, dims)


def _frac_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"stated formula is not integral here: {x}")
    return x.numerator


def _conj34_case_terms(k: int, s: int) -> list:
    if k == 1:
        return [(0, _frac_int(Fraction(2 * s**3 + 5 * s**2 + 3 * s, 2))), (1, 2 * C(s + 2, 3))]
    if k == 2:
        return [(0, 4 * C(s + 2, 3)), (1, C(s + 1, 2))]
    if k == 3:
        return [(0, 4 * C(s + 2, 3))]
    if k == 4:
        return [(0, _frac_int(Fraction(s * (s + 1) * (4 * s + 5), 6)))]
    if k == 5:
        return [(0, s * (2 * s + 1)), (1, C(s + 1, 2))]
    if k == 6:
        return [(0, s * (2 * s + 1))]
    if k == 7:
        return [(0, 2 * s)]
    if k == 8:
        return [(0, 2 * C(s + 1, 2))]
    if k == 9:
        return [(0, s)]
    raise ValueError(k)


CONJ34_PAIRS = {
    1: ((1, 2),),
    2: ((1, 2), (1, 3)),
    3: ((1, 2), (3, 4)),
    4: ((1, 2), (1, 3), (2, 3)),
    5: ((1, 2), (1, 3), (1, 4)),
    6: ((1, 2), (2, 3), (3, 4)),
    7: ((1, 2), (2, 3), (3, 4), (1, 4)),
    8: ((1, 2), (1, 3), (1, 4), (2, 3)),
    9: ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4)),
}

CONJ34_PRINTED = {
    1: (16, 4), 2: (16, 16, 2), 3: (16, 16, 1), 4: (16, 8), 5: (16, 12, 6),
    6: (16, 12, 5), 7: (16, 12, 1, 2), 8: (16, 12, 3), 9: (16, 12, 1, 1),
}


def _catalog() -> dict:
    cases = [
        FormulaCase("thm-R34", "generic", 3, 1, "theorem", (8, 4, 3, 4), r=4,
                    description="R_{3,4,s}: interesting part (3s-1) t^{2s}"),
        FormulaCase("thm-R35", "generic", 3, 2, "theorem", None, r=5,
                    description="R_{3,5,s}: I^s = (x,y,z)^{2s} for s >= 2"),
        FormulaCase("conj-R45", "generic", 4, 4, "conjecture", (16, 12, 21, 35, 35), r=5,
                    description="R_{4,5,s}: interesting total 10s^2 - 25s + 35"),
        FormulaCase("conj-R46", "generic", 4, 4, "conjecture", (16, 12, 1, 10), r=6,
                    description="R_{4,6,s}: interesting total 10s"),
        FormulaCase("conj-R47", "generic", 4, 3, "conjecture", (16, 12, 1), r=7,
                    description="R_{4,7,s}: I^s = m^{2s}"),
        FormulaCase("conj-R59", "generic", 5, 4, "conjecture", (32, 32, 6), r=9,
                    description="R_{5,9,s}: I^s = m^{2s}"),
        FormulaCase("thm33-case1", "monomial", 3, 1, "theorem", (8, 6), pairs=((1, 2),),
                    description="I_{3,{x1x2}}: interesting part 2C(s+1,2) t^{2s}"),
        FormulaCase("thm33-case2", "monomial", 3, 1, "theorem", (8, 4, 1),
                    pairs=((1, 2), (1, 3)),
                    description="I_{3,{x1x2,x1x3}}: interesting part s t^{2s}"),
    ]
    for k, pairs in CONJ34_PAIRS.items():
        edges = ",".join(f"x{i}x{j}" for i, j in pairs)
        cases.append(FormulaCase(f"conj34-case{k}", "monomial", 4, 1, "conjecture",
                                 CONJ34_PRINTED[k], pairs=pairs,
                                 description=f"I_{{4,{{{edges}}}}}"))
    return {c.identifier: c for c in cases}


CATALOG = _catalog()


def known_series(case: str | FormulaCase, s: int) -> KnownSeries:
    """Evaluate a stated series at s; thresholds are metadata, not enforced here."""
    if isinstance(case, FormulaCase):
        case = case.identifier
    if case not in CATALOG:
        raise KeyError(f"unknown formula case {case!r}; known: {sorted(CATALOG)}")
    if s < 1:
        raise ValueError("s must be >= 1")
    c = CATALOG[case]
    n = c.n
    if case == "thm-R34":
        terms = [(0, 3 * s - 1)]
    elif case in ("thm-R35", "conj-R47", "conj-R59"):
        terms = []
    elif case == "conj-R45":
        return KnownSeries(case, n, s, 10 * s * s - 25 * s + 35, None)
    elif case == "conj-R46":
        return KnownSeries(case, n, s, 10 * s, None)
    elif case == "thm33-case1":
        terms = [(0, 2 * C(s + 1, 2))]
    elif case == "thm33-case2":
        terms = [(0, s)]
    else:
        terms = _conj34_case_terms(int(case.removeprefix("conj34-case")), s)
    interesting = tuple((2 * s + off, v) for off, v in terms if v != 0)
    return KnownSeries(case, n, s, sum(v for _, v in interesting), interesting)


def r35_printed_series(s: int) -> HilbertData:
    """The R_{3,5,s} series exactly as printed, with C(2i+2, 2) in degree i < 2s."""
    return HilbertData(3, s, [C(2 * i + 2, 2) for i in range(2 * s)])


def truncated_generic_series(n: int, r: int) -> tuple:
    """(1+t)^n (1-t^2)^(r-n), cut just before the first nonpositive coefficient."""
    poly = [1]
    for _ in range(n):
        poly = _poly_mul(poly, [1, 1])
    for _ in range(r - n):
        poly = _poly_mul(poly, [1, 0, -1])
    out = []
    for c in poly:
        if c <= 0:
            break
        out.append(c)
    return tuple(out)
