"""Hilbert data of S_n / I^s for I generated by r quadratic forms over Z/p.

Forms are either sampled uniformly at random (a stand-in for "general"
forms, valid off a proper closed set) or supplied explicitly.  The
dimension of (I^s)_d is the rank of the matrix whose rows are m*g for
every product g of s generators and every monomial m of degree d - 2s.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

from .errors import PreconditionError
from .linalg import DEFAULT_PRIME, PrimeFieldContext, SliceMatrix, rank_with_early_exit
from .monomial_engine import HilbertData
from .monomials import Monomial, count_degree, degree_exponents, degree_index

ALIASES = ("x", "y", "z", "w")
_ROW_BLOCK = 4096


@dataclass(frozen=True)
class QuadraticForm:
    n: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != count_degree(self.n, 2):
            raise ValueError(
                f"a quadric in {self.n} variables has {count_degree(self.n, 2)} coefficients, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    def terms(self) -> list:
        """Nonzero (coefficient, Monomial) pairs in canonical order."""
        return [(c, Monomial(e)) for c, e in zip(self.coeffs, degree_exponents(self.n, 2)) if c]

    def __str__(self) -> str:
        parts = []
        for c, m in self.terms():
            parts.append(str(m) if c == 1 else f"{c}*{m}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GenericIdealSpec:
    """An ideal of r quadrics: random when ``forms`` is None, else the given forms."""

    n: int
    r: int
    p: int = DEFAULT_PRIME
    seed: int = 0
    forms: tuple | None = None

    def __post_init__(self):
        if self.forms is not None:
            forms = tuple(self.forms)
            object.__setattr__(self, "forms", forms)
            if self.r != len(forms):
                raise ValueError(f"r={self.r} but {len(forms)} explicit forms were given")
            for f in forms:
                if f.n != self.n:
                    raise ValueError(f"form {f} does not live in {self.n} variables")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.r < self.n:
            raise ValueError(
                f"r={self.r} < n={self.n}: the quotient is not Artinian, refusing"
            )
        PrimeFieldContext(self.p)

    @classmethod
    def explicit(cls, n: int, forms, p: int = DEFAULT_PRIME) -> "GenericIdealSpec":
        forms = tuple(forms)
        return cls(n=n, r=len(forms), p=p, seed=0, forms=forms)

    @property
    def context(self) -> PrimeFieldContext:
        return PrimeFieldContext(self.p)

    @property
    def is_random(self) -> bool:
        return self.forms is None


def sample_forms(spec: GenericIdealSpec) -> list:
    if not spec.is_random:
        raise ValueError("sample_forms needs a spec with random forms")
    rng = np.random.default_rng([spec.seed & (2**64 - 1), spec.n, spec.r, spec.p])
    coeffs = rng.integers(0, spec.p, size=(spec.r, count_degree(spec.n, 2)), dtype=np.int64)
    return [QuadraticForm(spec.n, tuple(int(c) for c in row)) for row in coeffs]


def spec_forms(spec: GenericIdealSpec) -> list:
    if spec.is_random:
        return sample_forms(spec)
    return [QuadraticForm(f.n, tuple(c % spec.p for c in f.coeffs)) for f in spec.forms]


# -- form parsing ---------------------------------------------------------

class FormSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z]\w*)|(?P<op>[\^*+-]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormSyntaxError("unexpected character", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    return tokens


def _variable_index(name: str, n: int, text: str, pos: int) -> int:
    m = re.fullmatch(r"x(\d+)", name)
    if m:
        i = int(m.group(1))
        if 1 <= i <= n:
            return i - 1
        raise FormSyntaxError(f"variable {name} out of range x1..x{n}", text, pos)
    if n <= len(ALIASES) and name in ALIASES[:n]:
        return ALIASES.index(name)
    raise FormSyntaxError(f"unknown variable {name!r}", text, pos)


def parse_terms(n: int, text: str) -> list:
    """Parse a sum of integer-coefficient monomials into (coefficient, exponents) pairs."""
    tokens = _tokenize(text)
    if not tokens:
        raise FormSyntaxError("empty expression", text, 0)
    terms = []
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, len(text))

    while i < len(tokens) or not terms:
        sign = 1
        kind, val, pos = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif terms:
            raise FormSyntaxError("expected '+' or '-'", text, pos)
        coeff = sign
        exps = [0] * n
        expect_factor = True
        while True:
            kind, val, pos = peek()
            if expect_factor:
                if kind == "int":
                    coeff *= int(val)
                    i += 1
                elif kind == "var":
                    v = _variable_index(val, n, text, pos)
                    i += 1
                    power = 1
                    if peek()[0] == "op" and peek()[1] == "^":
                        i += 1
                        k2, v2, p2 = peek()
                        if k2 != "int":
                            raise FormSyntaxError("expected exponent", text, p2)
                        power = int(v2)
                        i += 1
                    exps[v] += power
                else:
                    raise FormSyntaxError("expected coefficient or variable", text, pos)
                expect_factor = False
            elif kind == "op" and val == "*":
                i += 1
                expect_factor = True
            elif kind == "var" or kind == "int":
                raise FormSyntaxError("missing '*'", text, pos)
            else:
                break
        terms.append((coeff, tuple(exps), pos))
        if i >= len(tokens):
            break
    return [(c, e) for c, e, _ in terms]


def parse_form(n: int, text: str, context: PrimeFieldContext | None = None) -> QuadraticForm:
    """Parse e.g. ``"x*z + 2*y*z"`` into a quadric with coefficients reduced mod p."""
    p = (context or PrimeFieldContext()).p
    index = degree_index(n, 2)
    coeffs = [0] * len(index)
    for coeff, exps in parse_terms(n, text):
        if sum(exps) != 2:
            raise FormSyntaxError(
                f"non-quadratic term {Monomial(exps)} (degree {sum(exps)})", text, 0
            )
        k = index[exps]
        coeffs[k] = (coeffs[k] + coeff) % p
    return QuadraticForm(n, tuple(coeffs))


# -- slice machinery ------------------------------------------------------

@lru_cache(maxsize=None)
def _shift(n: int, m: tuple, d: int) -> np.ndarray:
    """Column map: index of u in degree d -> index of u*m in degree d + deg(m)."""
    target = degree_index(n, d + sum(m))
    return np.array(
        [target[tuple(a + b for a, b in zip(u, m))] for u in degree_exponents(n, d)],
        dtype=np.intp,
    )


@lru_cache(maxsize=64)
def _power_products(spec: GenericIdealSpec, s: int) -> np.ndarray:
    """Rows f_{a_1} * ... * f_{a_s}, one per multiset a_1 <= ... <= a_s, in degree 2s."""
    n, p = spec.n, spec.p
    forms = np.array([f.coeffs for f in spec_forms(spec)], dtype=np.int64) % p
    quad = degree_exponents(n, 2)
    if s == 1:
        return forms
    prev = _power_products(spec, s - 1)
    prev_index = {ms: k for k, ms in enumerate(combinations_with_replacement(range(spec.r), s - 1))}
    multisets = list(combinations_with_replacement(range(spec.r), s))
    parents = np.array([prev_index[ms[:-1]] for ms in multisets], dtype=np.intp)
    last = np.array([ms[-1] for ms in multisets], dtype=np.intp)
    base = prev[parents]
    coeff = forms[last]
    out = np.zeros((len(multisets), count_degree(n, 2 * s)), dtype=np.int64)
    for q, m in enumerate(quad):
        cols = _shift(n, m, 2 * s - 2)
        out[:, cols] = (out[:, cols] + (coeff[:, q:q + 1] * base) % p) % p
    return out


def _slice_rows(spec: GenericIdealSpec, s: int, d: int):
    n = spec.n
    products = _power_products(spec, s)
    ncols = count_degree(n, d)
    multipliers = degree_exponents(n, d - 2 * s)
    shifts = [_shift(n, m, 2 * s) for m in multipliers]
    chunk = max(1, _ROW_BLOCK // max(len(shifts), 1))
    for start in range(0, len(products), chunk):
        g = products[start:start + chunk]
        block = np.zeros((len(g), len(shifts), ncols), dtype=np.int64)
        for k, cols in enumerate(shifts):
            block[:, k, cols] = g
        yield block.reshape(len(g) * len(shifts), ncols)


def power_slice_dim(spec: GenericIdealSpec, s: int, d: int, backend: str | None = None) -> int:
    """dim_k (I^s)_d over Z/p for the forms described by ``spec``."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if d < 2 * s:
        return 0
    ncols = count_degree(spec.n, d)
    matrix = SliceMatrix(spec.context, ncols, _slice_rows(spec, s, d))
    return rank_with_early_exit(matrix, cap=ncols, backend=backend)


def hilbert_data_generic(spec: GenericIdealSpec, s: int, backend: str | None = None) -> HilbertData:
    """h_0..h_{2s+n-2} of S_n / I^s.

    Random forms contain a regular sequence, which bounds the top degree by
    2s+n-2.  Explicit forms need not, so for them the slice just above the
    bound is computed too and a nonzero value is a precondition failure.
    """
    n = spec.n
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    top = 2 * s + n - 2
    dims = [count_degree(n, d) for d in range(2 * s)]
    full = False
    last = top if spec.is_random else top + 1
    for d in range(2 * s, last + 1):
        if full:
            # (I^s)_{d-1} is everything, hence so is every later slice
            h = 0
        else:
            h = count_degree(n, d) - power_slice_dim(spec, s, d, backend)
            full = h == 0
        if d > top:
            if h:
                raise PreconditionError(
                    f"quotient by the given forms is nonzero in degree {d} > 2s+n-2; "
                    "the forms do not define an Artinian quotient within the degree bound"
                )
            break
        dims.append(h)
    return HilbertData(n, s, dims)


def is_power_full(spec: GenericIdealSpec, s: int, backend: str | None = None) -> bool:
    """True iff I^s = (x_1, ..., x_n)^{2s}."""
    return power_slice_dim(spec, s, 2 * s, backend) == count_degree(spec.n, 2 * s)


@dataclass
class PhiTable:
    n: int
    s_max: int
    seeds: tuple
    p: int
    minimal_s: dict = field(default_factory=dict)
    per_trial: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    @property
    def minimal_r(self):
        hits = [r for r, s in sorted(self.minimal_s.items()) if s is not None]
        return hits[0] if hits else None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s_max": self.s_max,
            "prime": str(self.p),
            "seeds": [str(x) for x in self.seeds],
            "table": {str(r): (None if s is None else s) for r, s in sorted(self.minimal_s.items())},
            "per_trial": {str(r): v for r, v in sorted(self.per_trial.items())},
            "minimal_r": self.minimal_r,
            "warnings": list(self.warnings),
        }


def phi_probe(n: int, r_range, s_max: int, trials: int = 2, p: int = DEFAULT_PRIME,
              seed: int = 0, backend: str | None = None) -> PhiTable:
    """For each r, the least s <= s_max with I^s = m^{2s} for r random quadrics."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    seeds = tuple(seed + t for t in range(trials))
    table = PhiTable(n=n, s_max=s_max, seeds=seeds, p=p)
    for r in r_range:
        found = []
        for sd in seeds:
            spec = GenericIdealSpec(n=n, r=r, p=p, seed=sd)
            hit = next((s for s in range(1, s_max + 1) if is_power_full(spec, s, backend)), None)
            found.append(hit)
        table.per_trial[r] = found
        table.minimal_s[r] = found[0]
        if len(set(found)) > 1:
            table.warnings.append(f"r={r}: trials disagree {found}")
    return table
