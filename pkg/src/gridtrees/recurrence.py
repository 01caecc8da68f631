"""Characteristic polynomials, minimal linear recurrences, generating
functions, and the empirical conjecture checks.

Everything is exact: characteristic polynomials come from the
Faddeev-LeVerrier iteration (integer matrices throughout, every division
exact), minimal recurrences from rational elimination on sliding windows of
the sequence, generating functions from the recurrence with a final series
expansion double-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    InsufficientTermsError,
    NoRecurrenceError,
    SizeLimitError,
)

MAX_CHARPOLY_DIM = 200


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending by power; () is zero."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.coefficients and self.coefficients[-1] == 0:
            raise DomainError("IntPolynomial: trailing zero coefficient")

    @staticmethod
    def from_coefficients(coeffs) -> "IntPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(int(c) for c in cs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial.from_coefficients(out)

    def divides_exactly(self, other: "IntPolynomial") -> bool:
        """True when self divides other over the integers (self monic)."""
        q, r = other.divmod_monic(self)
        return not r.coefficients

    def divmod_monic(self, divisor: "IntPolynomial"):
        """Quotient and remainder by a monic divisor; stays in Z[x]."""
        if not divisor.is_monic:
            raise DomainError("divmod_monic: divisor must be monic")
        rem = list(self.coefficients)
        dd = divisor.degree
        quot = [0] * max(0, len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            quot[top - dd] = c
            for j, b in enumerate(divisor.coefficients):
                rem[top - dd + j] -= c * b
        return (
            IntPolynomial.from_coefficients(quot),
            IntPolynomial.from_coefficients(rem),
        )

    def __str__(self) -> str:
        return format_polynomial(self.coefficients)


def format_polynomial(coeffs, var: str = "x") -> str:
    """Ascending-power text with explicit signs, e.g. "1 - 4*x + x^2"."""
    parts = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            x = var if power == 1 else f"{var}^{power}"
            body = x if mag == 1 else f"{mag}*{x}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def char_poly(matrix, sequence=None) -> IntPolynomial:
    """Monic characteristic polynomial of a square integer matrix.

    With a sequence supplied, the induced linear recurrence is checked
    against it (Cayley-Hamilton cross-check); supply at least 2*dim terms
    for that to bite.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("char_poly: matrix must be square")
    if n == 0:
        raise DomainError("char_poly: empty matrix")
    if n > MAX_CHARPOLY_DIM:
        raise SizeLimitError(
            f"char_poly: dimension {n} exceeds the exact-arithmetic budget "
            f"({MAX_CHARPOLY_DIM}); fit a recurrence from sequence terms instead"
        )
    # Faddeev-LeVerrier: B_1 = A, c_i = -tr(B_i)/i, B_{i+1} = A(B_i + c_i I)
    coeffs_desc = [1]
    b = [row[:] for row in rows]
    for i in range(1, n + 1):
        tr = sum(b[j][j] for j in range(n))
        assert tr % i == 0
        ci = -(tr // i)
        coeffs_desc.append(ci)
        if i < n:
            for j in range(n):
                b[j][j] += ci
            b = _matmul(rows, b)
    poly = IntPolynomial.from_coefficients(coeffs_desc[::-1])
    if sequence is not None:
        induced = [-c for c in coeffs_desc[1:]]
        if not _check_recurrence_fit(induced, list(sequence), start=n):
            raise DomainError(
                f"char_poly: supplied sequence violates the induced "
                f"order-{n} recurrence"
            )
    return poly


def _matmul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(n):
            ait = ai[t]
            if ait:
                bt = b[t]
                for j in range(n):
                    oi[j] += ait * bt[j]
    return out


def _check_recurrence_fit(coeffs, terms, start) -> bool:
    d = len(coeffs)
    for n in range(start, len(terms)):
        if sum(coeffs[i - 1] * terms[n - i] for i in range(1, d + 1)) != terms[n]:
            return False
    return True


def _normalize_coeff(c: Fraction):
    return int(c) if c.denominator == 1 else c


@dataclass(frozen=True)
class Recurrence:
    """T_n = sum(coefficients[i-1] * T_{n-i}, i=1..order) with T_1..T_order
    as initial terms. Coefficients are exact; integral ones are stored as
    ints (every family in this package comes out integral)."""

    order: int
    coefficients: tuple
    initial_terms: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise DomainError("Recurrence: order must be >= 1")
        if len(self.coefficients) != self.order:
            raise DomainError("Recurrence: need exactly `order` coefficients")
        if len(self.initial_terms) != self.order:
            raise DomainError("Recurrence: need exactly `order` initial terms")

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coefficients)

    def integer_coefficients(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise DomainError("Recurrence: coefficients are not all integral")
        return tuple(self.coefficients)

    def extend(self, count: int) -> list:
        """First `count` terms generated from the initial segment."""
        terms = list(self.initial_terms)
        d = self.order
        while len(terms) < count:
            nxt = sum(self.coefficients[i - 1] * terms[-i] for i in range(1, d + 1))
            terms.append(_normalize_coeff(nxt) if isinstance(nxt, Fraction) else nxt)
        return terms[:count]

    def recurrence_polynomial(self) -> IntPolynomial:
        """x^d - c_1 x^(d-1) - ... - c_d (monic; integral recurrences only)."""
        cs = self.integer_coefficients()
        return IntPolynomial.from_coefficients(
            [-c for c in reversed(cs)] + [1]
        )

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coefficients, start=1):
            if c == 0:
                continue
            mag = abs(c)
            body = f"T(n-{i})" if mag == 1 else f"{mag}*T(n-{i})"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        rhs = " ".join(parts) if parts else "0"
        return f"T(n) = {rhs}"


def _solve_exact(rows, rhs):
    """Gauss-Jordan over Fractions. Returns (solution, rank, consistent);
    free variables are set to zero."""
    ncols = len(rows[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivot_cols = []
    prow = 0
    for col in range(ncols):
        sel = next((r for r in range(prow, len(aug)) if aug[r][col] != 0), None)
        if sel is None:
            continue
        aug[prow], aug[sel] = aug[sel], aug[prow]
        pv = aug[prow][col]
        aug[prow] = [x / pv for x in aug[prow]]
        for r in range(len(aug)):
            if r != prow and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[prow])]
        pivot_cols.append(col)
        prow += 1
        if prow == len(aug):
            break
    consistent = all(row[ncols] == 0 for row in aug[prow:])
    sol = [Fraction(0)] * ncols
    if consistent:
        for i, col in enumerate(pivot_cols):
            sol[col] = aug[i][ncols]
    return sol, len(pivot_cols), consistent


def _window_rows(terms, d, upto):
    rows = [[terms[n - i] for i in range(1, d + 1)] for n in range(d, upto)]
    rhs = [terms[n] for n in range(d, upto)]
    return rows, rhs


def _fit_order(terms, d):
    """Coefficients of an order-d recurrence fitting every term, or None.

    Solves on the earliest 2d+4-term window (small numbers), then verifies
    the candidate across the whole sequence. A full-system solve only runs
    in the degenerate underdetermined case.
    """
    window_end = min(len(terms), 2 * d + 4)
    rows, rhs = _window_rows(terms, d, window_end)
    sol, rank, consistent = _solve_exact(rows, rhs)
    if not consistent:
        return None
    if _verify_fit(sol, terms, d):
        return sol
    if rank == d:
        return None  # unique window solution already failed
    rows, rhs = _window_rows(terms, d, len(terms))
    sol, _, consistent = _solve_exact(rows, rhs)
    if consistent and _verify_fit(sol, terms, d):
        return sol
    return None


def _verify_fit(coeffs, terms, d) -> bool:
    for n in range(d, len(terms)):
        if sum(coeffs[i - 1] * terms[n - i] for i in range(1, d + 1)) != terms[n]:
            return False
    return True


def _fit_prefix_length(terms, d) -> int:
    """How many leading terms an order-d window fit reproduces (for the
    failure report)."""
    window_end = min(len(terms), 2 * d + 4)
    rows, rhs = _window_rows(terms, d, window_end)
    sol, _, consistent = _solve_exact(rows, rhs)
    if not consistent:
        return 0
    for n in range(d, len(terms)):
        if sum(sol[i - 1] * terms[n - i] for i in range(1, d + 1)) != terms[n]:
            return n
    return len(terms)


def minimal_recurrence_from_terms(terms, max_order: int) -> Recurrence:
    """Least-order linear recurrence with exact rational coefficients
    fitting every supplied term.

    Callers must supply at least 2*max_order + 4 terms so that a candidate
    found at the bound still has guard terms beyond its fitting window.
    """
    terms = list(terms)
    if max_order < 1:
        raise DomainError("minimal_recurrence_from_terms: max_order must be >= 1")
    if len(terms) < 2 * max_order + 4:
        raise InsufficientTermsError(
            f"minimal_recurrence_from_terms: got {len(terms)} terms, need "
            f"2*{max_order}+4 = {2 * max_order + 4} for order bound {max_order}"
        )
    for d in range(1, max_order + 1):
        sol = _fit_order(terms, d)
        if sol is not None:
            coeffs = tuple(_normalize_coeff(c) for c in sol)
            return Recurrence(
                order=d, coefficients=coeffs, initial_terms=tuple(terms[:d])
            )
    best = max(range(1, max_order + 1), key=lambda d: _fit_prefix_length(terms, d))
    raise NoRecurrenceError(
        f"no linear recurrence of order <= {max_order} fits all "
        f"{len(terms)} terms (best partial fit: order {best} reproduces "
        f"{_fit_prefix_length(terms, best)} terms); raise max_order",
        best_order=best,
    )


@dataclass(frozen=True)
class RationalGF:
    """numerator/denominator with integer coefficients, joint content 1 and
    positive constant term in the denominator."""

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        if not self.denominator.coefficients or self.denominator.coefficients[0] == 0:
            raise DomainError("RationalGF: denominator needs a nonzero constant term")

    def series(self, count: int) -> list[int]:
        """Exact coefficients of x^1..x^count of the power-series expansion."""
        d0 = self.denominator.coefficients[0]
        num = self.numerator.coefficients
        den = self.denominator.coefficients
        out = []
        for n in range(count + 1):
            acc = num[n] if n < len(num) else 0
            for i in range(1, min(n, len(den) - 1) + 1):
                acc -= den[i] * out[n - i]
            if acc % d0:
                raise DomainError("RationalGF: series expansion is not integral")
            out.append(acc // d0)
        if out[0] != 0:
            raise DomainError("RationalGF: series has a nonzero constant term")
        return out[1:]

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def generating_function(rec: Recurrence) -> RationalGF:
    """Rational generating function of sum(T_n x^n, n>=1) for a recurrence
    with its initial terms; verified by expanding 2*order+4 terms."""
    d = rec.order
    den = [Fraction(1)] + [-Fraction(c) for c in rec.coefficients]
    series = [Fraction(0)] + [Fraction(t) for t in rec.initial_terms]
    num = [
        sum(den[i] * series[j - i] for i in range(0, j + 1) if i < len(den))
        for j in range(d + 1)
    ]
    lcm = 1
    for c in num + den:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    num_i = [int(c * lcm) for c in num]
    den_i = [int(c * lcm) for c in den]
    content = 0
    for c in num_i + den_i:
        content = _gcd(content, abs(c))
    if content > 1:
        num_i = [c // content for c in num_i]
        den_i = [c // content for c in den_i]
    if den_i[0] < 0:
        num_i = [-c for c in num_i]
        den_i = [-c for c in den_i]
    gf = RationalGF(
        IntPolynomial.from_coefficients(num_i),
        IntPolynomial.from_coefficients(den_i),
    )
    check = 2 * d + 4
    if gf.series(check) != rec.extend(check):
        raise DomainError("generating_function: series check failed")
    return gf


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class Family:
    """Descriptor for a product family whose minimal recurrence was computed:
    kind is "grid" (path base), "complete", or anything else."""

    kind: str
    k: int
    label: str


@dataclass(frozen=True)
class ConjectureCheck:
    family: str
    check: str
    expected: str
    actual: str
    ok: bool


@dataclass(frozen=True)
class ConjectureReport:
    checks: tuple[ConjectureCheck, ...]
    unchecked: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


FACTORIZATION_NOTE = (
    "characteristic-polynomial factorization pattern: unchecked "
    "(needs integer polynomial factorization, outside this package's scope)"
)


def _signs_alternate(coeffs) -> bool:
    """c_1 > 0, c_2 < 0, c_3 > 0, ... with no zero coefficient."""
    for i, c in enumerate(coeffs, start=1):
        if c == 0:
            return False
        if (c > 0) != (i % 2 == 1):
            return False
    return True


def check_conjectures(results) -> ConjectureReport:
    """Empirical order and sign-pattern checks over (Family, Recurrence)
    pairs: grid minimal order 2^(k-1), complete-graph path-product minimal
    order k, alternating coefficient signs everywhere."""
    checks = []
    for family, rec in results:
        coeffs = rec.coefficients
        if family.kind == "grid":
            expected = 2 ** (family.k - 1)
            checks.append(
                ConjectureCheck(
                    family=family.label,
                    check="minimal order is 2^(k-1)",
                    expected=str(expected),
                    actual=str(rec.order),
                    ok=rec.order == expected,
                )
            )
        elif family.kind == "complete":
            checks.append(
                ConjectureCheck(
                    family=family.label,
                    check="minimal order is k",
                    expected=str(family.k),
                    actual=str(rec.order),
                    ok=rec.order == family.k,
                )
            )
        checks.append(
            ConjectureCheck(
                family=family.label,
                check="coefficient signs alternate",
                expected="+ - + - ...",
                actual=", ".join(str(c) for c in coeffs),
                ok=_signs_alternate(coeffs),
            )
        )
    return ConjectureReport(checks=tuple(checks), unchecked=(FACTORIZATION_NOTE,))
