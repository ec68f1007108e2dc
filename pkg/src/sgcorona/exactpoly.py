"""Exact integer polynomial arithmetic, characteristic polynomials, coronals.

Characteristic polynomials of integer symmetric matrices are computed by
the Faddeev-LeVerrier recurrence, which yields the adjugate sequence for
free; the coronal numerator mu^T adj(xI - M) mu falls out of the same
pass.  All arithmetic is over Python's arbitrary-precision integers:
coefficient growth at the scales handled here is modest but fixed-width
overflow would be silent, so big integers are mandatory.

Also here: primitive-Euclidean polynomial gcd, Yun squarefree
decomposition, Sturm-sequence real root isolation (the exact eigenvalue
oracle), and the product characteristic-polynomial identities for the
duplication add-vertex corona, evaluated in denominator-cleared form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .core import SignedGraph, canonical_marking, mu_signed_graph, regularity

__all__ = [
    "IntPolynomial",
    "Coronal",
    "char_poly",
    "coronal_pair",
    "coronal",
    "shifted_coronal",
    "product_char_poly_A",
    "product_char_poly_L",
    "product_char_poly_Q",
    "poly_gcd",
    "squarefree_decomposition",
    "real_roots",
    "integer_roots",
]


class IntPolynomial:
    """Dense univariate polynomial with integer coefficients.

    Coefficients are stored ascending by degree with no trailing zeros;
    the zero polynomial is the empty tuple.  Instances are immutable.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients=()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coefficient,))

    # -- basic queries ----------------------------------------------------

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> int:
        if not self._c:
            return 0
        return self._c[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def coeff(self, k: int) -> int:
        return self._c[k] if 0 <= k < len(self._c) else 0

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-v for v in self._c))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial()
            return IntPolynomial(tuple(v * other for v in self._c))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, av in enumerate(a):
            if av == 0:
                continue
            for j, bv in enumerate(b):
                out[i + j] += av * bv
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; works for int, float, or Fraction inputs."""
        acc = 0 * x
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self._c) if i > 0))

    def taylor_shift(self, a: int) -> "IntPolynomial":
        """The polynomial p(x + a)."""
        acc = IntPolynomial()
        shift = IntPolynomial((a, 1))
        for c in reversed(self._c):
            acc = acc * shift + c
        return acc

    # -- integer-content helpers -------------------------------------------

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._c:
            g = int_gcd(g, abs(c))
            if g == 1:
                break
        return g

    def primitive_part(self) -> "IntPolynomial":
        """Divide out the content and normalize the leading coefficient positive."""
        if not self._c:
            return self
        g = self.content()
        if self._c[-1] < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self._c))

    def divide_content(self) -> "IntPolynomial":
        """Divide by the positive content, preserving the sign pattern."""
        if not self._c:
            return self
        g = self.content()
        return IntPolynomial(tuple(c // g for c in self._c))

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient self / other over the integers; raises if inexact."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return IntPolynomial()
        rem = list(self._c)
        d = other.degree
        oc = other._c
        lead = oc[-1]
        if len(rem) - 1 < d:
            raise ValueError("inexact polynomial division")
        q = [0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            if rem[i] % lead != 0:
                raise ValueError("inexact polynomial division")
            f = rem[i] // lead
            q[i - d] = f
            for j in range(d + 1):
                rem[i - d + j] -= f * oc[j]
        if any(rem):
            raise ValueError("inexact polynomial division")
        return IntPolynomial(q)

    # -- serialization ------------------------------------------------------

    def to_line(self) -> str:
        """Ascending coefficients, space-separated, on one line ('0' if zero)."""
        if not self._c:
            return "0"
        return " ".join(str(c) for c in self._c)

    @classmethod
    def from_line(cls, line: str) -> "IntPolynomial":
        parts = line.split()
        return cls(int(p) for p in parts)

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"IntPolynomial({self._c!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)


# -- gcd machinery -------------------------------------------------------


def pseudo_rem(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Fraction-free remainder: lc(g)^(deg f - deg g + 1) * f  mod  g."""
    if g.is_zero:
        raise ZeroDivisionError("pseudo remainder by zero")
    if f.is_zero or f.degree < g.degree:
        return f
    lead = g.leading
    steps = f.degree - g.degree + 1
    r = f
    while not r.is_zero and r.degree >= g.degree:
        shift = r.degree - g.degree
        r = r * lead - IntPolynomial.monomial(shift, r.leading) * g
        steps -= 1
    if steps > 0:
        r = r * (lead ** steps)
    return r


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd via the primitive-part Euclidean remainder sequence.

    The result is primitive with positive leading coefficient; constants
    collapse to 1.  Integer content of the inputs is deliberately not
    carried into the result.
    """
    a, b = f.primitive_part(), g.primitive_part()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = pseudo_rem(a, b).primitive_part()
        a, b = b, r
    if a.degree == 0:
        return IntPolynomial.one()
    return a


# -- matrices (exact, list-of-rows) ----------------------------------------


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _validate_square(matrix) -> list[list[int]]:
    rows = [list(map(int, row)) for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    return rows


def _faddeev_leverrier(matrix, mu=None):
    """Characteristic-polynomial coefficients, plus the coronal numerator.

    Runs the recurrence N_1 = I, c_{n-k} = -tr(A N_k)/k,
    N_{k+1} = A N_k + c_{n-k} I.  Since adj(xI - A) = sum_k N_k x^{n-k},
    supplying a marking vector mu also returns
    p(x) = mu^T adj(xI - A) mu exactly (degree n-1).
    """
    a = _validate_square(matrix)
    n = len(a)
    c = [0] * (n + 1)
    c[n] = 1
    p = [0] * n if mu is not None else None
    nk = _identity(n)
    for k in range(1, n + 1):
        if mu is not None:
            p[n - k] = sum(
                mu[i] * sum(nk[i][j] * mu[j] for j in range(n)) for i in range(n)
            )
        an = _matmul(a, nk)
        tr = sum(an[i][i] for i in range(n))
        assert tr % k == 0, "Faddeev-LeVerrier trace division must be exact"
        c[n - k] = -(tr // k)
        if k < n:
            for i in range(n):
                an[i][i] += c[n - k]
            nk = an
    return c, p


def char_poly(matrix) -> IntPolynomial:
    """Monic characteristic polynomial det(xI - M), exact over the integers."""
    c, _ = _faddeev_leverrier(matrix)
    return IntPolynomial(c)


def coronal_pair(matrix, mu) -> tuple[IntPolynomial, IntPolynomial]:
    """Unreduced coronal numerator and characteristic polynomial of M.

    The numerator is p(x) = mu^T adj(xI - M) mu; the pair p/f is the
    coronal before gcd reduction.
    """
    marks = list(mu)
    if len(marks) != len(list(matrix)):
        raise ValueError("marking length must match matrix dimension")
    c, p = _faddeev_leverrier(matrix, marks)
    return IntPolynomial(p), IntPolynomial(c)


@dataclass(frozen=True)
class Coronal:
    """Reduced rational function numerator/denominator plus the removed gcd.

    The reduction divides the raw pair by its primitive polynomial gcd
    only, so the rational function's value is untouched (the numerator
    may keep an integer content, e.g. 2/(x-1)).  The denominator is monic
    whenever the source polynomial is, and numerator*removed and
    denominator*removed reconstruct the unreduced pair exactly.
    """

    numerator: IntPolynomial
    denominator: IntPolynomial
    removed: IntPolynomial

    def as_pair(self) -> tuple[IntPolynomial, IntPolynomial]:
        return (self.numerator, self.denominator)

    def unreduced(self) -> tuple[IntPolynomial, IntPolynomial]:
        return (self.numerator * self.removed, self.denominator * self.removed)


def coronal(matrix, mu) -> Coronal:
    """Reduced coronal of an integer symmetric matrix with the given marks."""
    p, f = coronal_pair(matrix, mu)
    r = poly_gcd(p, f)
    num = p.exact_div(r)
    den = f.exact_div(r)
    if den.leading < 0:
        num, den, r = -num, -den, -r
    return Coronal(num, den, r)


def graph_coronal(g: SignedGraph, which: str = "A") -> Coronal:
    """Coronal of a signed graph's A/L/Q matrix under canonical marking."""
    return coronal(g.matrix(which), canonical_marking(g))


def shifted_coronal(c: Coronal) -> Coronal:
    """Substitute x -> x - 1 throughout (shift preserves the reduced form)."""
    return Coronal(
        c.numerator.taylor_shift(-1),
        c.denominator.taylor_shift(-1),
        c.removed.taylor_shift(-1),
    )


# -- product characteristic polynomials --------------------------------------


def _mu_square_charpoly(g1: SignedGraph) -> IntPolynomial:
    """Characteristic polynomial of A(g1_mu)^2, the squared re-signed adjacency."""
    a = mu_signed_graph(g1, canonical_marking(g1)).adjacency()
    return char_poly(_matmul(a, a))


def _cleared_product_poly(
    g_sq: IntPolynomial, u: IntPolynomial, f: IntPolynomial, n1: int
) -> IntPolynomial:
    """sum_k g_k * u^k * f^(n1-k): the denominator-cleared spectral product."""
    result = IntPolynomial()
    u_pow = IntPolynomial.one()
    f_pows = [IntPolynomial.one()]
    for _ in range(n1):
        f_pows.append(f_pows[-1] * f)
    for k in range(n1 + 1):
        gk = g_sq.coeff(k)
        if gk != 0:
            result = result + u_pow * f_pows[n1 - k] * gk
        if k < n1:
            u_pow = u_pow * u
    return result


def product_char_poly_A(g1: SignedGraph, g2: SignedGraph) -> IntPolynomial:
    """Adjacency characteristic polynomial of the add-vertex corona.

    Evaluates, exactly and without eigenvalues, the identity obtained by
    clearing the coronal denominator from the product formula: with f2
    and p2 the unreduced coronal pair of A(g2), u = x^2*f2 - x*p2, and
    g the characteristic polynomial of A(g1_mu)^2, the result is
    sum_k g_k u^k f2^(n1-k), monic of degree n1*(n2+2).
    """
    mu2 = canonical_marking(g2)
    p2, f2 = coronal_pair(g2.adjacency(), mu2)
    g_sq = _mu_square_charpoly(g1)
    x = IntPolynomial.x()
    u = x * x * f2 - x * p2
    return _cleared_product_poly(g_sq, u, f2, g1.n)


def _product_char_poly_LQ(g1: SignedGraph, g2: SignedGraph, which: str) -> IntPolynomial:
    rep = regularity(g1)
    r1 = rep.degree_regular
    if r1 is None:
        raise ValueError(
            "first factor must be degree-regular for the Laplacian-type "
            "product polynomial"
        )
    mu2 = canonical_marking(g2)
    p2, f2 = coronal_pair(g2.matrix(which), mu2)
    fs = f2.taylor_shift(-1)
    ps = p2.taylor_shift(-1)
    g_sq = _mu_square_charpoly(g1)
    x = IntPolynomial.x()
    n2 = g2.n
    u = ((x - (r1 + n2)) * fs - ps) * (x - r1)
    return _cleared_product_poly(g_sq, u, fs, g1.n)


def product_char_poly_L(g1: SignedGraph, g2: SignedGraph) -> IntPolynomial:
    """Laplacian characteristic polynomial of the corona; g1 must be regular.

    Cleared form of the identity with the x->x-1 shifted Laplacian coronal:
    u = ((x - r1 - n2)*fL(x-1) - pL(x-1)) * (x - r1), summed against the
    characteristic polynomial of A(g1_mu)^2 as in the adjacency case.
    """
    return _product_char_poly_LQ(g1, g2, "L")


def product_char_poly_Q(g1: SignedGraph, g2: SignedGraph) -> IntPolynomial:
    """Signless-Laplacian variant of the corona product polynomial."""
    return _product_char_poly_LQ(g1, g2, "Q")


# -- squarefree decomposition and exact real roots ---------------------------


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition: pairwise-coprime squarefree factors with multiplicity.

    Content and sign are dropped; the product of factor^multiplicity is
    the primitive positive part of p.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree decomposition")
    p = p.primitive_part()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    d = dp.exact_div(a) - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        d = d.exact_div(a) - b.derivative()
        i += 1
    return out


def _sturm_chain(q: IntPolynomial) -> list[IntPolynomial]:
    """Sturm sequence of a squarefree polynomial, integer-scaled.

    Each term is the negated remainder of the previous two, rescaled by a
    positive rational only, so the sign variations are those of the
    classical chain.
    """
    chain = [q, q.derivative()]
    while chain[-1].degree > 0:
        f, g = chain[-2], chain[-1]
        r = pseudo_rem(f, g)
        if r.is_zero:
            raise ValueError("Sturm chain hit a zero remainder; input not squarefree")
        # pseudo_rem scales f by lc(g)^steps; undo a negative scale's sign flip.
        steps = f.degree - g.degree + 1
        if g.leading < 0 and steps % 2 == 1:
            r = -r
        chain.append((-r).divide_content())
    return chain


def _variations(chain: list[IntPolynomial], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = p(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _root_bound(p: IntPolynomial) -> int:
    """Cauchy bound: every real root lies strictly inside [-B, B]."""
    lead = abs(p.leading)
    top = max(abs(c) for c in p.coefficients[:-1]) if p.degree > 0 else 0
    return 1 + -(-top // lead)


def _isolate_squarefree(q: IntPolynomial, bound: int) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals each holding exactly one real root of q.

    Exact rational roots are returned as degenerate [r, r] intervals.
    """
    if q.degree <= 0:
        return []
    chain = _sturm_chain(q)
    lo, hi = Fraction(-bound), Fraction(bound)
    exact: list[Fraction] = []
    for end in (lo, hi):
        if q(end) == 0:  # pragma: no cover - bound is strict by construction
            raise AssertionError("root bound not strict")
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, _variations(chain, lo) - _variations(chain, hi))]
    while stack:
        a, b, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if q(mid) == 0:
            # the midpoint is itself a root: carve out a punctured
            # neighbourhood small enough that no other root is lost,
            # certified by the Sturm counts adding back up
            exact.append(mid)
            delta = (b - a) / 4
            while True:
                lo2, hi2 = mid - delta, mid + delta
                if q(lo2) != 0 and q(hi2) != 0:
                    c_left = _variations(chain, a) - _variations(chain, lo2)
                    c_right = _variations(chain, hi2) - _variations(chain, b)
                    if c_left + c_right == count - 1:
                        stack.append((a, lo2, c_left))
                        stack.append((hi2, b, c_right))
                        break
                delta = delta / 2
        else:
            v = _variations(chain, mid)
            stack.append((a, mid, _variations(chain, a) - v))
            stack.append((mid, b, v - _variations(chain, b)))
    out.extend((r, r) for r in exact)
    out.sort()
    return out


def _refine_root(q: IntPolynomial, a: Fraction, b: Fraction, width: Fraction) -> Fraction:
    """Bisect a sign-changing bracket of a simple root down to the width."""
    if a == b:
        return a
    fa = q(a)
    if fa == 0:
        return a
    if q(b) == 0:
        return b
    sa = 1 if fa > 0 else -1
    while b - a > width:
        mid = (a + b) / 2
        fm = q(mid)
        if fm == 0:
            return mid
        if (1 if fm > 0 else -1) == sa:
            a = mid
        else:
            b = mid
    return (a + b) / 2


def real_roots(p: IntPolynomial, bound: int | None = None, tol: float = 1e-11) -> list[float]:
    """All real roots of p with multiplicity, ascending, to within tol.

    Roots are isolated exactly (Yun squarefree split, then Sturm-sequence
    bisection with integer arithmetic) and only the final refinement is
    rounded to float.  `bound` may supply a known bound on |root| to keep
    the search window small; otherwise the Cauchy bound is used.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has every number as a root")
    roots: list[float] = []
    width = Fraction(tol).limit_denominator(10 ** 15)
    for factor, mult in squarefree_decomposition(p):
        b = _root_bound(factor)
        if bound is not None:
            b = min(b, int(bound) + 1)
        for a, c in _isolate_squarefree(factor, b):
            r = float(_refine_root(factor, a, c, width))
            roots.extend([r] * mult)
    roots.sort()
    return roots


def integer_roots(p: IntPolynomial, bound: int | None = None):
    """Integer roots with multiplicity, plus the integer-root-free quotient.

    Candidates are divisors of the constant term (after stripping powers
    of x), capped by the root bound; each is removed by exact synthetic
    division, so the decision is exact.  Returns ({root: multiplicity},
    remainder polynomial).
    """
    if p.is_zero:
        raise ValueError("zero polynomial has every integer as a root")
    roots: dict[int, int] = {}
    q = p
    while q.coeff(0) == 0 and q.degree > 0:
        roots[0] = roots.get(0, 0) + 1
        q = q.exact_div(IntPolynomial.x())
    limit = _root_bound(q)
    if bound is not None:
        limit = min(limit, int(bound) + 1)
    for t in range(1, limit + 1):
        for r in (t, -t):
            if q.degree < 1:
                break
            if q.coeff(0) % t != 0:
                continue
            while q.degree >= 1 and q(r) == 0:
                roots[r] = roots.get(r, 0) + 1
                q = q.exact_div(IntPolynomial((-r, 1)))
    return roots, q
