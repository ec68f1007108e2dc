"""Numeric spectra, energy, integrality, corollary solvers, equienergetics.

The eigensolver is a cyclic Jacobi iteration: simple, provably convergent
for symmetric matrices, and ample for the desk-scale matrices handled
here (n up to about 60).  Exact decisions (integrality, cospectrality)
are delegated to the integer characteristic-polynomial machinery; floats
only ever carry approximations of real spectra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import SignedGraph, canonical_marking, is_balanced, mu_signed_graph, regularity
from .exactpoly import IntPolynomial, char_poly, coronal, integer_roots
from .products import add_vertex_corona

__all__ = [
    "Spectrum",
    "EnergyReport",
    "IntegralityResult",
    "EquienergeticReport",
    "PreconditionError",
    "jacobi_eigh",
    "eig_sym",
    "spectrum",
    "energy",
    "is_integral",
    "integrality",
    "cospectral",
    "corollary_coregular_spectrum",
    "corollary_star_spectrum",
    "equienergetic_product_pair",
    "equienergetic_search",
]


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted descending; multiplicity by repetition."""

    values: tuple[float, ...]
    source: str | None = None

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def to_lines(self) -> list[str]:
        """One eigenvalue per line, 12 significant digits, descending."""
        return [f"{v:.12g}" for v in self.values]


def jacobi_eigh(matrix, tol: float = 1e-12, max_sweeps: int = 100):
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Sweeps rotate every off-diagonal pair until the off-diagonal Frobenius
    norm drops below tol (scaled by the matrix norm).  Returns (w, V) with
    eigenvalues descending and V's columns the matching eigenvectors.
    Exceeding the sweep cap is a hard error.
    """
    a = np.array(matrix, dtype=float)
    if a.size == 0 and a.ndim == 1:
        a = a.reshape(0, 0)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    scale = max(1.0, float(np.linalg.norm(a)))
    if n and float(np.max(np.abs(a - a.T))) > 1e-12 * scale:
        raise ValueError("matrix must be symmetric")
    v = np.eye(n)
    if n < 2:
        w = np.diag(a).copy()
        return w, v
    threshold = tol * scale
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.square(a - np.diag(np.diag(a)))))
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-36:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rp, rq = a[p].copy(), a[q].copy()
                a[p] = c * rp - s * rq
                a[q] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise RuntimeError(f"Jacobi iteration failed to converge in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def eig_sym(matrix, source: str | None = None) -> Spectrum:
    """Spectrum of a real symmetric matrix via the Jacobi solver."""
    w, _ = jacobi_eigh(matrix)
    return Spectrum(tuple(float(x) for x in w), source)


def spectrum(g: SignedGraph, which: str = "A") -> Spectrum:
    """Spectrum of the graph's A, L, or Q matrix."""
    return eig_sym(g.matrix(which), source=which)


@dataclass(frozen=True)
class EnergyReport:
    """Sum of absolute adjacency eigenvalues, with the spectrum attached."""

    energy: float
    spectrum: Spectrum


def energy(g: SignedGraph) -> EnergyReport:
    spec = spectrum(g, "A")
    return EnergyReport(float(sum(abs(v) for v in spec.values)), spec)


# -- exact integrality -------------------------------------------------------


@dataclass(frozen=True)
class IntegralityResult:
    """Exact decision whether every adjacency eigenvalue is an integer."""

    integral: bool
    eigenvalues: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.integral


def integrality(g: SignedGraph) -> IntegralityResult:
    """Exact integrality test via integer-root extraction of the char poly.

    The characteristic polynomial splits into integer linear factors iff
    divisor-of-constant-term synthetic division exhausts its degree; no
    floating point is involved in the decision.
    """
    p = char_poly(g.adjacency())
    bound = max((sum(abs(x) for x in row) for row in g.adjacency()), default=0)
    roots, rest = integer_roots(p, bound=bound)
    if rest.degree > 0:
        return IntegralityResult(False, None)
    vals: list[int] = []
    for r, mult in roots.items():
        vals.extend([r] * mult)
    vals.sort(reverse=True)
    return IntegralityResult(True, tuple(vals))


def is_integral(g: SignedGraph) -> IntegralityResult:
    return integrality(g)


def cospectral(g1: SignedGraph, g2: SignedGraph, which: str = "A") -> bool:
    """Exact M-cospectrality via characteristic-polynomial equality."""
    return char_poly(g1.matrix(which)) == char_poly(g2.matrix(which))


# -- real roots of low-degree factor polynomials ------------------------------


def _real_roots_monic(coeffs: list[float]) -> list[float]:
    """All real roots (with multiplicity) of a monic all-real-rooted polynomial.

    `coeffs` are the ascending coefficients below the implicit leading 1,
    so the degree is len(coeffs).  Derivative-recursion isolation with
    bisection on sign changes; a critical point where the polynomial
    (nearly) vanishes is taken as a multiple root.  Intended for the
    cubic/quartic factors arising from spectra, so every root is real.
    """
    deg = len(coeffs)
    if deg == 0:
        return []
    if deg == 1:
        return [-coeffs[0]]

    # Horner including the implicit leading 1.
    def val(x: float) -> float:
        acc = 1.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def scale_at(x: float) -> float:
        m = max(1.0, abs(x))
        s = 1.0
        for c in reversed(coeffs):
            s = s * m + abs(c)
        return max(1.0, s)

    der = [coeffs[i] * i / deg for i in range(1, deg)]  # monic derivative/deg
    crits = _real_roots_monic(der)
    # merge near-identical critical points, keeping multiplicities
    merged: list[tuple[float, int]] = []
    for c in sorted(crits):
        if merged and abs(c - merged[-1][0]) < 1e-9 * max(1.0, abs(c)):
            merged[-1] = (merged[-1][0], merged[-1][1] + 1)
        else:
            merged.append((c, 1))
    bound = 1.0 + max(abs(c) for c in coeffs)
    roots: list[float] = []
    crit_is_root = []
    for c, mult in merged:
        if abs(val(c)) <= 1e-11 * scale_at(c):
            roots.extend([c] * (mult + 1))
            crit_is_root.append(True)
        else:
            crit_is_root.append(False)
    points = [-bound] + [c for c, _ in merged] + [bound]
    point_root = [False] + crit_is_root + [False]
    for i in range(len(points) - 1):
        a, b = points[i], points[i + 1]
        if point_root[i] or point_root[i + 1]:
            continue
        fa, fb = val(a), val(b)
        if fa == 0.0:
            roots.append(a)
            continue
        if fa * fb < 0.0:
            lo, hi, flo = a, b, fa
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                fm = val(mid)
                if fm == 0.0:
                    lo = hi = mid
                    break
                if (fm > 0) == (flo > 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
                if hi - lo <= 1e-14 * max(1.0, abs(lo)):
                    break
            x = 0.5 * (lo + hi)
            for _ in range(3):  # Newton polish on the simple root
                dv = 0.0
                fv = 1.0
                for c in reversed(coeffs):
                    dv = dv * x + fv
                    fv = fv * x + c
                if dv != 0.0:
                    step = fv / dv
                    if abs(step) < 1.0:
                        x -= step
            roots.append(x)
    roots.sort()
    if len(roots) != deg:
        raise RuntimeError(
            f"expected {deg} real roots, isolated {len(roots)}; "
            "input may not be all-real-rooted"
        )
    return roots


def _poly_real_roots(coeffs_ascending: list[float]) -> list[float]:
    """Real roots of an all-real-rooted polynomial given ascending coeffs."""
    lead = coeffs_ascending[-1]
    monic = [c / lead for c in coeffs_ascending[:-1]]
    return _real_roots_monic(monic)


# -- corollary spectrum assembly ----------------------------------------------


def corollary_coregular_spectrum(g1: SignedGraph, g2: SignedGraph) -> Spectrum:
    """Assembled corona spectrum for a co-regular second factor.

    Requires g2 co-regular with pair (r, k); k is then an adjacency
    eigenvalue of g2 with some exact multiplicity p.  The product
    spectrum is: every eigenvalue of g2 other than k repeated n1 times,
    the three real roots of x^3 - k x^2 - (n2 + t^2) x + k t^2 for each
    eigenvalue t of g1_mu, and k with multiplicity n1*(p-1).
    """
    rep = regularity(g2)
    if rep.co_regular_pair is None:
        raise ValueError("second factor must be co-regular (degree- and net-regular)")
    _, k = rep.co_regular_pair
    n1, n2 = g1.n, g2.n
    f2 = char_poly(g2.adjacency())
    p_mult = 0
    lin = IntPolynomial((-k, 1))
    q = f2
    while q.degree >= 1 and q(k) == 0:
        p_mult += 1
        q = q.exact_div(lin)
    if p_mult == 0:
        raise ValueError(f"net degree {k} is not an eigenvalue of the second factor")
    w2 = list(eig_sym(g2.adjacency()).values)
    # drop the p_mult values closest to k (they are the exact copies of k)
    w2.sort(key=lambda x: abs(x - k))
    others = w2[p_mult:]
    values: list[float] = []
    for lam in others:
        values.extend([lam] * n1)
    lam1mu = eig_sym(mu_signed_graph(g1, canonical_marking(g1)).adjacency()).values
    for t in lam1mu:
        t2 = t * t
        cubic = [k * t2, -(n2 + t2), -float(k), 1.0]
        values.extend(_poly_real_roots(cubic))
    values.extend([float(k)] * (n1 * (p_mult - 1)))
    values.sort(reverse=True)
    return Spectrum(tuple(values), source="A")


def corollary_star_spectrum(g1: SignedGraph, n2: int, center_mark: int) -> Spectrum:
    """Assembled spectrum of g1 (*) star-with-n2-leaves, for balanced g1.

    Zero appears with multiplicity n1*(n2-1); for each adjacency
    eigenvalue t of g1 the quartic
    x^4 - (2 n2 + 1 + t^2) x^2 - 2 n2 mu(center) x + n2 t^2 contributes
    four real roots.  Requires g1 balanced (so g1 and g1_mu are
    cospectral, making the quartic's t the eigenvalues of g1 itself);
    the star's signature must realize the requested center mark through
    its canonical marking.
    """
    if center_mark not in (1, -1):
        raise ValueError("center mark must be +1 or -1")
    if n2 < 1:
        raise ValueError("star needs at least one leaf")
    if not is_balanced(g1):
        raise ValueError("first factor must be balanced for the star corollary")
    n1 = g1.n
    values = [0.0] * (n1 * (n2 - 1))
    for t in eig_sym(g1.adjacency()).values:
        t2 = t * t
        quartic = [n2 * t2, -2.0 * n2 * center_mark, -(2 * n2 + 1 + t2), 0.0, 1.0]
        values.extend(_poly_real_roots(quartic))
    values.sort(reverse=True)
    return Spectrum(tuple(values), source="A")


# -- equienergetic construction -----------------------------------------------


class PreconditionError(ValueError):
    """Raised when the equienergetic construction's hypotheses fail."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class EquienergeticReport:
    """Verified outcome for a constructed equienergetic product pair."""

    energy_1: float
    energy_2: float
    energy_gap: float
    products_cospectral: bool


def equienergetic_product_pair(g: SignedGraph, h1: SignedGraph, h2: SignedGraph):
    """Build g (*) h1 and g (*) h2 from an admissible equienergetic pair.

    Admissible means: equal order, identical reduced adjacency coronals
    (exact), equal energy within 1e-8, and exactly non-cospectral.  All
    violations are collected and raised together.  The returned report
    certifies the products' energies agree within 1e-6 and their
    characteristic polynomials differ exactly.
    """
    violations = []
    if h1.n != h2.n:
        violations.append("order mismatch")
    c1 = coronal(h1.adjacency(), canonical_marking(h1))
    c2 = coronal(h2.adjacency(), canonical_marking(h2))
    if c1.as_pair() != c2.as_pair():
        violations.append("coronal mismatch")
    e1, e2 = energy(h1).energy, energy(h2).energy
    if abs(e1 - e2) > 1e-8:
        violations.append("energy mismatch")
    if char_poly(h1.adjacency()) == char_poly(h2.adjacency()):
        violations.append("cospectral inputs")
    if violations:
        raise PreconditionError(violations)
    p1, _ = add_vertex_corona(g, h1)
    p2, _ = add_vertex_corona(g, h2)
    pe1, pe2 = energy(p1).energy, energy(p2).energy
    gap = abs(pe1 - pe2)
    cospec = char_poly(p1.adjacency()) == char_poly(p2.adjacency())
    if gap > 1e-6 or cospec:
        raise RuntimeError(
            "constructed products violate the equienergetic guarantee; this is a bug"
        )
    return p1, p2, EquienergeticReport(pe1, pe2, gap, cospec)


def _atlas_connected(max_n: int):
    """Connected graphs on 2..max_n vertices, one per isomorphism class."""
    import networkx as nx

    out = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < 2 or n > max_n:
            continue
        if not nx.is_connected(g):
            continue
        mapping = {v: i for i, v in enumerate(sorted(g.nodes()))}
        edges = tuple(sorted((min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
                             for u, v in g.edges()))
        out.append((n, edges))
    return out


def equienergetic_search(max_n: int = 6, find_all: bool = False):
    """Exhaustive scan for admissible equienergetic pairs at small order.

    Scans every signature of every connected graph on up to max_n
    vertices (one representative per isomorphism class of the underlying
    graph; energy, spectra and coronals are isomorphism-invariant, so the
    reduction loses nothing).  Candidates are pre-filtered by batched
    float energies, then certified exactly: identical reduced coronals
    and different characteristic polynomials.  Returns a list of
    (h1, h2) pairs; with find_all False the scan stops at the first hit.
    """
    found: list[tuple[SignedGraph, SignedGraph]] = []
    by_n: dict[int, list[tuple[int, tuple[tuple[int, int], ...]]]] = {}
    for n, edges in _atlas_connected(max_n):
        by_n.setdefault(n, []).append((n, edges))
    for n in sorted(by_n):
        entries = []  # (energy, graph_index, signature_bits)
        graphs = by_n[n]
        for gi, (_, edges) in enumerate(graphs):
            m = len(edges)
            mats = np.zeros((2 ** m, n, n))
            for bits in range(2 ** m):
                for ei, (u, v) in enumerate(edges):
                    s = -1.0 if (bits >> ei) & 1 else 1.0
                    mats[bits, u, v] = s
                    mats[bits, v, u] = s
            w = np.linalg.eigvalsh(mats)
            energies = np.sum(np.abs(w), axis=1)
            entries.extend((float(energies[b]), gi, b) for b in range(2 ** m))
        entries.sort()
        exact: dict[tuple[int, int], tuple] = {}

        def certify(gi: int, bits: int):
            key = (gi, bits)
            if key not in exact:
                _, edges = graphs[gi]
                sg = SignedGraph(
                    n,
                    ((u, v, -1 if (bits >> ei) & 1 else 1)
                     for ei, (u, v) in enumerate(edges)),
                )
                cp = char_poly(sg.adjacency())
                cor = coronal(sg.adjacency(), canonical_marking(sg)).as_pair()
                exact[key] = (sg, cp.coefficients, cor)
            return exact[key]

        i = 0
        while i < len(entries):
            j = i + 1
            while j < len(entries) and entries[j][0] - entries[j - 1][0] <= 1e-8:
                j += 1
            if j - i >= 2:
                # within a coronal class, keep one representative per char poly
                groups: dict[tuple, dict[tuple, SignedGraph]] = {}
                for _, gi, bits in entries[i:j]:
                    sg, cp, cor = certify(gi, bits)
                    key = tuple(q.coefficients for q in cor)
                    reps = groups.setdefault(key, {})
                    if cp not in reps:
                        for other in reps.values():
                            found.append((other, sg))
                            if not find_all:
                                return found
                        reps[cp] = sg
            i = j
    return found
