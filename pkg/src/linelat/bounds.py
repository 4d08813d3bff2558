"""Closed-form spectral bounds, gap-interval catalog, and the gap-vs-radius
extrapolation fit.

All special constants (the tree band edge 2*sqrt(2), golden-ratio gap
endpoints, free-product band endpoints) are computed from their defining
formulas at call time rather than frozen as decimals, so tests compare
formula against spectrum instead of decimal against decimal.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from . import _kernels
from .errors import ConvergenceError, InputError
from .graphs import Graph, is_connected
from .operators import effective_hamiltonian, signed_laplacian
from .spectra import dense_spectrum

TREE_BAND_EDGE = 2.0 * np.sqrt(2.0)
RAMANUJAN_LAPLACIAN_GAP = 3.0 - 2.0 * np.sqrt(2.0)


def cheeger_upper_bound(k: int) -> float:
    """Upper bound 2 sqrt((2k-3)/(k-2)) on the top of the adjacency
    spectrum of the trivalent k-gon tessellation."""
    if k < 7:
        raise InputError("the Cheeger bound applies to hyperbolic k >= 7")
    return 2.0 * np.sqrt((2.0 * k - 3.0) / (k - 2.0))


def _free_product_objective(s: float, k: int) -> float:
    # x = (cosh(ks)+1)/(sinh(s) sinh(ks)) = coth(ks/2)/sinh(s), overflow-safe
    x = 1.0 / (np.tanh(k * s / 2.0) * np.sinh(s))
    q = (np.sqrt(x * x + 1.0) - 1.0) / x
    return 2.0 * np.cosh(s) + q


def paschke_lower_bound(k: int, opt_tol: float = 1e-12) -> float:
    """Spectral norm of the Cayley graph of Z_2 * Z_k, a lower bound for
    the top of the tessellation spectrum; exceeds 2 sqrt(2).

    The one-dimensional objective is minimized by a coarse bracket scan
    followed by golden-section refinement.
    """
    if k < 7:
        raise InputError("the free-product bound applies to hyperbolic k >= 7")
    grid = np.geomspace(1e-3, 5.0, 400)
    vals = [_free_product_objective(s, k) for s in grid]
    i = int(np.argmin(vals))
    lo = grid[max(0, i - 1)]
    hi = grid[min(len(grid) - 1, i + 1)]
    return _golden_min(lambda s: _free_product_objective(s, k), lo, hi, opt_tol)


def _golden_min(f, lo, hi, tol):
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return float(min(fc, fd))


def odd_k_gap_bound(k: int) -> float:
    """Lower bound 1 + cos(2 pi nu / (2 nu + 1)) >= 1/k^2 on the smallest
    eigenvalue of D + A for truncations of odd-gon trivalent tessellations."""
    if k < 3 or k % 2 == 0:
        raise InputError("the polygon gap bound requires odd k >= 3")
    nu = (k - 1) // 2
    return float(1.0 + np.cos(2.0 * np.pi * nu / (2.0 * nu + 1.0)))


def nonbipartite_ball_gap_bound(r: int) -> float:
    """Lower bound [48 (3*2^(2r-1) - 1)^2]^(-1) on the smallest eigenvalue
    of D + A for layouts whose r-balls are all non-bipartite (r >= 2)."""
    if r < 2:
        raise InputError("the ball-density bound requires r >= 2")
    return 1.0 / (48.0 * (3.0 * 2.0 ** (2 * r - 1) - 1.0) ** 2)


def bipartite_cheeger(g: Graph) -> float:
    """Exact bipartite Cheeger quantity by exhaustive enumeration.

    Minimizes (e_min(S) + |cut(S)|)/|S| over nonempty vertex subsets S,
    where e_min(S) is the fewest induced edges whose removal makes S
    bipartite.  Exponential in n; capped at n <= 18.
    """
    n = g.n
    if n == 0:
        raise InputError("empty graph")
    if n > 18:
        raise InputError("exhaustive enumeration capped at n <= 18")
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    emin = np.asarray(_kernels.emin_over_subsets(n, eu, ev))
    full = 1 << n
    masks = np.arange(full, dtype=np.int64)
    sizes = np.zeros(full, dtype=np.int64)
    degsum = np.zeros(full, dtype=np.int64)
    deg = g.degrees()
    for v in range(n):
        inside = (masks >> v) & 1 == 1
        sizes[inside] += 1
        degsum[inside] += deg[v]
    e_in = np.zeros(full, dtype=np.int64)
    # edges within S via the same lowest-bit recurrence as the kernel
    nbr = np.zeros(n, dtype=np.int64)
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    for s in range(1, full):
        low = s & (-s)
        rest = s ^ low
        e_in[s] = e_in[rest] + bin(int(nbr[low.bit_length() - 1]) & rest).count("1")
    cut = degsum - 2 * e_in
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = (emin + cut) / np.maximum(sizes, 1)
    ratio[0] = np.inf
    return float(ratio.min())


def sandwich_bounds(g: Graph) -> tuple[float, float, float]:
    """(lower, lambda_min(D+A), upper) for the bipartite Cheeger sandwich
    F^2/(4 d*) <= lambda_min(D+A) <= 4 F."""
    f = bipartite_cheeger(g)
    lam = dense_spectrum(signed_laplacian(g, "plus")).min()
    dstar = g.max_degree()
    return f * f / (4.0 * dstar), lam, 4.0 * f


def band_count_bound(k: int) -> int:
    """Upper bound m_k/3 on the number of bands in the tessellation
    spectrum, from the smallest torsion-free symmetry subgroup.

    m_k depends on the factorization k = 2^a 3^b k1: the coefficient of k
    is 12, 4, 3, 1, 6, 2 for (a, b) = (0,0), (0,>=1), (1,0), (1,>=1),
    (>=2,0), (>=2,>=1).
    """
    if k < 7:
        raise InputError("band counting applies to hyperbolic k >= 7")
    a = 0
    q = k
    while q % 2 == 0:
        a += 1
        q //= 2
    b = 0
    while q % 3 == 0:
        b += 1
        q //= 3
    coeff = {
        (0, 0): 12,
        (0, 1): 4,
        (1, 0): 3,
        (1, 1): 1,
        (2, 0): 6,
        (2, 1): 2,
    }[(min(a, 2), min(b, 1))]
    return coeff * k // 3


def subdivision_spectrum_map(ev: float, direction: str) -> tuple[float, float]:
    """Image of a layout adjacency eigenvalue under subdivision.

    to_S:  +-sqrt(ev + 3);  to_LS: (1 +- sqrt(1 + 4(ev + 3)))/2.  The
    kernel padding (0s, and -2s for to_LS) is not included; see
    subdivision_full_spectrum.
    """
    if not -3.0 - 1e-12 <= ev <= 3.0 + 1e-12:
        raise InputError("layout eigenvalues lie in [-3, 3]")
    if direction == "to_S":
        root = np.sqrt(ev + 3.0)
        return (-float(root), float(root))
    if direction == "to_LS":
        root = np.sqrt(1.0 + 4.0 * (ev + 3.0))
        return ((1.0 - float(root)) / 2.0, (1.0 + float(root)) / 2.0)
    raise InputError("direction must be 'to_S' or 'to_LS'")


def subdivision_full_spectrum(layout_spectrum, direction: str) -> np.ndarray:
    """Full predicted spectrum of S(X) or L(S(X)) for a 3-regular X with
    the given adjacency spectrum, including the kernel padding: nu = n/2
    zeros for S(X), plus nu further -2s for L(S(X))."""
    evs = np.sort(np.asarray(layout_spectrum, dtype=float))
    n = len(evs)
    if n % 2:
        raise InputError("a 3-regular graph has an even number of vertices")
    nu = n // 2
    images = [subdivision_spectrum_map(e, direction) for e in evs]
    flat = [x for pair in images for x in pair]
    pad = [0.0] * nu
    if direction == "to_LS":
        pad += [-2.0] * nu
    return np.sort(np.array(flat + pad))


@dataclass(frozen=True)
class GapInterval:
    """Disjoint open intervals inside [-3, 3] avoided by a family of
    layout adjacency spectra (trivial +-3 eigenvalues excluded)."""

    name: str
    components: tuple[tuple[float, float], ...]

    def __post_init__(self):
        prev_hi = None
        for lo, hi in self.components:
            if not (-3.0 <= lo < hi <= 3.0):
                raise InputError("interval components must sit inside [-3, 3]")
            if prev_hi is not None and lo < prev_hi:
                raise InputError("interval components must be disjoint")
            prev_hi = hi

    def contains(self, x: float) -> bool:
        return any(lo < x < hi for lo, hi in self.components)


def maximal_gap_intervals() -> dict[str, GapInterval]:
    """Named catalog of the maximal gap intervals for 3-regular layouts.

    ramanujan: globally maximal, attained by non-bipartite cubic Ramanujan
    graphs.  mclaughlin: globally maximal, attained by the Cayley graph of
    Z_2 * Z_3; its interior endpoints are the subdivision images of the
    tree band edges.  hoffman_planar: locally maximal among planar layouts,
    attained by iterated line-graph/subdivision constructions; the interior
    endpoints are golden ratios.
    """
    t = TREE_BAND_EDGE
    b, bp = subdivision_spectrum_map(t, "to_LS")
    cp, c = subdivision_spectrum_map(-t, "to_LS")
    phi_m, phi_p = subdivision_spectrum_map(-2.0, "to_LS")
    return {
        "ramanujan": GapInterval("ramanujan", ((-3.0, -t), (t, 3.0))),
        "mclaughlin": GapInterval(
            "mclaughlin",
            ((-3.0, -2.0), (-2.0, b), (cp, 0.0), (0.0, c), (bp, 3.0)),
        ),
        "hoffman_planar": GapInterval(
            "hoffman_planar", ((-3.0, -2.0), (phi_m, 0.0), (0.0, phi_p))
        ),
    }


@dataclass
class GapFitModel:
    """Fitted extrapolation lambda(r) = A +- 1/(w + (r/s)^p).

    A is the asymptotic eigenvalue; for layout spectra the asymptotic gap
    is 3 - |A|.
    """

    a: float
    w: float
    s: float
    p: float
    sign: int
    rms: float
    n_points: int
    covariance: np.ndarray | None = None

    def value(self, r) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return self.a + self.sign / (self.w + (r / self.s) ** self.p)

    @property
    def asymptotic_gap(self) -> float:
        return 3.0 - abs(self.a)


def fit_gap_curve(data, sign: int) -> GapFitModel:
    """Least-squares fit of the four-parameter extrapolation curve.

    data: (r, value) pairs with r strictly increasing, at least 5 of them.
    sign: +1 when the data decreases toward the asymptote from above
    (smallest eigenvalues), -1 when it increases from below (largest).
    Positivity of s and p is enforced by optimizing their logarithms.
    """
    pts = np.asarray(data, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 5:
        raise InputError("need at least 5 (r, value) pairs")
    r, y = pts[:, 0], pts[:, 1]
    if np.any(np.diff(r) <= 0):
        raise InputError("r values must be strictly increasing")
    if sign not in (-1, 1):
        raise InputError("sign must be +1 or -1")

    def model(params):
        a, w, ls, lp = params
        return a + sign / (w + (r / np.exp(ls)) ** np.exp(lp))

    def resid(params):
        return model(params) - y

    x0 = np.array([y[-1], 1.0, 0.0, np.log(1.4)])
    sol = least_squares(resid, x0, method="lm", xtol=1e-14, ftol=1e-14, max_nfev=20000)
    a, w, ls, lp = sol.x
    rms = float(np.sqrt(np.mean(sol.fun**2)))
    model_out = GapFitModel(
        a=float(a),
        w=float(w),
        s=float(np.exp(ls)),
        p=float(np.exp(lp)),
        sign=sign,
        rms=rms,
        n_points=len(r),
        covariance=_fit_covariance(sol, rms),
    )
    if not sol.success:
        raise ConvergenceError(
            f"gap-curve fit did not converge: {sol.message}", best=model_out
        )
    return model_out


def _fit_covariance(sol, rms):
    # covariance in (A, w, s, p) via the chain rule on the log parameters
    try:
        jtj = sol.jac.T @ sol.jac
        cov_log = np.linalg.inv(jtj) * rms**2
        scale = np.diag([1.0, 1.0, np.exp(sol.x[2]), np.exp(sol.x[3])])
        return scale @ cov_log @ scale
    except np.linalg.LinAlgError:
        return None


def is_ramanujan_layout(g: Graph, max_dim: int = 12000) -> bool:
    """Whether the first positive Laplacian eigenvalue reaches the
    asymptotically optimal expander gap 3 - 2 sqrt(2)."""
    if g.n == 0 or any(g.degree(v) != 3 for v in range(g.n)):
        raise InputError("Ramanujan check requires a 3-regular graph")
    if not is_connected(g):
        raise InputError("Ramanujan check requires a connected graph")
    lam1 = laplacian_gap(g, max_dim=max_dim)
    return lam1 >= RAMANUJAN_LAPLACIAN_GAP - 1e-12


def laplacian_gap(g: Graph, max_dim: int = 12000) -> float:
    """Smallest positive eigenvalue of D - A for a connected graph."""
    sr = dense_spectrum(signed_laplacian(g, "minus"), max_dim=max_dim)
    return float(sr.eigenvalues[1])


def effective_gap_above_flat(g: Graph, flavor: str = "s", max_dim: int = 12000) -> float:
    """lambda(H_flavor) + 2: the gap above the flat band, densely."""
    sr = dense_spectrum(effective_hamiltonian(g, flavor), max_dim=max_dim)
    above = sr.eigenvalues[sr.eigenvalues > -2.0 + sr.degeneracy_tol]
    if len(above) == 0:
        raise InputError("no spectrum above the flat band")
    return float(above[0] + 2.0)
