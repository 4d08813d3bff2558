"""Bloch theory on PeriodicLattice: H(k), band structures, flat bands.

Momenta are fractional reciprocal coordinates throughout: k = (k1, k2)
means k1 b1 + k2 b2 with b_i the reciprocal basis, so a hopping into cell
(n1, n2) contributes the phase exp(2 pi i (k1 n1 + k2 n2)) regardless of
the lattice geometry.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .lattices.euclidean import PeriodicLattice, finite_lattice
from .operators import effective_hamiltonian
from .spectra import dense_spectrum

HERMITICITY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class BlochHamiltonian:
    """Evaluator k -> J x J Hermitian Bloch matrix for a periodic lattice.

    weights carries one sign per hopping (+1 throughout for plain
    adjacency; +-1 patterns realize the oriented half-wave operator on
    medial lattices).
    """

    lattice: PeriodicLattice
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (len(self.lattice.hoppings),):
            raise InputError("one weight per hopping required")
        object.__setattr__(self, "weights", w)

    @property
    def dim(self) -> int:
        return self.lattice.nsites

    def matrix(self, k) -> np.ndarray:
        k1, k2 = float(k[0]), float(k[1])
        h = np.zeros((self.dim, self.dim), dtype=complex)
        for w, (i, j, (n1, n2)) in zip(self.weights, self.lattice.hoppings):
            phase = w * np.exp(2j * np.pi * (k1 * n1 + k2 * n2))
            h[i, j] += phase
            h[j, i] += np.conj(phase)
        if np.abs(h - h.conj().T).max() > HERMITICITY_TOL:
            raise AssertionError("Bloch matrix lost hermiticity")
        return h

    def bands_at(self, k) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix(k))


def bloch_hamiltonian(
    pl: PeriodicLattice, weights=None
) -> BlochHamiltonian:
    if weights is None:
        weights = np.ones(len(pl.hoppings))
    return BlochHamiltonian(pl, weights)


@dataclass
class BandStructure:
    """Ascending-sorted band energies sampled on a list of momenta."""

    kpoints: np.ndarray
    bands: np.ndarray
    labels: dict[int, str] = field(default_factory=dict)

    @property
    def nbands(self) -> int:
        return self.bands.shape[1]


def band_structure(bh: BlochHamiltonian, kpoints) -> BandStructure:
    kpoints = np.atleast_2d(np.asarray(kpoints, dtype=float))
    if kpoints.size == 0:
        raise InputError("empty momentum path")
    bands = np.empty((len(kpoints), bh.dim))
    for i, k in enumerate(kpoints):
        bands[i] = bh.bands_at(k)
    return BandStructure(kpoints, bands)


def kpath(points, samples_per_segment: int = 40):
    """Piecewise-linear path through fractional k-points.

    Returns (kpoints, labels) with labels marking the input nodes.
    """
    pts = [np.asarray(p, dtype=float) for p in points]
    if len(pts) < 2:
        raise InputError("need at least two path nodes")
    ks = []
    labels = {}
    for a, b in zip(pts[:-1], pts[1:]):
        labels[len(ks)] = _fmt_node(a)
        for t in range(samples_per_segment):
            ks.append(a + (b - a) * t / samples_per_segment)
    labels[len(ks)] = _fmt_node(pts[-1])
    ks.append(pts[-1])
    return np.array(ks), labels


def _fmt_node(p) -> str:
    return f"({p[0]:g},{p[1]:g})"


def default_hexagonal_path(samples_per_segment: int = 40):
    """Gamma - M - K - Gamma in fractional coordinates."""
    return kpath(
        [(0, 0), (0.5, 0), (1 / 3, 1 / 3), (0, 0)], samples_per_segment
    )


def uniform_grid(n: int) -> np.ndarray:
    """n x n uniform fractional grid; commensurate with an n x n torus."""
    if n < 1:
        raise InputError("grid size must be positive")
    f = np.arange(n) / n
    return np.array([(a, b) for a in f for b in f])


def line_graph_lattice(
    pl: PeriodicLattice, flavor: str = "s"
) -> tuple[PeriodicLattice, np.ndarray]:
    """Medial construction: one site per bond of pl, placed at the bond
    midpoint, adjacent when the bonds share a lattice endpoint.

    For flavor 'a' each bond type is oriented foot -> head = (i -> j); this
    single choice is translation invariant, so it realizes the half-wave
    operator without enlarging the cell.  Returns the new lattice and the
    +-1 weight per new hopping (all +1 for flavor 's').
    """
    if flavor not in ("s", "a"):
        raise InputError("flavor must be 's' or 'a'")
    hops = pl.hoppings
    sites = np.array(
        [(pl.sites[i] + pl.sites[j] + (n1, n2)) / 2 for i, j, (n1, n2) in hops]
    )
    # endpoint instances of bond h placed in cell (0,0): (site, cell) pairs
    ends = [
        ((i, (0, 0)), (j, n)) for i, j, n in hops
    ]
    new_hops = []
    weights = []
    seen = set()
    for a in range(len(hops)):
        for b in range(len(hops)):
            for ea_idx, (sa, ca) in enumerate(ends[a]):
                for eb_idx, (sb, cb) in enumerate(ends[b]):
                    if sa != sb:
                        continue
                    # bond b shifted by c has endpoint (sb, cb + c) = (sa, ca)
                    c = (ca[0] - cb[0], ca[1] - cb[1])
                    if a == b and c == (0, 0):
                        continue
                    canon = min((a, b, c), (b, a, (-c[0], -c[1])))
                    if canon in seen:
                        continue
                    seen.add(canon)
                    new_hops.append((a, b, c))
                    if flavor == "a":
                        # role +1 at the head (endpoint index 1 is site j)
                        ra = 1 if ea_idx == 1 else -1
                        rb = 1 if eb_idx == 1 else -1
                        weights.append(ra * rb)
                    else:
                        weights.append(1)
    return (
        PeriodicLattice(pl.basis, sites, tuple(new_hops)),
        np.array(weights, dtype=float),
    )


@dataclass
class LiftReport:
    """Outcome of the band-lifting check on a k-grid."""

    flavor: str
    degree: int
    n_flat: int
    max_band_dev: float
    max_flat_dev: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_band_dev <= self.tol


def verify_band_lifting(
    layout_pl: PeriodicLattice,
    flavor: str = "s",
    kpoints=None,
    grid: int = 48,
    tol: float = 1e-9,
) -> LiftReport:
    """Check that the medial-lattice bands are the layout bands shifted by
    d - 2 (flavor 's') or reflected (flavor 'a'), plus flat bands at -2.

    Bands are compared as sorted multisets per momentum, so band crossings
    do not disturb the check.
    """
    degs = layout_pl.site_degrees()
    d = int(degs[0])
    if not np.all(degs == d):
        raise InputError("band lifting requires a regular layout lattice")
    if kpoints is None:
        kpoints = uniform_grid(grid)
    lg, w = line_graph_lattice(layout_pl, flavor)
    bh_layout = bloch_hamiltonian(layout_pl)
    bh_line = bloch_hamiltonian(lg, w)
    n_flat = lg.nsites - layout_pl.nsites
    sign = 1.0 if flavor == "s" else -1.0
    band_dev = 0.0
    flat_dev = 0.0
    for k in kpoints:
        actual = bh_line.bands_at(k)
        lifted = d - 2 + sign * bh_layout.bands_at(k)
        expected = np.sort(np.concatenate([np.full(n_flat, -2.0), lifted]))
        band_dev = max(band_dev, float(np.abs(actual - expected).max()))
        flat_dev = max(flat_dev, float(np.abs(actual[:n_flat] + 2.0).max()))
    return LiftReport(
        flavor=flavor,
        degree=d,
        n_flat=n_flat,
        max_band_dev=band_dev,
        max_flat_dev=flat_dev,
        tol=tol,
    )


def flat_band_census(bs: BandStructure, flat_tol: float = 1e-9):
    """Bands whose spread over the samples is below flat_tol, with their
    mean energy."""
    out = []
    for j in range(bs.nbands):
        col = bs.bands[:, j]
        if col.max() - col.min() < flat_tol:
            out.append((j, float(col.mean())))
    return out


def torus_flat_band_count(
    pl: PeriodicLattice,
    size: tuple[int, int],
    flavor: str = "s",
    degeneracy_tol: float = 1e-8,
    max_dim: int = 12000,
) -> int:
    """Multiplicity of -2 in the effective Hamiltonian of the finite torus
    built from the layout lattice pl (dense diagonalization)."""
    fl = finite_lattice(pl, size, "torus")
    h = effective_hamiltonian(fl.graph, flavor)
    sr = dense_spectrum(h, degeneracy_tol=degeneracy_tol, max_dim=max_dim)
    return sr.count_near(-2.0)
