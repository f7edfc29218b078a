"""Spectral gaps of vertex links (the Garland/Zuk criterion input).

Floating point is confined to this module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex import Complex2, LinkGraph, all_links, vertex_link


class EmptyLinkError(ValueError):
    pass


def normalized_laplacian(link: LinkGraph) -> np.ndarray:
    """I - D^{-1/2} A D^{-1/2}; rows of isolated link vertices are zero."""
    idx = {v: i for i, v in enumerate(link.vertices)}
    k = len(idx)
    A = np.zeros((k, k))
    for u, w in link.edges:
        A[idx[u], idx[w]] = A[idx[w], idx[u]] = 1.0
    deg = A.sum(axis=1)
    inv = np.zeros(k)
    nz = deg > 0
    inv[nz] = 1.0 / np.sqrt(deg[nz])
    L = -(inv[:, None] * A * inv[None, :])
    L[np.diag_indices(k)] = nz.astype(float)
    return L


def link_spectrum(link: LinkGraph) -> np.ndarray:
    return np.linalg.eigvalsh(normalized_laplacian(link))


def _gap(link: LinkGraph, tol: float) -> tuple[float, bool]:
    """(gap, connected); the gap of a disconnected or edgeless link is 0."""
    ev = link_spectrum(link)
    connected = np.count_nonzero(np.abs(ev) <= tol) == 1
    above = ev[ev > tol]
    if not connected or not above.size:
        return 0.0, connected
    return float(above.min()), True


def link_spectral_gap(X: Complex2, v: int, tol: float = 1e-10) -> float:
    """Smallest nonzero normalized-Laplacian eigenvalue of the link of v (0 if disconnected)."""
    link = vertex_link(X, v)
    if not link.vertices or not link.edges:
        raise EmptyLinkError(f"link of vertex {v} is empty or has no edges")
    return _gap(link, tol)[0]


@dataclass
class SpectralReport:
    gaps: dict[int, float]
    min_gap: float | None
    all_links_connected: bool
    threshold: float
    passed: bool

    @property
    def frac_links_passing(self) -> float | None:
        if not self.gaps:
            return None
        return sum(g > self.threshold for g in self.gaps.values()) / len(self.gaps)

    def csv_fields(self) -> dict:
        return {"min_gap": "" if self.min_gap is None else repr(self.min_gap),
                "frac_links_passing": "" if self.frac_links_passing is None else repr(self.frac_links_passing),
                "all_links_connected": int(self.all_links_connected)}


def garland_scan(X: Complex2, threshold: float = 0.5, tol: float = 1e-10) -> SpectralReport:
    """Check that every nonempty link is connected with gap > threshold.

    A nonempty link without edges has gap 0 and fails.  This reports the
    spectral hypothesis only.
    """
    gaps = {}
    connected = True
    for v, link in all_links(X).items():
        if not link.vertices:
            continue
        g, conn = _gap(link, tol)
        connected = connected and bool(conn)
        gaps[v] = g
    min_gap = min(gaps.values()) if gaps else None
    passed = all(g > threshold for g in gaps.values())
    return SpectralReport(gaps, min_gap, connected, threshold, passed)
