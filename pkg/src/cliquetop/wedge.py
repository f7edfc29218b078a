"""Homological check of the wedge decomposition for sparse connected complexes.

A finite connected 2-complex all of whose subcomplexes have more than one
vertex per three edges should be homotopy equivalent to a wedge of ``a``
circles, ``b`` real projective planes and ``s`` 2-spheres.  Such a wedge has
H1(Z) = Z^a + (Z/2)^b and H2(Z) = Z^s, which fixes every Betti number; this
module reads (a, b, s) off integral homology and checks the rest.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import Complex2, connected_components, euler_characteristic, is_connected
from .cx2 import dumps
from .density import THIRD, DensityReport, density_flow
from .errors import PreconditionError
from .homology import HomologySummary, homology_integral
from .random_models import sample_knp, trial_seed


class WedgeSignature(tuple):
    """(a, b, s): circle, projective-plane and sphere factor counts."""

    def __new__(cls, a: int, b: int, s: int):
        return super().__new__(cls, (a, b, s))

    a = property(lambda self: self[0])
    b = property(lambda self: self[1])
    s = property(lambda self: self[2])

    def __repr__(self):
        return f"WedgeSignature(a={self[0]}, b={self[1]}, s={self[2]})"


@dataclass
class Inconsistency:
    """A complex meeting the density hypothesis whose homology is not that of a wedge."""

    violated: list[str]
    signature: WedgeSignature
    homology: HomologySummary
    chi: int
    complex: Complex2
    density: DensityReport | None = None
    context: dict = field(default_factory=dict)

    def report(self) -> str:
        lines = ["WEDGE INCONSISTENCY"]
        lines += [f"violated: {v}" for v in self.violated]
        lines.append(f"signature (a,b,s) = {tuple(self.signature)}; chi = {self.chi}")
        h = self.homology
        lines.append(f"betti_f2 = {h.betti_f2}; betti_q = {h.betti_q}; torsion = {list(h.torsion_h1)}")
        for k, v in self.context.items():
            lines.append(f"{k}: {v}")
        lines.append(dumps(self.complex).rstrip())
        return "\n".join(lines)


def check_wedge_equations(h: HomologySummary, chi: int) -> tuple[WedgeSignature, list[str]]:
    a, s = h.betti_q[1], h.betti_q[2]
    b = len(h.torsion_h1)
    sig = WedgeSignature(a, b, s)
    bad = []
    if any(t != 2 for t in h.torsion_h1):
        bad.append(f"torsion factors all 2 (got {list(h.torsion_h1)})")
    if h.betti_f2[1] != a + b:
        bad.append(f"b1(F2) = a + b ({h.betti_f2[1]} != {a} + {b})")
    if h.betti_f2[2] != s + b:
        bad.append(f"b2(F2) = s + b ({h.betti_f2[2]} != {s} + {b})")
    if chi != 1 - a + s:
        bad.append(f"chi = 1 - a + s ({chi} != 1 - {a} + {s})")
    return sig, bad


def wedge_signature(X: Complex2, density: DensityReport | None = None) -> WedgeSignature | Inconsistency:
    """Signature of a connected complex with density > 1/3, or an inconsistency.

    Raises :class:`PreconditionError` with reason ``disconnected`` or
    ``density-at-most-one-third`` when the hypothesis fails; complexes at
    exactly 1/3 are rejected.
    """
    if not is_connected(X):
        raise PreconditionError("disconnected", "wedge signature needs a connected complex")
    rep = density if density is not None else density_flow(X)
    if not rep.exceeds(THIRD):
        raise PreconditionError("density-at-most-one-third", f"density is {rep.value}")
    h = homology_integral(X)
    chi = euler_characteristic(X)
    sig, bad = check_wedge_equations(h, chi)
    if bad:
        return Inconsistency(bad, sig, h, chi, X, rep)
    return sig


def scan_for_counterexamples(n: int, p: float, trials: int, seed: int) -> list[Inconsistency]:
    """Sample K(n, p) and test every component with density > 1/3."""
    if n < 1 or trials < 1:
        raise ValueError("n and trials must be positive")
    found = []
    for j in range(trials):
        s = trial_seed(seed, 0, j)
        for comp in connected_components(sample_knp(n, p, s)):
            rep = density_flow(comp)
            if not rep.exceeds(THIRD):
                continue
            out = wedge_signature(comp, rep)
            if isinstance(out, Inconsistency):
                out.context.update(n=n, p=p, seed=s)
                found.append(out)
    return found
