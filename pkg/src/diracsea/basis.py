"""Free plane-wave Dirac modes in a periodic 1D box.

Natural units (hbar = c = 1). A mode is labelled by an integer momentum
index r (p_r = 2*pi*r/L) and a branch +-1, the sign of its energy. The
two-component spinors are real for this basis; all complex structure lives
in the phase factors, which never materialize here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "BoxConfig",
    "Mode",
    "Spinor",
    "momentum",
    "energy",
    "spinor",
    "spinor_inner",
    "energy_difference",
]


@dataclass(frozen=True)
class BoxConfig:
    """Periodic box of length L holding fermions of mass m."""

    L: float
    m: float

    def __post_init__(self):
        if not (np.isfinite(self.L) and self.L > 0):
            raise ValueError(f"box length must be positive and finite, got {self.L}")
        if not (np.isfinite(self.m) and self.m > 0):
            raise ValueError(f"mass must be positive and finite, got {self.m}")


@dataclass(frozen=True)
class Mode:
    """Single-particle level: momentum index r, branch = sign of the energy."""

    r: int
    branch: int

    def __post_init__(self):
        if self.branch not in (1, -1):
            raise ValueError(f"branch must be +1 or -1, got {self.branch}")


@dataclass(frozen=True)
class Spinor:
    """Two real components of a free-mode spinor; norm^2 * L = 1."""

    upper: float
    lower: float


def momentum(cfg: BoxConfig, r: int) -> float:
    """Momentum 2*pi*r/L of index r."""
    return 2.0 * np.pi * r / cfg.L


def energy(cfg: BoxConfig, mode: Mode) -> float:
    """Signed free energy branch * sqrt(p_r^2 + m^2)."""
    return mode.branch * float(np.hypot(momentum(cfg, mode.r), cfg.m))


def spinor(cfg: BoxConfig, mode: Mode) -> Spinor:
    """Real spinor of a free mode, normalized to upper^2 + lower^2 = 1/L."""
    if mode.branch == -1 and mode.r == 0:
        # closed form is 0/0 here; this is the exact p = 0 eigenvector of
        # energy -m, and the limit of the formula along the branch
        return Spinor(0.0, float(1.0 / np.sqrt(cfg.L)))
    p = momentum(cfg, mode.r)
    e = energy(cfg, mode)
    norm = np.sqrt((e + cfg.m) / (2.0 * cfg.L * e))
    return Spinor(float(norm), float(norm * p / (e + cfg.m)))


def spinor_inner(a: Spinor, b: Spinor) -> float:
    """Component-wise product a . b (spinors are real)."""
    return a.upper * b.upper + a.lower * b.lower


def energy_difference(cfg: BoxConfig, dest: Mode, src: Mode) -> float:
    """eps(dest) - eps(src), cancellation-free for same-branch pairs.

    Same-branch differences of nearby high-|r| modes lose most digits if
    done by direct subtraction; (p_s^2 - p_r^2)/(E_s + E_r) does not.
    """
    if dest.branch == src.branch:
        scale = 2.0 * np.pi / cfg.L
        p_minus = scale * (dest.r - src.r)
        p_plus = scale * (dest.r + src.r)
        e_s = np.hypot(momentum(cfg, dest.r), cfg.m)
        e_r = np.hypot(momentum(cfg, src.r), cfg.m)
        return dest.branch * p_minus * p_plus / (e_s + e_r)
    return energy(cfg, dest) - energy(cfg, src)


def _energies(cfg: BoxConfig, r: np.ndarray) -> np.ndarray:
    """Vector of unsigned energies E_r for an array of indices."""
    return np.hypot(2.0 * np.pi * np.asarray(r, dtype=float) / cfg.L, cfg.m)


def _spinor_components(cfg: BoxConfig, branch: int, r: np.ndarray):
    """Vectorized (upper, lower) spinor components over an index array."""
    r = np.asarray(r, dtype=float)
    p = 2.0 * np.pi * r / cfg.L
    e = branch * np.hypot(p, cfg.m)
    with np.errstate(divide="ignore", invalid="ignore"):
        norm = np.sqrt((e + cfg.m) / (2.0 * cfg.L * e))
        upper = norm
        lower = norm * p / (e + cfg.m)
    if branch == -1:
        zero = r == 0
        if np.any(zero):
            upper = np.where(zero, 0.0, upper)
            lower = np.where(zero, 1.0 / np.sqrt(cfg.L), lower)
    return upper, lower
