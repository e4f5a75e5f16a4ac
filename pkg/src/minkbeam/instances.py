"""Seeded random instances."""
from __future__ import annotations

import numpy as np

from .beamforming import BeamProblem, PhaseSet

MODELS = ("rayleigh", "unit")


def random_channels(n: int, rng: np.random.Generator, model: str = "rayleigh") -> np.ndarray:
    """i.i.d. standard complex Gaussian (``rayleigh``) or random-phase unit gains."""
    if model == "rayleigh":
        return (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / np.sqrt(2.0)
    if model == "unit":
        return np.exp(2j * np.pi * rng.random(n))
    raise ValueError(f"unknown channel model {model!r}")


def gen_document(n: int, m: int, seed: int, ris: bool = False, model: str = "rayleigh") -> dict:
    """Problem-file document with M-PSK sets given by the ``psk`` shorthand."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    h = random_channels(n, np.random.default_rng(seed), model)
    return {
        "channels": [[float(z.real), float(z.imag)] for z in h],
        "phase_sets": {"psk": {"M": m}},
        "ris_mode": ris,
    }


def psk_problem(n: int, m: int, rng: np.random.Generator, model: str = "rayleigh", **kw) -> BeamProblem:
    h = random_channels(n, rng, model)
    return BeamProblem(tuple(h), (PhaseSet.psk(m),) * n, **kw)
