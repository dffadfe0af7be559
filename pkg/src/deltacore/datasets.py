"""Synthetic point clouds: sphere, torus and a density-varying cube sample."""

from __future__ import annotations

import numpy as np

TORUS_MAJOR = 2.0
TORUS_MINOR = 1.0

SHAPES = ("sphere", "torus", "cube-heterogeneous")


def sphere(n: int, noise: float = 0.0, seed: int = 0) -> np.ndarray:
    """Uniform sample of the unit sphere in R^3 (normalized Gaussian triples)."""
    rng = np.random.default_rng(seed)
    pts = rng.normal(size=(n, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    if noise > 0:
        pts += rng.normal(scale=noise, size=pts.shape)
    return pts


def torus(n: int, noise: float = 0.0, seed: int = 0,
          major: float = TORUS_MAJOR, minor: float = TORUS_MINOR) -> np.ndarray:
    """Torus sample with both angles uniform, plus Gaussian coordinate noise."""
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0, 2 * np.pi, n)
    phi = rng.uniform(0, 2 * np.pi, n)
    ring = major + minor * np.cos(phi)
    pts = np.column_stack([ring * np.cos(theta), ring * np.sin(theta), minor * np.sin(phi)])
    if noise > 0:
        pts += rng.normal(scale=noise, size=pts.shape)
    return pts


def cube_heterogeneous(n: int, noise: float = 0.0, seed: int = 0,
                       background: float = 0.4, clusters: int = 3) -> np.ndarray:
    """Uniform background in [0,1]^3 mixed with Gaussian clusters, clamped to the cube.

    ``noise`` adds extra isotropic jitter before clamping.
    """
    rng = np.random.default_rng(seed)
    n_bg = int(round(background * n))
    sizes = rng.multinomial(n - n_bg, [1 / clusters] * clusters)
    centers = rng.uniform(0.2, 0.8, size=(clusters, 3))
    spreads = rng.uniform(0.04, 0.1, size=clusters)
    parts = [rng.uniform(0, 1, size=(n_bg, 3))]
    for size, center, spread in zip(sizes, centers, spreads):
        parts.append(center + rng.normal(scale=spread, size=(size, 3)))
    pts = np.concatenate(parts)
    if noise > 0:
        pts += rng.normal(scale=noise, size=pts.shape)
    return np.clip(pts, 0.0, 1.0)


def generate(shape: str, n: int, noise: float = 0.0, seed: int = 0) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be positive")
    if noise < 0:
        raise ValueError("noise must be non-negative")
    if shape == "sphere":
        return sphere(n, noise, seed)
    if shape == "torus":
        return torus(n, noise, seed)
    if shape == "cube-heterogeneous":
        return cube_heterogeneous(n, noise, seed)
    raise ValueError(f"unknown shape {shape!r}; choose from {', '.join(SHAPES)}")
