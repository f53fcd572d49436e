"""Seeded synthetic chromatic point sets.

Coordinates are rounded to ``decimals`` decimal places and stored as exact
fractions, so a seed fixes the point set bit for bit.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .core import ChromaticPointSet

PATTERNS = ("circle-on-background", "split-background-circle", "uniform-random", "blobs")


def _exact(arr: np.ndarray, decimals: int) -> list[tuple[Fraction, ...]]:
    return [tuple(Fraction(f"{x:.{decimals}f}") for x in row) for row in arr]


def _build(coords: np.ndarray, colors, decimals: int) -> ChromaticPointSet:
    pts = _exact(coords, decimals)
    if len(set(pts)) != len(pts):
        raise RuntimeError("rounding produced duplicate points; use more decimals")
    return ChromaticPointSet.from_coords(pts, [int(c) for c in colors])


def _circle_and_background(rng, n_circle, n_bg, radius, noise, extent):
    step = 2 * np.pi / n_circle
    t = step * np.arange(n_circle) + rng.uniform(-0.25 * step, 0.25 * step, n_circle)
    r = radius + rng.normal(0.0, noise, n_circle)
    circle = np.column_stack([r * np.cos(t), r * np.sin(t)])
    bg = rng.uniform(-extent, extent, (n_bg, 2))
    return circle, bg


def circle_on_background(n_circle: int = 30, n_bg: int = 120, radius: float = 1.0, noise: float = 0.05,
                         extent: float = 2.0, seed: int = 0, decimals: int = 6) -> ChromaticPointSet:
    """Colour 0 on a noisy circle, colour 1 uniform in the square ``[-extent, extent]^2``.

    Circle angles are evenly spaced with a small jitter and radii carry
    Gaussian noise of standard deviation ``noise``.
    """
    if n_circle < 3:
        raise ValueError("need at least 3 circle points")
    if n_bg < 1:
        raise ValueError("need at least 1 background point")
    circle, bg = _circle_and_background(np.random.default_rng(seed), n_circle, n_bg, radius, noise, extent)
    return _build(np.vstack([circle, bg]), [0] * n_circle + [1] * n_bg, decimals)


def split_background_circle(n_circle: int = 30, n_bg: int = 120, radius: float = 1.0, noise: float = 0.05,
                            extent: float = 2.0, seed: int = 0, decimals: int = 6) -> ChromaticPointSet:
    """Same point set as :func:`circle_on_background`, with the background split
    by the vertical line ``x = 0`` into colours 1 (left) and 2 (right)."""
    if n_circle < 3:
        raise ValueError("need at least 3 circle points")
    if n_bg < 2:
        raise ValueError("need at least 2 background points")
    circle, bg = _circle_and_background(np.random.default_rng(seed), n_circle, n_bg, radius, noise, extent)
    side = np.where(bg[:, 0] < 0, 1, 2)
    if len(set(side.tolist())) < 2:
        raise ValueError("background falls on one side only; change the seed or counts")
    return _build(np.vstack([circle, bg]), [0] * n_circle + side.tolist(), decimals)


def uniform_random(n: int = 20, n_colors: int = 3, dim: int = 2, seed: int = 0,
                   decimals: int = 6) -> ChromaticPointSet:
    """``n`` points uniform in the unit cube, every colour used at least once."""
    if n_colors < 1 or n < n_colors:
        raise ValueError("need at least one point per colour")
    rng = np.random.default_rng(seed)
    coords = rng.uniform(0.0, 1.0, (n, dim))
    colors = np.concatenate([np.arange(n_colors), rng.integers(0, n_colors, n - n_colors)])
    rng.shuffle(colors)
    return _build(coords, colors, decimals)


def blobs(n_per_blob: int = 15, n_colors: int = 3, spread: float = 0.3, separation: float = 4.0,
          seed: int = 0, decimals: int = 6) -> ChromaticPointSet:
    """One Gaussian blob per colour, centres evenly spaced on a circle."""
    if n_per_blob < 1 or n_colors < 1:
        raise ValueError("need at least one blob with one point")
    rng = np.random.default_rng(seed)
    parts, colors = [], []
    for j in range(n_colors):
        a = 2 * np.pi * j / n_colors
        centre = separation * np.array([np.cos(a), np.sin(a)])
        parts.append(centre + rng.normal(0.0, spread, (n_per_blob, 2)))
        colors += [j] * n_per_blob
    return _build(np.vstack(parts), colors, decimals)


def generate(pattern: str, seed: int = 0, **params) -> ChromaticPointSet:
    makers = {
        "circle-on-background": circle_on_background,
        "split-background-circle": split_background_circle,
        "uniform-random": uniform_random,
        "blobs": blobs,
    }
    if pattern not in makers:
        raise ValueError(f"unknown pattern {pattern!r}; choose from {', '.join(PATTERNS)}")
    return makers[pattern](seed=seed, **params)
