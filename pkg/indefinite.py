#    indefinite.py -- SE/DE-Sinc indefinite integration
#
#    This file is part of sincvide.
#
#    sincvide is free software; you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation; either version 2 of the License, or
#    (at your option) any later version.
#
#    sincvide is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with sincvide; if not, write to the Free Software
#    Foundation, Inc., 51 Franklin St, Fifth Floor, Boston, MA  02110-1301  USA
#

"""Approximate int_a^t f(s) ds by sum_j f(t_j) w_j(t)."""

__all__ = [
    'IndefiniteApprox',
    'build_indefinite',
    'definite_value',
    'equispaced_points',
    'eval_indefinite',
    'indefinite_max_error',
    'sample_nodes',
]

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import EvaluationError
from .transform import Nodes, SincGrid, weight_matrix

DEFAULT_EVAL_POINTS = 999


@dataclass(frozen=True, eq=False)
class IndefiniteApprox:

    grid: SincGrid
    samples: np.ndarray


def sample_nodes(
        what: str, f: Callable[[Nodes], np.ndarray],
        grid: SincGrid) -> np.ndarray:
    """Evaluate f at the active nodes of grid; inactive samples are zero.

    :raises EvaluationError: if f returns a non-finite value
    """
    active = grid.active
    samples = np.zeros(grid.n)
    values = np.broadcast_to(
        np.asarray(f(grid.nodes()[active]), dtype=float),
        (np.count_nonzero(active),))
    samples[active] = values
    bad = ~np.isfinite(samples)
    if bad.any():
        raise EvaluationError(what, int(grid.indices[bad][0]))
    return samples


def build_indefinite(
        f: Callable[[Nodes], np.ndarray], grid: SincGrid) -> IndefiniteApprox:
    samples = sample_nodes('f', f, grid)
    samples.setflags(write=False)
    return IndefiniteApprox(grid, samples)


def eval_indefinite(approx: IndefiniteApprox, t):
    """Value of the approximate antiderivative at t in [a, b].

    Returns a float for scalar t, an array otherwise.
    """
    values = weight_matrix(approx.grid, t) @ approx.samples
    if np.ndim(t) == 0 and not isinstance(t, Nodes):
        return float(values[0])
    return values


def definite_value(approx: IndefiniteApprox) -> float:
    return eval_indefinite(approx, approx.grid.interval.b)


def equispaced_points(interval, m: int = DEFAULT_EVAL_POINTS) -> np.ndarray:
    """The m interior points a + i (b - a)/(m + 1), i = 1..m."""
    i = np.arange(1, m + 1)
    return interval.a + i * interval.length / (m + 1)


def indefinite_max_error(
        approx: IndefiniteApprox, antiderivative: Callable,
        m: int = DEFAULT_EVAL_POINTS) -> float:
    """Maximum error against int_a^t f on m equally spaced interior points."""
    t = equispaced_points(approx.grid.interval, m)
    return float(np.max(np.abs(
        eval_indefinite(approx, t) - antiderivative(t))))
