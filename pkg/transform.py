#    transform.py -- SE and DE variable transformations and Sinc grids
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

r"""Variable transformations mapping the real line onto (a, b).

SE: :math:`\psi(x) = \frac{b-a}{2}\tanh(x/2) + \frac{b+a}{2}`

DE: :math:`\psi(x) = \frac{b-a}{2}\tanh(\frac{\pi}{2}\sinh x) + \frac{b+a}{2}`

Distances to the endpoints are kept next to the points themselves, so
functions with endpoint singularities can be evaluated without cancellation.
"""

__all__ = [
    'DEFAULT_EPSILON',
    'Interval',
    'MethodKind',
    'Nodes',
    'RegularityParams',
    'SincGrid',
    'build_grid',
    'mesh_size',
    'psi',
    'psi_deriv',
    'psi_inverse',
    'weight',
    'weight_matrix',
]

from dataclasses import dataclass
import enum
import logging
import math
from typing import Union

import numpy as np
from scipy.special import expit

from .errors import DomainError, InvalidParameter
from .specfun import basis_j

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 0.05


class MethodKind(enum.Enum):

    SE = 'SE'
    DE = 'DE'

    @classmethod
    def from_string(cls, text: str) -> 'MethodKind':
        try:
            return cls(text.upper())
        except ValueError as e:
            raise InvalidParameter(
                'method', text, 'expected one of se, de') from e

    @property
    def d_limit(self) -> float:
        """Supremum of admissible strip half-widths."""
        if self is MethodKind.SE:
            return math.pi
        return math.pi / 2

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Interval:

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise InvalidParameter(
                'interval', (self.a, self.b), 'endpoints must be finite')
        if not self.a < self.b:
            raise InvalidParameter(
                'interval', (self.a, self.b), 'a must be smaller than b')

    @property
    def length(self) -> float:
        return self.b - self.a


@dataclass(frozen=True)
class RegularityParams:
    """Regularity of the problem data: decay exponent and strip half-width.

    ``epsilon`` is informational; it records the margin that was subtracted
    from the supremum of admissible ``d`` values.
    """

    alpha: float
    d: float
    method: MethodKind
    epsilon: float = 0.0

    def __post_init__(self):
        if not 0 < self.alpha <= 1:
            raise InvalidParameter(
                'alpha', self.alpha, 'must lie in (0, 1]')
        if not 0 < self.d < self.method.d_limit:
            raise InvalidParameter(
                'd', self.d,
                'must lie in (0, %g) for %s' % (
                    self.method.d_limit, self.method))

    @classmethod
    def from_margin(cls, alpha, d_sup, method, epsilon=DEFAULT_EPSILON):
        if not epsilon > 0:
            raise InvalidParameter('epsilon', epsilon, 'must be positive')
        return cls(alpha, d_sup - epsilon, method, epsilon)


@dataclass(frozen=True, eq=False)
class Nodes:
    """Points of an interval together with their distances to a and b."""

    t: np.ndarray
    dist_a: np.ndarray
    dist_b: np.ndarray

    @classmethod
    def from_points(cls, interval: Interval, t) -> 'Nodes':
        t = np.atleast_1d(np.asarray(t, dtype=float))
        return cls(t, t - interval.a, interval.b - t)

    def __len__(self):
        return len(self.t)

    def __getitem__(self, key) -> 'Nodes':
        return Nodes(self.t[key], self.dist_a[key], self.dist_b[key])


def mesh_size(params: RegularityParams, N: int) -> float:
    """Mesh size h balancing truncation and discretization errors."""
    if N < 1:
        raise InvalidParameter('N', N, 'must be a positive integer')
    if params.method is MethodKind.SE:
        return math.sqrt(math.pi * params.d / (params.alpha * N))
    ratio = 2 * params.d * N / params.alpha
    if ratio <= 1:
        raise InvalidParameter(
            'N', N, 'DE mesh size log(2dN/alpha)/N is not positive')
    return math.log(ratio) / N


def _return(value, scalar):
    if scalar:
        return float(value)
    return value


def psi(method: MethodKind, interval: Interval, x):
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    half = interval.length / 2
    mid = (interval.a + interval.b) / 2
    if method is MethodKind.SE:
        value = half * np.tanh(x / 2) + mid
    else:
        with np.errstate(over='ignore'):
            value = half * np.tanh(np.pi / 2 * np.sinh(x)) + mid
    return _return(value, scalar)


def psi_deriv(method: MethodKind, interval: Interval, x):
    scalar = np.ndim(x) == 0
    ax = np.abs(np.asarray(x, dtype=float))
    length = interval.length
    if method is MethodKind.SE:
        e = np.exp(-ax)
        value = length * e / (1 + e) ** 2
    else:
        with np.errstate(over='ignore'):
            s = np.pi / 2 * np.sinh(ax)
            log_cosh = ax + np.log1p(np.exp(-2 * ax)) - math.log(2)
            log_sech2 = (
                math.log(4) - 2 * s - 2 * np.log1p(np.exp(-2 * s)))
            value = length * math.pi / 4 * np.exp(log_cosh + log_sech2)
    return _return(value, scalar)


def _xi_from_dist(method, dist_a, dist_b):
    with np.errstate(divide='ignore'):
        log_ratio = np.log(dist_a) - np.log(dist_b)
    if method is MethodKind.SE:
        return log_ratio
    return np.arcsinh(log_ratio / np.pi)


def psi_inverse(method: MethodKind, interval: Interval, t):
    """Inverse transformation; t must lie strictly inside the interval.

    :raises DomainError: if t is not in the open interval
    """
    scalar = np.ndim(t) == 0
    t = np.asarray(t, dtype=float)
    bad = ~((t > interval.a) & (t < interval.b))
    if bad.any():
        raise DomainError('psi_inverse', float(np.ravel(t)[np.ravel(bad)][0]))
    if method is MethodKind.SE:
        value = np.log((t - interval.a) / (interval.b - t))
    else:
        z = (2 * t - interval.a - interval.b) / interval.length
        value = np.arcsinh(2 / np.pi * np.arctanh(z))
    return _return(value, scalar)


@dataclass(frozen=True, eq=False)
class SincGrid:
    """Sinc points t_j = psi(jh), j = -N..N, and derived arrays."""

    interval: Interval
    params: RegularityParams
    N: int
    h: float
    points: np.ndarray
    derivs: np.ndarray
    dist_a: np.ndarray
    dist_b: np.ndarray

    @property
    def method(self) -> MethodKind:
        return self.params.method

    @property
    def n(self) -> int:
        return 2 * self.N + 1

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.N, self.N + 1)

    @property
    def active(self) -> np.ndarray:
        """Nodes whose weights are representable in double precision."""
        return self.derivs > 0

    def nodes(self) -> Nodes:
        return Nodes(self.points, self.dist_a, self.dist_b)


def build_grid(
        interval: Interval, params: RegularityParams, N: int) -> SincGrid:
    h = mesh_size(params, N)
    x = np.arange(-N, N + 1) * h
    length = interval.length
    if params.method is MethodKind.SE:
        s = x
    else:
        with np.errstate(over='ignore'):
            s = np.pi * np.sinh(x)
    dist_a = length * expit(s)
    dist_b = length * expit(-s)
    points = np.where(x <= 0, interval.a + dist_a, interval.b - dist_b)
    derivs = psi_deriv(params.method, interval, x)
    # nodes that coincide with an endpoint carry no weight
    derivs[(dist_a == 0) | (dist_b == 0)] = 0.0
    for array in (points, derivs, dist_a, dist_b):
        array.setflags(write=False)
    logger.debug(
        'Built %s grid on [%g, %g] with N=%d, h=%.17g (%d active nodes)',
        params.method, interval.a, interval.b, N, h,
        np.count_nonzero(derivs))
    return SincGrid(
        interval=interval, params=params, N=N, h=h, points=points,
        derivs=derivs, dist_a=dist_a, dist_b=dist_b)


def weight_matrix(grid: SincGrid, t: Union[Nodes, np.ndarray]) -> np.ndarray:
    """All weights w_j(t) for a set of points in the closed interval.

    Returns an array of shape (len(t), n). At t = a every weight vanishes,
    at t = b the weights are h psi'(jh).

    :raises DomainError: if a point lies outside [a, b]
    """
    if not isinstance(t, Nodes):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        outside = (t < grid.interval.a) | (t > grid.interval.b) | np.isnan(t)
        if outside.any():
            raise DomainError('weight', float(t[outside][0]))
        t = Nodes.from_points(grid.interval, t)
    xi = _xi_from_dist(grid.method, t.dist_a, t.dist_b)
    basis = basis_j(grid.indices[np.newaxis, :], grid.h, xi[:, np.newaxis])
    return basis * grid.derivs[np.newaxis, :]


def weight(grid: SincGrid, j: int, t: float) -> float:
    """The weight w_j(t) = psi'(jh) J(j, h)(psi^-1(t)).

    :raises DomainError: if t is not in the open interval
    """
    if not -grid.N <= j <= grid.N:
        raise InvalidParameter('j', j, 'must lie in [-N, N]')
    xi = psi_inverse(grid.method, grid.interval, t)
    return float(grid.derivs[j + grid.N] * basis_j(j, grid.h, xi))
