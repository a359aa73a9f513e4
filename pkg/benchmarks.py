#    benchmarks.py -- Benchmark problems with known solutions
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

"""Benchmark problems with exact solutions and manufactured problems."""

__all__ = [
    'BenchmarkCase',
    'DE_RATE',
    'INTEGRANDS',
    'IntegrandCase',
    'ManufacturedCase',
    'ParamsRecipe',
    'SE_LIKE_RATE',
    'lookup',
    'manufactured',
    'manufactured_problem',
    'registry',
]

from dataclasses import dataclass
import math
from typing import Callable, List, Optional

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import polynomial as P

from .errors import InvalidParameter, UnknownCase
from .solver import Problem
from .transform import (
    DEFAULT_EPSILON,
    Interval,
    MethodKind,
    Nodes,
    RegularityParams,
    )

DE_RATE = 'DE-rate'
SE_LIKE_RATE = 'SE-like-rate'

MANUFACTURED_PREFIX = 'manufactured-'

UNIT = Interval(0.0, 1.0)
SYMMETRIC = Interval(-1.0, 1.0)


@dataclass(frozen=True)
class ParamsRecipe:
    """How (alpha, d) follow from a margin epsilon for one method."""

    alpha: float
    d_sup: float
    d_for_epsilon: Optional[Callable[[float], float]] = None

    def d(self, epsilon: float) -> float:
        if self.d_for_epsilon is not None:
            return self.d_for_epsilon(epsilon)
        return self.d_sup - epsilon

    def params(self, method: MethodKind,
               epsilon: float = DEFAULT_EPSILON) -> RegularityParams:
        if not epsilon > 0:
            raise InvalidParameter('epsilon', epsilon, 'must be positive')
        return RegularityParams(
            self.alpha, self.d(epsilon), method, epsilon)


@dataclass(frozen=True, eq=False)
class BenchmarkCase:

    name: str
    problem: Problem
    exact: Callable[[np.ndarray], np.ndarray]
    se_recipe: ParamsRecipe
    de_recipe: ParamsRecipe
    de_rate_expected: str = DE_RATE
    description: str = ''

    def recipe(self, method: MethodKind) -> ParamsRecipe:
        if method is MethodKind.SE:
            return self.se_recipe
        return self.de_recipe

    def params(self, method: MethodKind,
               epsilon: float = DEFAULT_EPSILON) -> RegularityParams:
        return self.recipe(method).params(method, epsilon)

    @property
    def se_params(self) -> RegularityParams:
        return self.params(MethodKind.SE)

    @property
    def de_params(self) -> RegularityParams:
        return self.params(MethodKind.DE)


def _brunner() -> BenchmarkCase:
    def g(x):
        return 1 + 2 * x.t

    def mu(x):
        return np.full(len(x), -1.0)

    def kernel(s, r):
        return s.t * (1 + 2 * s.t) * np.exp(r.t * (s.t - r.t))

    return BenchmarkCase(
        name='brunner',
        problem=Problem(UNIT, 1.0, g, mu, kernel),
        exact=lambda t: np.exp(np.asarray(t) ** 2),
        se_recipe=ParamsRecipe(1.0, math.pi),
        de_recipe=ParamsRecipe(1.0, math.pi / 2),
        description='entire data, exact solution exp(t^2)')


def _zarebnia_d_sup() -> float:
    log2 = math.log(2)
    Z = math.sqrt((1 + math.sqrt(1 + (2 * math.pi / log2) ** 2)) / 2)
    X = log2 / math.pi * (1 + Z)
    Y = 1 + 1 / Z
    return math.atan(Y / X)


def _zarebnia_log() -> BenchmarkCase:
    def g(x):
        log1t = np.log1p(x.t)
        return 1 / (1 + x.t) - (2 + x.t * log1t) * log1t / 2

    def mu(x):
        return np.ones(len(x))

    def kernel(s, r):
        return s.t / (r.t + 1)

    return BenchmarkCase(
        name='zarebnia-log',
        problem=Problem(UNIT, 0.0, g, mu, kernel),
        exact=lambda t: np.log1p(t),
        se_recipe=ParamsRecipe(1.0, math.pi),
        de_recipe=ParamsRecipe(1.0, _zarebnia_d_sup()),
        description='pole at t=-1, exact solution log(1+t)')


def _sqrt() -> BenchmarkCase:
    def g(x):
        return 1 / (2 * np.sqrt(x.dist_a))

    def mu(x):
        return -x.t

    def kernel(s, r):
        return np.sqrt(s.dist_a) / np.sqrt(r.dist_a)

    return BenchmarkCase(
        name='sqrt',
        problem=Problem(UNIT, 0.0, g, mu, kernel),
        exact=lambda t: np.sqrt(t),
        se_recipe=ParamsRecipe(0.5, math.pi),
        de_recipe=ParamsRecipe(0.5, math.pi / 2),
        description='weak singularity at t=0, exact solution sqrt(t)')


def _oscillatory_parts(x: Nodes):
    # atanh(t) = log((1 + t)/(1 - t))/2 on [-1, 1]
    w = 2 * (np.log(x.dist_a) - np.log(x.dist_b))
    p = np.sin(w)
    q = np.cos(w) + math.cosh(math.pi)
    return p, q


def _oscillatory() -> BenchmarkCase:
    def g(x):
        p, q = _oscillatory_parts(x)
        one_minus_t2 = x.dist_a * x.dist_b
        return (-x.t * np.sqrt(q / one_minus_t2)
                - 2 * p / np.sqrt(one_minus_t2 * q))

    def mu(x):
        return np.sqrt((3 + x.t ** 2) * x.dist_a * x.dist_b)

    def kernel(s, r):
        p, q = _oscillatory_parts(r)
        return (2 * np.sqrt((3 + s.t ** 2) / (r.dist_a * r.dist_b))
                * (r.t + p / q))

    def exact(t):
        x = Nodes.from_points(SYMMETRIC, t)
        inside = (x.dist_a > 0) & (x.dist_b > 0)
        value = np.zeros(len(x))
        p, q = _oscillatory_parts(x[inside])
        value[inside] = np.sqrt(x.dist_a[inside] * x.dist_b[inside] * q)
        if np.ndim(t) == 0:
            return float(value[0])
        return value

    def de_d(epsilon):
        sine = (math.pi / 2 - epsilon) / math.pi
        if not -1 <= sine <= 1:
            raise InvalidParameter(
                'epsilon', epsilon, 'leaves no admissible strip')
        return math.asin(sine)

    return BenchmarkCase(
        name='oscillatory',
        problem=Problem(SYMMETRIC, 0.0, g, mu, kernel),
        exact=exact,
        se_recipe=ParamsRecipe(0.5, math.pi / 2),
        de_recipe=ParamsRecipe(0.5, math.asin(0.5), de_d),
        de_rate_expected=SE_LIKE_RATE,
        description='singularities accumulating at both endpoints')


_REGISTRY: Optional[List[BenchmarkCase]] = None


def registry() -> List[BenchmarkCase]:
    """The four benchmark problems, in a fixed order."""
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = [_brunner(), _zarebnia_log(), _sqrt(), _oscillatory()]
    return list(_REGISTRY)


@dataclass(frozen=True, eq=False)
class ManufacturedCase:
    """A polynomial problem whose solution is known in closed form.

    Coefficient arrays are in increasing degree; ``kernel_coef[p, q]`` is
    the coefficient of t^p r^q.
    """

    problem: Problem
    exact: Callable[[np.ndarray], np.ndarray]
    solution: Polynomial
    mu_poly: Polynomial
    kernel_coef: np.ndarray
    g_poly: Polynomial


def manufactured_problem(interval: Interval, solution_coef, mu_coef,
                         kernel_coef) -> ManufacturedCase:
    """Derive g = u*' - mu u* - int_a^t k(t, r) u*(r) dr for polynomials.

    >>> case = manufactured_problem(UNIT, [0, 0, 1], [1], [[0], [1]])
    >>> case.g_poly.coef.tolist()
    [0.0, 2.0, -1.0, 0.0, -0.3333333333333333]
    """
    u = Polynomial(solution_coef)
    mu = Polynomial(mu_coef)
    kcoef = np.atleast_2d(np.asarray(kernel_coef, dtype=float))
    memory = Polynomial([0.0])
    for p in range(kcoef.shape[0]):
        for q in range(kcoef.shape[1]):
            if kcoef[p, q] == 0:
                continue
            # t^p int_a^t r^q u(r) dr
            inner = (Polynomial.basis(q) * u).integ(lbnd=interval.a)
            memory = memory + kcoef[p, q] * Polynomial.basis(p) * inner
    g_poly = (u.deriv() - mu * u - memory).trim()

    def kernel(s, r):
        return P.polyval2d(*np.broadcast_arrays(s.t, r.t), kcoef)

    problem = Problem(
        interval, float(u(interval.a)),
        lambda x: g_poly(x.t),
        lambda x: mu(x.t),
        kernel)
    return ManufacturedCase(
        problem=problem, exact=lambda t: u(np.asarray(t, dtype=float)),
        solution=u, mu_poly=mu, kernel_coef=kcoef, g_poly=g_poly)


def manufactured(seed: int) -> ManufacturedCase:
    """A manufactured problem on [0, 1] drawn from a seeded family.

    Seed 0 is the zero-data problem u* = 1, mu = 0, k = 0.
    """
    if seed == 0:
        return manufactured_problem(UNIT, [1.0], [0.0], [[0.0]])
    rng = np.random.default_rng(seed)
    solution = rng.integers(-3, 4, size=rng.integers(1, 5)).astype(float)
    solution[0] = solution[0] or 1.0
    mu = rng.integers(-2, 3, size=2).astype(float)
    kernel = rng.integers(-2, 3, size=(2, 2)).astype(float)
    return manufactured_problem(UNIT, solution, mu, kernel)


def _manufactured_case(seed: int) -> BenchmarkCase:
    case = manufactured(seed)
    return BenchmarkCase(
        name=MANUFACTURED_PREFIX + str(seed),
        problem=case.problem,
        exact=case.exact,
        se_recipe=ParamsRecipe(1.0, math.pi),
        de_recipe=ParamsRecipe(1.0, math.pi / 2),
        description='manufactured polynomial problem (seed %d)' % seed)


def lookup(name: str) -> BenchmarkCase:
    """Find a registered case, or build ``manufactured-<seed>``.

    :raises UnknownCase: if the name is not recognised
    """
    for case in registry():
        if case.name == name:
            return case
    if name.startswith(MANUFACTURED_PREFIX):
        try:
            seed = int(name[len(MANUFACTURED_PREFIX):])
        except ValueError as e:
            raise UnknownCase(name) from e
        if seed < 0:
            raise UnknownCase(name)
        return _manufactured_case(seed)
    raise UnknownCase(name)


@dataclass(frozen=True, eq=False)
class IntegrandCase:
    """A test integrand on (0, 1) for standalone indefinite integration."""

    name: str
    f: Callable[[Nodes], np.ndarray]
    antiderivative: Callable[[np.ndarray], np.ndarray]
    se_recipe: ParamsRecipe
    de_recipe: ParamsRecipe
    interval: Interval = UNIT

    def params(self, method: MethodKind,
               epsilon: float = DEFAULT_EPSILON) -> RegularityParams:
        if method is MethodKind.SE:
            return self.se_recipe.params(method, epsilon)
        return self.de_recipe.params(method, epsilon)


INTEGRANDS = {
    'one': IntegrandCase(
        'indefinite-one',
        f=lambda x: np.ones(len(x)),
        antiderivative=lambda t: np.asarray(t, dtype=float),
        se_recipe=ParamsRecipe(1.0, math.pi),
        de_recipe=ParamsRecipe(1.0, math.pi / 2)),
    'inv-sqrt': IntegrandCase(
        'indefinite-inv-sqrt',
        f=lambda x: 1 / (2 * np.sqrt(x.dist_a)),
        antiderivative=lambda t: np.sqrt(t),
        se_recipe=ParamsRecipe(0.5, math.pi),
        de_recipe=ParamsRecipe(0.5, math.pi / 2)),
    }
