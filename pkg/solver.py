#    solver.py -- SE/DE-Sinc-Nystrom method for Volterra
#                 integro-differential equations
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

r"""Sinc-Nystrom solver.

The problem

.. math::

    u'(t) = g(t) + \mu(t) u(t) + \int_a^t k(t, r) u(r)\,dr,\quad u(a) = u_a

is integrated once and both integrals are replaced by Sinc indefinite
integration. Collocating at the Sinc points gives

.. math::

    (I_n - W) u = g_n,\quad
    W = h I^{(-1)} M D + h^2 I^{(-1)} D (I^{(-1)} \circ K) D

where M and D are the diagonal matrices of mu(t_j) and psi'(jh).
"""

__all__ = [
    'Problem',
    'SincSolution',
    'SolverWorkspace',
    'assemble',
    'delta_minus1',
    'eval_solution',
    'indefinite_matrix',
    'max_error',
    'solve',
]

from dataclasses import dataclass
import logging
from typing import Callable

import numpy as np
import scipy.linalg

from .errors import EvaluationError, SingularMatrix, SolverFailed
from .indefinite import DEFAULT_EVAL_POINTS, equispaced_points, sample_nodes
from .linalg import DenseMatrix, DenseVector, hadamard, inf_norm, lu_factor
from .specfun import si
from .transform import Interval, Nodes, SincGrid, weight_matrix

logger = logging.getLogger(__name__)

NodeFunction = Callable[[Nodes], np.ndarray]
KernelFunction = Callable[[Nodes, Nodes], np.ndarray]


@dataclass(frozen=True, eq=False)
class Problem:
    """A linear Volterra integro-differential equation on [a, b].

    ``g`` and ``mu`` receive a :class:`Nodes` bundle and return one value
    per point. ``kernel`` receives the points s as a column bundle and r as
    a row bundle and returns the matrix k(s_i, r_j).
    """

    interval: Interval
    u_a: float
    g: NodeFunction
    mu: NodeFunction
    kernel: KernelFunction

    @classmethod
    def from_plain(cls, interval, u_a, g, mu, kernel):
        """Build a problem from callables on plain points."""
        return cls(
            interval, u_a,
            lambda x: g(x.t),
            lambda x: mu(x.t),
            lambda s, r: kernel(s.t, r.t))


def delta_minus1(i, j):
    """Entries 1/2 + Si(pi (i - j)) / pi of the matrix I^(-1)."""
    k = np.asarray(i) - np.asarray(j)
    value = 0.5 + si(np.pi * k) / np.pi
    return value


def indefinite_matrix(N: int) -> DenseMatrix:
    """The n x n Toeplitz matrix I^(-1) with n = 2N + 1."""
    n = 2 * N + 1
    diffs = np.arange(n)
    column = delta_minus1(diffs, 0)
    row = delta_minus1(0, diffs)
    return scipy.linalg.toeplitz(column, row)


@dataclass(frozen=True, eq=False)
class SolverWorkspace:

    grid: SincGrid
    I_minus1: DenseMatrix
    K: DenseMatrix
    M_diag: DenseVector
    D_diag: DenseVector
    W: DenseMatrix
    rhs: DenseVector
    g_nodes: DenseVector

    @property
    def system_matrix(self) -> DenseMatrix:
        return np.eye(self.grid.n) - self.W


def _kernel_matrix(problem: Problem, grid: SincGrid) -> DenseMatrix:
    active = grid.active
    nodes = grid.nodes()[active]
    column = Nodes(
        nodes.t[:, np.newaxis], nodes.dist_a[:, np.newaxis],
        nodes.dist_b[:, np.newaxis])
    row = Nodes(
        nodes.t[np.newaxis, :], nodes.dist_a[np.newaxis, :],
        nodes.dist_b[np.newaxis, :])
    K = np.zeros((grid.n, grid.n))
    K[np.ix_(active, active)] = np.broadcast_to(
        np.asarray(problem.kernel(column, row), dtype=float),
        (len(nodes), len(nodes)))
    bad = ~np.isfinite(K)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise EvaluationError(
            'kernel', (int(grid.indices[i]), int(grid.indices[j])))
    return K


def assemble(problem: Problem, grid: SincGrid) -> SolverWorkspace:
    """Assemble W and the right hand side of (I_n - W) u = rhs.

    At Sinc points w_j(t_i) = h psi'(jh) delta_ij, so no inverse
    transformation is evaluated here.

    :raises EvaluationError: if g, mu or k is not finite at an active node
    """
    h = grid.h
    D = np.asarray(grid.derivs)
    Im1 = indefinite_matrix(grid.N)
    g_nodes = sample_nodes('g', problem.g, grid)
    mu_nodes = sample_nodes('mu', problem.mu, grid)
    K = _kernel_matrix(problem, grid)
    IK = hadamard(Im1, K)
    W = (h * Im1 * (mu_nodes * D)[np.newaxis, :]
         + h * h * (Im1 * D[np.newaxis, :]) @ (IK * D[np.newaxis, :]))
    rhs = problem.u_a + h * Im1 @ (g_nodes * D)
    return SolverWorkspace(
        grid=grid, I_minus1=Im1, K=K, M_diag=mu_nodes, D_diag=D, W=W,
        rhs=rhs, g_nodes=g_nodes)


@dataclass(frozen=True, eq=False)
class SincSolution:
    """Node values of u_N plus what is needed to evaluate it anywhere.

    ``coeffs`` holds g(t_j) + mu(t_j) u_j + V_N[u](t_j), so that
    u_N(t) = u_a + sum_j coeffs[j] w_j(t) costs O(n) per point.
    """

    problem: Problem
    grid: SincGrid
    node_values: DenseVector
    aux: DenseVector
    g_nodes: DenseVector
    coeffs: DenseVector
    residual: float


def solve(problem: Problem, grid: SincGrid) -> SincSolution:
    """Solve the Sinc-Nystrom system on grid.

    :raises SolverFailed: if I_n - W is singular to working precision
    """
    ws = assemble(problem, grid)
    A = ws.system_matrix
    try:
        factors = lu_factor(A)
    except SingularMatrix as e:
        raise SolverFailed(grid.N, str(e)) from e
    u = factors.solve(ws.rhs)
    if not np.all(np.isfinite(u)):
        raise SolverFailed(grid.N, 'non-finite solution')
    residual = inf_norm(A @ u - ws.rhs)
    aux = grid.h * (ws.I_minus1 * ws.K * ws.D_diag[np.newaxis, :]) @ u
    coeffs = ws.g_nodes + ws.M_diag * u + aux
    logger.debug(
        'Solved %s system with N=%d (n=%d): residual %.3g',
        grid.method, grid.N, grid.n, residual)
    return SincSolution(
        problem=problem, grid=grid, node_values=u, aux=aux,
        g_nodes=ws.g_nodes, coeffs=coeffs, residual=residual)


def eval_solution(sol: SincSolution, t):
    """Evaluate u_N at points of [a, b] (plain points or a Nodes bundle)."""
    values = sol.problem.u_a + weight_matrix(sol.grid, t) @ sol.coeffs
    if np.ndim(t) == 0 and not isinstance(t, Nodes):
        return float(values[0])
    return values


def max_error(
        sol: SincSolution, exact: Callable,
        m: int = DEFAULT_EVAL_POINTS) -> float:
    """Maximum error on the m points a + i (b - a)/(m + 1), i = 1..m."""
    t = equispaced_points(sol.grid.interval, m)
    return float(np.max(np.abs(eval_solution(sol, t) - exact(t))))
