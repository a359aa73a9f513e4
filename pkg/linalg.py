#    linalg.py -- Dense matrix helpers for the Nystrom system
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

__all__ = [
    'DenseMatrix',
    'DenseVector',
    'LUFactors',
    'hadamard',
    'inf_norm',
    'lu_decompose',
    'lu_factor',
    'lu_solve',
]

from dataclasses import dataclass
from typing import Tuple
import warnings

import numpy as np
import numpy.typing as npt
import scipy.linalg

from .errors import ShapeMismatch, SingularMatrix

DenseMatrix = npt.NDArray[np.float64]
DenseVector = npt.NDArray[np.float64]

# Pivots smaller than this fraction of ||A||_inf are treated as zero.
SINGULAR_THRESHOLD = 1e-300


def inf_norm(x) -> float:
    """Infinity norm of a vector, or maximum row sum of a matrix."""
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        return 0.0
    if x.ndim == 1:
        return float(np.max(np.abs(x)))
    return float(np.max(np.sum(np.abs(x), axis=1)))


def hadamard(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.shape != B.shape:
        raise ShapeMismatch('hadamard', A.shape, B.shape)
    return A * B


@dataclass(frozen=True, eq=False)
class LUFactors:
    """Packed LU factors with partial pivoting, as from LAPACK getrf."""

    lu: DenseMatrix
    piv: np.ndarray
    norm: float

    def solve(self, b: DenseVector) -> DenseVector:
        b = np.asarray(b, dtype=float)
        if b.shape[0] != self.lu.shape[0]:
            raise ShapeMismatch('lu_solve', self.lu.shape, b.shape)
        return scipy.linalg.lu_solve((self.lu, self.piv), b)


def _check_square(operation, A):
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeMismatch(operation, A.shape, 'square')


def lu_factor(A: DenseMatrix) -> LUFactors:
    """Factorize A with partial pivoting.

    :raises SingularMatrix: if a pivot is negligible relative to ||A||_inf
    """
    A = np.asarray(A, dtype=float)
    _check_square('lu_factor', A)
    norm = inf_norm(A)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(A, check_finite=True)
    pivots = np.abs(np.diag(lu))
    smallest = float(pivots.min()) if pivots.size else 0.0
    if not smallest >= SINGULAR_THRESHOLD * norm or smallest == 0.0:
        raise SingularMatrix(smallest)
    return LUFactors(lu, piv, norm)


def lu_solve(A: DenseMatrix, b: DenseVector) -> DenseVector:
    A = np.asarray(A, dtype=float)
    _check_square('lu_solve', A)
    b = np.asarray(b, dtype=float)
    if b.shape[0] != A.shape[0]:
        raise ShapeMismatch('lu_solve', A.shape, b.shape)
    return lu_factor(A).solve(b)


def lu_decompose(
        A: DenseMatrix) -> Tuple[DenseMatrix, DenseMatrix, DenseMatrix]:
    """Return P, L, U with P A = L U."""
    A = np.asarray(A, dtype=float)
    _check_square('lu_decompose', A)
    p, L, U = scipy.linalg.lu(A)
    # scipy returns A = p L U
    return p.T, L, U
