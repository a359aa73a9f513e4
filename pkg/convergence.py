#    convergence.py -- Convergence sweeps, rate fits and their reports
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

"""Sweeps over N, exponential rate fits and CSV/JSON reports.

SE errors are fitted as log E = intercept - c sqrt(N), DE errors as
log E = intercept - c N / log(2dN/alpha).
"""

__all__ = [
    'CSV_HEADER',
    'ConvergenceReport',
    'ERROR_FLOOR',
    'RateFit',
    'SweepRow',
    'fit_rate',
    'indefinite_sweep',
    'read_report_csv',
    'solver_sweep',
    'summarize',
    'write_report_csv',
]

from concurrent.futures import ThreadPoolExecutor
import csv
from dataclasses import dataclass, field
import logging
import math
import time
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import linregress

from .errors import (
    EvaluationError,
    InvalidParameter,
    SolverFailed,
    )
from .indefinite import (
    DEFAULT_EVAL_POINTS,
    build_indefinite,
    indefinite_max_error,
    )
from .solver import max_error, solve
from .transform import MethodKind, RegularityParams, SincGrid, build_grid

logger = logging.getLogger(__name__)

CSV_HEADER = [
    'case', 'method', 'alpha', 'd_used', 'N', 'h', 'max_error', 'residual',
    'solve_ms']

# Errors below this are dominated by rounding and excluded from fits.
ERROR_FLOOR = 1e-13

NA = 'NA'
INSUFFICIENT_DATA = 'insufficient-data'


def _format(value) -> str:
    if value is None:
        return NA
    return '%.17g' % value


def _parse(text: str) -> Optional[float]:
    if text == NA:
        return None
    return float(text)


@dataclass
class SweepRow:

    case: str
    method: MethodKind
    alpha: float
    d_used: float
    N: int
    h: Optional[float] = None
    max_error: Optional[float] = None
    residual: Optional[float] = None
    solve_ms: Optional[float] = None

    @property
    def n(self) -> int:
        return 2 * self.N + 1

    @property
    def failed(self) -> bool:
        return self.max_error is None

    def as_csv(self) -> List[str]:
        return [
            self.case, str(self.method), _format(self.alpha),
            _format(self.d_used), str(self.N), _format(self.h),
            _format(self.max_error), _format(self.residual),
            _format(self.solve_ms)]

    @classmethod
    def from_csv(cls, fields: Sequence[str]) -> 'SweepRow':
        (case, method, alpha, d_used, N, h, error, residual,
         solve_ms) = fields
        return cls(
            case=case, method=MethodKind.from_string(method),
            alpha=float(alpha), d_used=float(d_used), N=int(N),
            h=_parse(h), max_error=_parse(error), residual=_parse(residual),
            solve_ms=_parse(solve_ms))


@dataclass
class RateFit:
    """Least squares fit of log(error) against an abscissa."""

    abscissa: str
    theory: float
    c: Optional[float] = None
    intercept: Optional[float] = None
    r_squared: Optional[float] = None
    points: int = 0

    @property
    def sufficient(self) -> bool:
        return self.c is not None

    @property
    def ratio(self) -> Optional[float]:
        if self.c is None:
            return None
        return self.c / self.theory

    def as_dict(self) -> dict:
        ret = {'abscissa': self.abscissa, 'theory': self.theory}
        if not self.sufficient:
            ret['status'] = INSUFFICIENT_DATA
            return ret
        ret.update({
            'status': 'ok',
            'c': self.c,
            'intercept': self.intercept,
            'r_squared': self.r_squared,
            'points': self.points,
            'ratio': self.ratio,
            })
        return ret


def sqrt_abscissa(params: RegularityParams, N: int) -> float:
    return math.sqrt(N)


def de_abscissa(params: RegularityParams, N: int) -> float:
    return N / math.log(2 * params.d * N / params.alpha)


def fit_rate(rows: Sequence[SweepRow], params: RegularityParams,
             abscissa: Optional[str] = None) -> RateFit:
    """Fit the decay constant over rows above ERROR_FLOOR.

    ``abscissa`` is 'sqrt(N)' or 'N/log(2dN/alpha)'; by default the
    method's own abscissa is used.
    """
    if abscissa is None:
        abscissa = (
            'sqrt(N)' if params.method is MethodKind.SE
            else 'N/log(2dN/alpha)')
    if abscissa == 'sqrt(N)':
        x_of = sqrt_abscissa
        theory = math.sqrt(math.pi * params.d * params.alpha)
    else:
        x_of = de_abscissa
        theory = math.pi * params.d
    usable = [
        row for row in rows
        if not row.failed and row.max_error >= ERROR_FLOOR]
    fit = RateFit(abscissa=abscissa, theory=theory, points=len(usable))
    xs = np.array([x_of(params, row.N) for row in usable])
    if len(usable) < 2 or np.ptp(xs) == 0:
        return fit
    ys = np.log([row.max_error for row in usable])
    result = linregress(xs, ys)
    fit.c = float(-result.slope)
    fit.intercept = float(result.intercept)
    fit.r_squared = float(min(1.0, result.rvalue ** 2))
    return fit


@dataclass
class ConvergenceReport:

    case: str
    params: RegularityParams
    rows: List[SweepRow] = field(default_factory=list)

    @property
    def method(self) -> MethodKind:
        return self.params.method

    @property
    def epsilon(self) -> float:
        return self.params.epsilon

    @property
    def d_used(self) -> float:
        return self.params.d

    @property
    def alpha(self) -> float:
        return self.params.alpha

    @property
    def fit(self) -> RateFit:
        return fit_rate(self.rows, self.params)

    @property
    def sqrt_fit(self) -> RateFit:
        return fit_rate(self.rows, self.params, 'sqrt(N)')


def _sweep(case: str, params: RegularityParams, n_list: Sequence[int],
           interval, run: Callable[[SincGrid], Tuple[float, float]],
           jobs: int = 1) -> ConvergenceReport:
    def one(N):
        row = SweepRow(case, params.method, params.alpha, params.d, N)
        try:
            grid = build_grid(interval, params, N)
        except InvalidParameter as e:
            logger.warning('Skipping %s N=%d: %s', params.method, N, e)
            return row
        row.h = grid.h
        start = time.perf_counter()
        try:
            row.max_error, row.residual = run(grid)
        except (SolverFailed, EvaluationError) as e:
            logger.warning('Skipping %s N=%d: %s', params.method, N, e)
        row.solve_ms = (time.perf_counter() - start) * 1000
        logger.debug(
            '%s %s N=%d: max error %s', case, params.method, N,
            _format(row.max_error))
        return row

    report = ConvergenceReport(case, params)
    n_list = sorted(n_list)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            report.rows.extend(executor.map(one, n_list))
    else:
        report.rows.extend(one(N) for N in n_list)
    return report


def solver_sweep(case, method: MethodKind, n_list: Sequence[int],
                 epsilon: float, eval_points: int = DEFAULT_EVAL_POINTS,
                 jobs: int = 1) -> ConvergenceReport:
    """Solve a benchmark case for every N in n_list."""
    params = case.params(method, epsilon)

    def run(grid):
        sol = solve(case.problem, grid)
        return max_error(sol, case.exact, eval_points), sol.residual

    return _sweep(
        case.name, params, n_list, case.problem.interval, run, jobs)


def indefinite_sweep(integrand, method: MethodKind, n_list: Sequence[int],
                     epsilon: float, eval_points: int = DEFAULT_EVAL_POINTS,
                     jobs: int = 1) -> ConvergenceReport:
    """Sinc indefinite integration of a test integrand for every N."""
    params = integrand.params(method, epsilon)

    def run(grid):
        approx = build_indefinite(integrand.f, grid)
        return (indefinite_max_error(
            approx, integrand.antiderivative, eval_points), 0.0)

    return _sweep(
        integrand.name, params, n_list, integrand.interval, run, jobs)


def summarize(case: str, epsilon: float,
              reports: Sequence[ConvergenceReport]) -> dict:
    fits = {}
    for report in reports:
        fits[str(report.method)] = {
            'alpha': report.alpha,
            'd_used': report.d_used,
            'primary': report.fit.as_dict(),
            'sqrt_n': report.sqrt_fit.as_dict(),
            'failed_n': [row.N for row in report.rows if row.failed],
            }
    return {'case': case, 'epsilon': epsilon, 'fits': fits}


def write_report_csv(f, reports: Sequence[ConvergenceReport]) -> None:
    """Write the rows of reports to an open text file."""
    writer = csv.writer(f, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for report in reports:
        for row in report.rows:
            writer.writerow(row.as_csv())


def read_report_csv(f) -> List[SweepRow]:
    reader = csv.reader(f)
    header = next(reader)
    if header != CSV_HEADER:
        raise ValueError('unexpected CSV header %r' % (header, ))
    return [SweepRow.from_csv(fields) for fields in reader]
