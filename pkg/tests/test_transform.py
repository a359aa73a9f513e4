#    test_transform.py -- Tests for the variable transformations
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

import math

import numpy as np

from ..errors import DomainError, InvalidParameter
from ..solver import indefinite_matrix
from ..transform import (
    Interval,
    MethodKind,
    Nodes,
    RegularityParams,
    build_grid,
    mesh_size,
    psi,
    psi_deriv,
    psi_inverse,
    weight,
    weight_matrix,
    )
from . import SincTestCase, bisect

UNIT = Interval(0.0, 1.0)
SE = RegularityParams(1.0, math.pi - 0.05, MethodKind.SE, 0.05)
DE = RegularityParams(1.0, math.pi / 2 - 0.05, MethodKind.DE, 0.05)


class MethodKindTests(SincTestCase):

    def test_from_string(self):
        self.assertIs(MethodKind.SE, MethodKind.from_string('se'))
        self.assertIs(MethodKind.DE, MethodKind.from_string('DE'))
        self.assertRaises(InvalidParameter, MethodKind.from_string, 'te')

    def test_str(self):
        self.assertEqual('DE', str(MethodKind.DE))


class ParameterTests(SincTestCase):

    def test_interval(self):
        self.assertEqual(2.0, Interval(-1.0, 1.0).length)
        self.assertRaises(InvalidParameter, Interval, 1.0, 1.0)
        self.assertRaises(InvalidParameter, Interval, 0.0, math.inf)

    def test_alpha_range(self):
        self.assertRaises(
            InvalidParameter, RegularityParams, 0.0, 1.0, MethodKind.SE)
        self.assertRaises(
            InvalidParameter, RegularityParams, 1.5, 1.0, MethodKind.SE)

    def test_d_range(self):
        RegularityParams(1.0, 3.0, MethodKind.SE)
        self.assertRaises(
            InvalidParameter, RegularityParams, 1.0, 3.0, MethodKind.DE)
        self.assertRaises(
            InvalidParameter, RegularityParams, 1.0, math.pi, MethodKind.SE)
        self.assertRaises(
            InvalidParameter, RegularityParams, 1.0, 0.0, MethodKind.DE)

    def test_from_margin(self):
        params = RegularityParams.from_margin(
            0.5, math.pi / 2, MethodKind.DE, 0.1)
        self.assertAlmostEqual(math.pi / 2 - 0.1, params.d)
        self.assertEqual(0.1, params.epsilon)
        self.assertRaises(
            InvalidParameter, RegularityParams.from_margin,
            0.5, math.pi / 2, MethodKind.DE, 0.0)


class MeshSizeTests(SincTestCase):

    def test_se(self):
        params = RegularityParams(0.5, math.pi - 0.05, MethodKind.SE)
        self.assertAlmostEqual(
            math.sqrt(math.pi * (math.pi - 0.05) / (0.5 * 16)),
            mesh_size(params, 16), places=15)

    def test_de(self):
        self.assertAlmostEqual(
            math.log(2 * DE.d * 32) / 32, mesh_size(DE, 32), places=15)

    def test_decreasing(self):
        for params in (SE, DE):
            hs = [mesh_size(params, N) for N in (2, 4, 8, 16, 32, 64, 128)]
            self.assertTrue(all(a > b > 0 for a, b in zip(hs, hs[1:])))

    def test_invalid_n(self):
        self.assertRaises(InvalidParameter, mesh_size, SE, 0)

    def test_de_too_small(self):
        params = RegularityParams(1.0, 0.1, MethodKind.DE)
        self.assertRaises(InvalidParameter, mesh_size, params, 1)


class TransformationTests(SincTestCase):

    def test_midpoint(self):
        interval = Interval(-1.0, 3.0)
        for method in MethodKind:
            self.assertEqual(1.0, psi(method, interval, 0.0))

    def test_limits(self):
        for method in MethodKind:
            self.assertEqual(0.0, psi(method, UNIT, -40.0))
            self.assertEqual(1.0, psi(method, UNIT, 40.0))

    def test_deriv_against_differences(self):
        x = np.linspace(-3, 3, 61)
        step = 1e-6
        for method in MethodKind:
            differences = (
                psi(method, UNIT, x + step)
                - psi(method, UNIT, x - step)) / (2 * step)
            self.assertAllClose(
                psi_deriv(method, UNIT, x), differences, rtol=1e-6,
                atol=1e-9)

    def test_deriv_far_out(self):
        x = np.array([-1000.0, -10.0, 10.0, 1000.0])
        for method in MethodKind:
            values = psi_deriv(method, UNIT, x)
            self.assertTrue(np.all(np.isfinite(values)))
            self.assertTrue(np.all(values >= 0))

    def test_inverse_against_bisection(self):
        interval = Interval(-2.0, 5.0)
        for method in MethodKind:
            for t in [-1.999, -1.0, 0.3, 1.5, 4.2, 4.999]:
                expected = bisect(
                    lambda x: psi(method, interval, x), t, -10.0, 10.0)
                self.assertAlmostEqual(
                    expected, psi_inverse(method, interval, t), delta=1e-9)

    def test_inverse_round_trip(self):
        x = np.linspace(-2, 2, 41)
        for method in MethodKind:
            self.assertAllClose(
                psi_inverse(method, UNIT, psi(method, UNIT, x)), x,
                rtol=0, atol=1e-9)

    def test_inverse_outside(self):
        for method in MethodKind:
            self.assertRaises(DomainError, psi_inverse, method, UNIT, 0.0)
            self.assertRaises(DomainError, psi_inverse, method, UNIT, 1.0)
            self.assertRaises(
                DomainError, psi_inverse, method, UNIT,
                np.array([0.5, 1.5]))

    def test_scalar(self):
        self.assertIsInstance(psi(MethodKind.SE, UNIT, 0.3), float)
        self.assertIsInstance(psi_inverse(MethodKind.DE, UNIT, 0.3), float)


class GridTests(SincTestCase):

    def test_shape(self):
        grid = build_grid(UNIT, SE, 16)
        self.assertEqual(33, grid.n)
        self.assertEqual((33, ), grid.points.shape)
        self.assertEqual(-16, grid.indices[0])
        self.assertEqual(0.5, grid.points[16])

    def test_strictly_increasing(self):
        for grid in (build_grid(UNIT, SE, 16), build_grid(UNIT, DE, 6)):
            self.assertTrue(np.all(np.diff(grid.points) > 0))
            self.assertTrue(np.all(grid.points > 0))
            self.assertTrue(np.all(grid.points < 1))

    def test_matches_psi(self):
        for params in (SE, DE):
            grid = build_grid(UNIT, params, 16)
            x = grid.indices * grid.h
            self.assertAllClose(
                grid.points, psi(params.method, UNIT, x), rtol=1e-14,
                atol=1e-15)
            self.assertAllClose(
                grid.derivs, psi_deriv(params.method, UNIT, x), rtol=1e-12)

    def test_distances(self):
        interval = Interval(-1.0, 1.0)
        grid = build_grid(interval, DE, 32)
        self.assertAllClose(grid.dist_a + grid.dist_b, 2.0, rtol=1e-15)
        self.assertTrue(np.all(grid.dist_a > 0))
        # distances resolve points that round to the endpoint
        self.assertLess(grid.dist_a[0], 1e-40)

    def test_read_only(self):
        grid = build_grid(UNIT, SE, 4)
        with self.assertRaises(ValueError):
            grid.points[0] = 0.0

    def test_saturated_de_grid(self):
        grid = build_grid(UNIT, DE, 512)
        self.assertFalse(grid.active.all())
        self.assertTrue(grid.active[grid.N])
        self.assertTrue(np.all(grid.derivs[~grid.active] == 0))
        self.assertTrue(np.all(np.isfinite(grid.points)))
        self.assertTrue(np.all(np.diff(grid.points) >= 0))

    def test_nodes(self):
        grid = build_grid(UNIT, SE, 4)
        nodes = grid.nodes()
        self.assertEqual(9, len(nodes))
        self.assertEqual(grid.points[2], nodes[2].t)
        plain = Nodes.from_points(UNIT, [0.25, 0.5])
        np.testing.assert_array_equal([0.25, 0.5], plain.dist_a)
        np.testing.assert_array_equal([0.75, 0.5], plain.dist_b)


class WeightTests(SincTestCase):

    def test_at_sinc_points(self):
        for params in (SE, DE):
            grid = build_grid(UNIT, params, 12)
            expected = grid.h * indefinite_matrix(12) * grid.derivs
            self.assertAllClose(
                weight_matrix(grid, grid.nodes()), expected, rtol=0,
                atol=1e-13)

    def test_endpoints(self):
        grid = build_grid(UNIT, SE, 8)
        W = weight_matrix(grid, [0.0, 1.0])
        self.assertEqual((2, 17), W.shape)
        np.testing.assert_array_equal(np.zeros(17), W[0])
        self.assertAllClose(W[1], grid.h * grid.derivs, rtol=1e-15)

    def test_outside(self):
        grid = build_grid(UNIT, SE, 8)
        self.assertRaises(DomainError, weight_matrix, grid, [0.5, 1.01])
        self.assertRaises(DomainError, weight_matrix, grid, -0.1)

    def test_single_weight(self):
        grid = build_grid(UNIT, DE, 8)
        t = 0.3
        W = weight_matrix(grid, t)
        for j in (-8, -1, 0, 5, 8):
            self.assertAlmostEqual(W[0, j + 8], weight(grid, j, t), places=14)

    def test_weight_bound(self):
        rng = np.random.default_rng(11)
        for params in (SE, DE):
            grid = build_grid(UNIT, params, 16)
            js = rng.integers(-16, 17, size=200)
            ts = rng.uniform(1e-6, 1 - 1e-6, size=200)
            for j, t in zip(js, ts):
                bound = 1.1 * grid.h * grid.derivs[j + 16]
                self.assertLessEqual(
                    abs(weight(grid, int(j), float(t))), bound * (1 + 1e-12),
                    (params.method, j, t))

    def test_single_weight_invalid(self):
        grid = build_grid(UNIT, DE, 8)
        self.assertRaises(InvalidParameter, weight, grid, 9, 0.5)
        self.assertRaises(DomainError, weight, grid, 0, 1.0)
