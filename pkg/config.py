#    config.py -- Configuration of sincvide sweeps from files
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
    'DEFAULT_N_LIST',
    'SweepConfig',
    'parse_n_list',
]

import logging

import yaml

from .errors import ConfigSyntaxError, InvalidParameter
from .indefinite import DEFAULT_EVAL_POINTS
from .transform import DEFAULT_EPSILON

logger = logging.getLogger(__name__)

DEFAULT_N_LIST = (2, 4, 8, 16, 32, 64, 128)


def parse_n_list(value):
    """Parse a list of truncation orders.

    >>> parse_n_list('2,4, 8')
    [2, 4, 8]
    >>> parse_n_list([16, 32])
    [16, 32]
    """
    if isinstance(value, str):
        items = [item for item in value.split(',') if item.strip()]
    elif isinstance(value, int):
        items = [value]
    else:
        items = list(value)
    try:
        ret = [int(item) for item in items]
    except (TypeError, ValueError) as e:
        raise InvalidParameter(
            'n-list', value, 'expected comma separated integers') from e
    if not ret or any(N < 1 for N in ret):
        raise InvalidParameter(
            'n-list', value, 'entries must be positive integers')
    return ret


def _positive_int(name):
    def convert(value):
        try:
            ret = int(value)
        except (TypeError, ValueError) as e:
            raise InvalidParameter(name, value, 'expected an integer') from e
        if ret < 1:
            raise InvalidParameter(name, value, 'must be positive')
        return ret
    return convert


def _epsilon(value):
    try:
        ret = float(value)
    except (TypeError, ValueError) as e:
        raise InvalidParameter('epsilon', value, 'expected a number') from e
    if not ret > 0:
        raise InvalidParameter('epsilon', value, 'must be positive')
    return ret


class _Source:

    def __init__(self, values, filename=None):
        self.values = values
        self.filename = filename

    @classmethod
    def from_file(cls, path):
        try:
            with open(path) as f:
                values = yaml.safe_load(f)
        except FileNotFoundError:
            return None
        except yaml.YAMLError as e:
            raise ConfigSyntaxError(path, e) from e
        if values is None:
            values = {}
        if not isinstance(values, dict):
            raise ConfigSyntaxError(path, TypeError(values))
        return cls(values, path)


class SweepConfig:
    """Holds the settings for convergence sweeps.

    These are taken from a list of sources, each either a mapping or the
    path of a YAML file (which doesn't have to exist). The value for a key
    is taken from the first source that defines it in its ``sincvide``
    section.

    >>> c = SweepConfig([
    ...     {'sincvide': {'epsilon': 0.1}},
    ...     {'sincvide': {'epsilon': 0.2, 'n-list': '4,8'}}])
    >>> c.epsilon
    0.1
    >>> c.n_list
    [4, 8]
    >>> c.eval_points
    999
    >>> c.jobs
    1
    """

    section = 'sincvide'

    def __init__(self, sources=()):
        self._sources = []
        for i, source in enumerate(sources):
            if isinstance(source, dict):
                self._sources.append(_Source(source, '<mapping %d>' % i))
                continue
            loaded = _Source.from_file(source)
            if loaded is None:
                logger.debug('Configuration file %s does not exist', source)
                continue
            self._sources.append(loaded)

    def _get_opt(self, source, key):
        section = source.values.get(self.section)
        if isinstance(section, dict) and key in section:
            return section[key]
        if key in source.values:
            logger.warning(
                "'%s' defines a value for '%s', but it is not in a '%s' "
                "section, so it is ignored",
                source.filename, key, self.section)
        return None

    def _get_best_opt(self, key):
        """Returns the value for key from the first source defining it."""
        for source in self._sources:
            value = self._get_opt(source, key)
            if value is not None:
                logger.debug(
                    "Using %s for %s, taken from %s", value, key,
                    source.filename)
                return value
        return None

    def _opt_property(name, convert, default, help=None):
        def get(self):
            value = self._get_best_opt(name)
            if value is None:
                return default
            return convert(value)
        return property(get, None, None, help)

    epsilon = _opt_property(
        'epsilon', _epsilon, DEFAULT_EPSILON,
        "Margin subtracted from the strip half-width supremum")

    n_list = _opt_property(
        'n-list', parse_n_list, list(DEFAULT_N_LIST),
        "Truncation orders N to sweep over")

    eval_points = _opt_property(
        'eval-points', _positive_int('eval-points'), DEFAULT_EVAL_POINTS,
        "Number of equispaced points used for error measurement")

    jobs = _opt_property(
        'jobs', _positive_int('jobs'), 1,
        "Number of sweep entries computed concurrently")
