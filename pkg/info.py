#    info.py -- Package information for sincvide
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

sincvide_version = (0, 3, 0, 'final', 0)


def version_string():
    return ".".join([str(v) for v in sincvide_version[:3]])


def versions_dict():
    import numpy
    import scipy
    import yaml
    return {
        'numpy': numpy.__version__,
        'scipy': scipy.__version__,
        'pyyaml': yaml.__version__,
        'sincvide': version_string(),
    }
