# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

from .util import *
