# This file is a part of RayleighMT,
# Copyright 2026 RayleighMT contributors
# For the exact contribution history, see the git revision log.
# The source code contained in this file is licensed under the GPLv3 or
# (at your option) any later version.
# See LICENSE.txt in the main project directory, for more information.

# Module description following the guidelines at:
# http://bayes.colorado.edu/PythonGuidelines.html#module_formatting
__version__ = '0.1dev'
__status__ = 'Beta'
__copyright__ = 'Copyright 2026, RayleighMT contributors'
__license__ = 'GPLv3'
__all__ = ['__version__']
