"""P-representation of [0,1]: the singular distribution function of random
s-adic digits, restricted Moran-type sets, exact cylinder covers and
Hausdorff-dimension solvers.

Exact values cross the boundary as "num/den" strings; feed them to
fractions.Fraction for arithmetic.
"""

try:
    from ._moranrep import *  # noqa: F401,F403  (installed package layout)
    from ._moranrep import __version__  # noqa: F401
except ImportError:  # in-tree build: extension on sys.path next to the package
    from _moranrep import *  # noqa: F401,F403
    from _moranrep import __version__  # noqa: F401
