"""Numerical laboratory for lifespan estimates of semilinear damped wave equations.

Subpackages:

- ``exponents``  critical-exponent algebra and damping-regime classification
- ``testfuncs``  exponential eigenfunction machinery and data functionals
- ``odeblowup``  ordinary-differential blow-up oracles and the constant ledger
- ``pdesim``     radial finite-difference solver and diagnostic functionals
- ``lifespan``   epsilon-sweep harness with power-law fitting
- ``cli``        command-line front end
"""

__version__ = "0.1.0"

from . import exponents  # noqa: F401
