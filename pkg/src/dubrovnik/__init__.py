"""Exact Kauffman (Dubrovnik) skein calculus and the BMW algebra.

Subpackages:

* :mod:`dubrovnik.coeffring` -- exact rational functions in a, s over Z
* :mod:`dubrovnik.young` -- Young diagrams, contents, up-down tableaux
* :mod:`dubrovnik.tangle` -- framed tangle words (slices), composition, closure
* :mod:`dubrovnik.skeinreduce` -- the rewriting engine and Kauffman polynomial
* :mod:`dubrovnik.hecke` -- Hecke algebra of type A, Young idempotents
* :mod:`dubrovnik.bmw` -- the Birman-Murakami-Wenzl algebra and its bases
* :mod:`dubrovnik.handlebody` -- handlebody skein generators, connected-sum reduction
* :mod:`dubrovnik.cli` -- the ``dubrovnik`` command line tool
"""

from .coeffring import ONE, ZERO, LaurentPoly, RatFunc, alpha, delta, svar

__all__ = ["LaurentPoly", "RatFunc", "ZERO", "ONE", "alpha", "svar", "delta"]
