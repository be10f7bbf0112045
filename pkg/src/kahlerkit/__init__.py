"""kahlerkit: mechanically checked Clifford algebra, exterior calculus,
coordinate covariance, and Schwarzschild chart computations.

``kahlerkit.kernel_backend()`` reports whether the compiled blade kernel
or the pure-Python fallback is active.
"""

__version__ = "0.1.0"


def kernel_backend() -> str:
    from kahlerkit._kernel import BACKEND

    return BACKEND
