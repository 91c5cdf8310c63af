"""wordlab: open/closed factor complexity, Rauzy graphs and return words
of finite prefixes of classical infinite words.
"""

__version__ = "0.1.0"

from wordlab.kernels import BACKEND

__all__ = ["BACKEND", "__version__"]
