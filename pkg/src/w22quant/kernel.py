"""Select the PBW kernel: compiled extension if importable, else pure Python.

Set ``W22QUANT_PURE=1`` in the environment to force the fallback.
"""

import os

if os.environ.get("W22QUANT_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = "cython" if _impl.__name__.endswith("._kernel") else "python"

W_OFFSET = _impl.W_OFFSET
encode = _impl.encode
decode = _impl.decode
bracket = _impl.bracket
mul_words = _impl.mul_words
set_mutation = _impl.set_mutation
get_mutation = _impl.get_mutation
clear_cache = _impl.clear_cache
cache_size = _impl.cache_size
