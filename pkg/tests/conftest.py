import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kronconn import _kernels_py


def _kernel_backends():
    backends = [("python", _kernels_py)]
    try:
        from kronconn import _kernels_numba

        backends.append(("numba", _kernels_numba))
    except ImportError:
        pass
    return backends


@pytest.fixture(params=_kernel_backends(), ids=lambda b: b[0])
def kernel(request):
    return request.param[1]
