import pytest

import cliffidem._kernels._pure as pure_kernels

try:
    import cliffidem._kernels._fast as fast_kernels
except ImportError:
    fast_kernels = None

BACKENDS = [pytest.param(pure_kernels, id="pure")]
if fast_kernels is not None:
    BACKENDS.append(pytest.param(fast_kernels, id="fast"))


@pytest.fixture(params=BACKENDS)
def kernels(request):
    """Each kernel backend present in this build."""
    return request.param
