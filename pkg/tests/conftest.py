import pytest

import oracles
import relaylat._kernels as kernels


@pytest.fixture(scope="session", autouse=True)
def compiled_kernels():
    """Compile every numba kernel once so timed tests measure computation."""
    kernels.warmup()
    oracles.warmup()
