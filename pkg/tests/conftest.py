import pytest

import complementa as ca


@pytest.fixture(scope="session")
def catalog_reports():
    """The full catalog property suite, run once per session, with its runtime."""
    import time
    t0 = time.perf_counter()
    reports = ca.run_catalog_suite()
    return reports, time.perf_counter() - t0


@pytest.fixture(scope="session")
def hol8():
    return ca.holomorph8()


@pytest.fixture(scope="session")
def s3():
    return ca.symmetric3().group
