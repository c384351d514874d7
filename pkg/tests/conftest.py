import hypothesis
import pytest

from dimredkc import Metric, PointSet

hypothesis.settings.register_profile(
    "default", deadline=None, suppress_health_check=[hypothesis.HealthCheck.too_slow]
)
hypothesis.settings.load_profile("default")


@pytest.fixture
def square():
    """Right-angle instance with a near-origin straggler; all hand-checkable."""
    return PointSet([[0.0, 0.0], [10.0, 0.0], [0.0, 10.0], [1.0, 1.0]])


@pytest.fixture
def ham4():
    """Two antipodal Hamming pairs: {0000, 0001} vs {1110, 1111}."""
    return PointSet(
        [[0, 0, 0, 0], [1, 1, 1, 1], [0, 0, 0, 1], [1, 1, 1, 0]], Metric.HAMMING
    )
