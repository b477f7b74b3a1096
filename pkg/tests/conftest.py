import pytest
from fastapi.testclient import TestClient

from app.main import app
from app.models.precision import PrecisionPolicy
from app.routes.sequences import get_oeis_service
from app.services.oeis_service import OEISService


@pytest.fixture
def policy():
    return PrecisionPolicy(target_digits=50)


@pytest.fixture
def offline_service(tmp_path):
    """OEIS client that never touches the network and caches under tmp_path"""
    return OEISService(cache_dir=tmp_path / "oeis", offline=True)


@pytest.fixture
def client(offline_service):
    app.dependency_overrides[get_oeis_service] = lambda: offline_service
    yield TestClient(app)
    app.dependency_overrides.clear()


def assert_close(a, b, policy, digits=30):
    assert abs(policy.high(a) - policy.high(b)) < policy.ctx.mpf(10) ** (-digits)


def assert_same_set(values, expected, policy, digits=30):
    values = sorted(policy.high(v) for v in values)
    expected = sorted(policy.high(v) for v in expected)
    assert len(values) == len(expected)
    for a, b in zip(values, expected):
        assert_close(a, b, policy, digits)
