import math

import httpx
import pytest

from app.models.documents import BFile
from app.services.oeis_service import OEISService, compare_terms, cross_check
from app.utils.errors import BFileFormatError, InvalidSequenceId, OfflineMiss
from app.utils.helpers import parse_bfile

REMOTE = "# remote copy\n1 2\n2 3\n3 5\n"


def mock_service(tmp_path, handler, **kwargs):
    return OEISService(
        cache_dir=tmp_path / "cache",
        offline=False,
        transport=httpx.MockTransport(handler),
        fixture_dir=tmp_path / "fixtures",
        **kwargs,
    )


def test_fixture_fallback_offline(offline_service):
    bfile = offline_service.fetch_bfile("A198636")
    assert bfile.rows[:3] == [(0, 3), (1, 5), (2, 13)]
    assert bfile.offset == 0
    assert offline_service.fetch_bfile("A005471").values[:4] == [7, 13, 19, 37]


def test_invalid_id(offline_service):
    with pytest.raises(InvalidSequenceId):
        offline_service.fetch_bfile("Axx")
    with pytest.raises(InvalidSequenceId):
        offline_service.fetch_bfile("A12345")


def test_download_is_cached(tmp_path):
    requests = []

    def handler(request):
        requests.append(request.url.path)
        return httpx.Response(200, text=REMOTE)

    service = mock_service(tmp_path, handler)
    assert service.fetch_bfile("A000040").values == [2, 3, 5]
    assert requests == ["/A000040/b000040.txt"]
    assert (tmp_path / "cache" / "b000040.txt").read_text() == REMOTE

    # the second lookup is served from the cache
    assert service.fetch_bfile("A000040").values == [2, 3, 5]
    assert len(requests) == 1
    assert not list((tmp_path / "cache").glob("*.tmp"))


def test_network_failure_uses_fixture(tmp_path):
    def handler(request):
        raise httpx.ConnectError("offline", request=request)

    fixtures = tmp_path / "fixtures"
    fixtures.mkdir()
    (fixtures / "b000040.txt").write_text(REMOTE)
    service = mock_service(tmp_path, handler)
    assert service.fetch_bfile("A000040").values == [2, 3, 5]
    assert not (tmp_path / "cache" / "b000040.txt").exists()


def test_missing_everywhere(tmp_path):
    service = mock_service(tmp_path, lambda request: httpx.Response(404))
    with pytest.raises(OfflineMiss):
        service.fetch_bfile("A000040")
    offline = OEISService(cache_dir=tmp_path / "cache", offline=True, fixture_dir=tmp_path / "fixtures")
    with pytest.raises(OfflineMiss):
        offline.fetch_bfile("A000040")


def test_malformed_download_is_not_cached(tmp_path):
    service = mock_service(tmp_path, lambda request: httpx.Response(200, text="1 2\n3 4\n"))
    with pytest.raises(BFileFormatError):
        service.fetch_bfile("A000040")
    assert not (tmp_path / "cache" / "b000040.txt").exists()


@pytest.mark.parametrize("text", ["", "# only a comment\n", "0 3\n2 5\n", "0 x\n", "0 1 2\n"])
def test_parse_bfile_rejects(text):
    with pytest.raises(BFileFormatError):
        parse_bfile(text)


def test_parse_bfile_skips_comments():
    assert parse_bfile("# header\n\n5 1\n6 -2\n") == [(5, 1), (6, -2)]


def test_compare_terms():
    bfile = BFile(sequence_id="A198636", rows=[(0, 3), (1, 5), (2, 13)])
    assert compare_terms(bfile, [3, 5, 13]) == (True, [])
    assert compare_terms(bfile, [3, 6]) == (False, [(1, 5, 6)])


def test_cross_check(offline_service):
    document = cross_check("A198636", service=offline_service)
    assert document.checks == {"compared": "60", "status": "pass"}
    document = cross_check("A005471", limit=10 ** 6, service=offline_service)
    assert document.checks["status"] == "pass"
    assert document.terms[-1] == str(offline_service.fetch_bfile("A005471").values[-1])


def test_bundled_fixtures_match_published_listings(offline_service):
    shanks = offline_service.fetch_bfile("A005471").values
    assert shanks[:7] == [7, 13, 19, 37, 79, 97, 139]
    for p in shanks:
        # p = h^2 + 3h + 9 exactly when 4p - 27 is the square (2h + 3)^2
        root = math.isqrt(4 * p - 27)
        assert root * root == 4 * p - 27 and root % 2 == 1
    assert offline_service.fetch_bfile("A198636").values[:7] == [3, 5, 13, 38, 117, 370, 1186]
