"""
OEIS b-file client: cache first, then the network, then bundled fixtures
"""

import logging
import os
import tempfile
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import httpx

from app.config import settings
from app.models.documents import SEQUENCE_ID, BFile, OutputDocument
from app.models.sequence import A198636
from app.services.gaussian import shanks_primes
from app.services.sequences import recurrence_terms
from app.utils.errors import InvalidSequenceId, OfflineMiss, UsageError
from app.utils.helpers import parse_bfile

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "data" / "oeis"


def bfile_name(seq_id: str) -> str:
    return f"b{seq_id[1:]}.txt"


class OEISService:
    def __init__(
        self,
        base_url: str = None,
        timeout: float = None,
        cache_dir: Path = None,
        offline: bool = None,
        transport: httpx.BaseTransport = None,
        fixture_dir: Path = FIXTURE_DIR,
    ):
        self.base_url = base_url or settings.OEIS_BASE_URL
        self.timeout = timeout if timeout is not None else settings.OEIS_TIMEOUT
        self.cache_dir = Path(cache_dir) if cache_dir is not None else settings.oeis_cache_dir
        self.offline = offline if offline is not None else settings.OEIS_OFFLINE
        self.transport = transport
        self.fixture_dir = fixture_dir

    def fetch_bfile(self, seq_id: str) -> BFile:
        if not SEQUENCE_ID.match(seq_id or ""):
            raise InvalidSequenceId(f"sequence id must look like A000000, got {seq_id!r}")
        name = bfile_name(seq_id)

        cached = self.cache_dir / name
        if cached.is_file():
            logger.info(f"OEIS cache hit for {seq_id}: {cached}")
            return BFile(sequence_id=seq_id, rows=parse_bfile(cached.read_text()))

        text = None if self.offline else self._download(seq_id, name)
        if text is not None:
            rows = parse_bfile(text)
            self._store(cached, text)
            return BFile(sequence_id=seq_id, rows=rows)

        fixture = self.fixture_dir / name
        if fixture.is_file():
            logger.info(f"using bundled fixture for {seq_id}")
            return BFile(sequence_id=seq_id, rows=parse_bfile(fixture.read_text()))

        raise OfflineMiss(f"{seq_id} is not cached, not bundled and could not be downloaded")

    def _download(self, seq_id: str, name: str) -> Optional[str]:
        url = f"/{seq_id}/{name}"
        try:
            with httpx.Client(
                base_url=self.base_url, timeout=self.timeout, transport=self.transport
            ) as client:
                response = client.get(url)
        except httpx.HTTPError as e:
            logger.warning(f"OEIS download of {seq_id} failed: {e}")
            return None
        if response.status_code != 200:
            logger.warning(f"OEIS returned {response.status_code} for {seq_id}")
            return None
        logger.info(f"downloaded {seq_id} from {self.base_url}")
        return response.text

    def _store(self, target: Path, text: str) -> None:
        """Write to a temporary file in the cache directory, then rename over the target"""
        target.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=target.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as f:
                f.write(text)
            os.replace(tmp, target)
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def compare_terms(bfile: BFile, local: Sequence[int]) -> Tuple[bool, List[Tuple[int, int, int]]]:
    """Compare local terms against the b-file over their common prefix; returns (ok, mismatches)"""
    mismatches = [
        (n, expected, got)
        for (n, expected), got in zip(bfile.rows, local)
        if expected != got
    ]
    return not mismatches, mismatches


def local_terms(
    bfile: BFile, terms: Optional[int] = None, limit: Optional[int] = None
) -> Tuple[List[int], BFile]:
    """Terms computed here, plus the slice of the b-file they should equal"""
    if bfile.sequence_id == "A198636":
        count = len(bfile.rows) if terms is None else terms
        if count > len(bfile.rows):
            logger.warning(f"b-file has only {len(bfile.rows)} rows; comparing those")
            count = len(bfile.rows)
        return recurrence_terms(A198636, count), BFile(sequence_id="A198636", rows=bfile.rows[:count])
    if bfile.sequence_id == "A005471":
        last = bfile.values[-1]
        if limit is None or limit > last:
            if limit is not None:
                logger.warning(f"b-file stops at {last}; comparing primes up to there")
            limit = last
        rows = [(n, p) for n, p in bfile.rows if p <= limit]
        return [p for _, p in shanks_primes(limit)], BFile(sequence_id="A005471", rows=rows)
    raise UsageError(f"no local generator for {bfile.sequence_id}; supported: A005471, A198636")


def cross_check(
    seq_id: str, terms: Optional[int] = None, limit: Optional[int] = None, service: "OEISService" = None
) -> OutputDocument:
    """Compare locally generated terms with the OEIS b-file; checks.status is pass or fail"""
    local, expected = local_terms((service or oeis_service).fetch_bfile(seq_id), terms, limit)
    ok, mismatches = compare_terms(expected, local)
    ok = ok and len(local) == len(expected.rows)
    checks = {"compared": str(len(local)), "status": "pass" if ok else "fail"}
    if mismatches:
        n, want, got = mismatches[0]
        checks["first_mismatch"] = f"n={n}: expected {want}, computed {got}"
    elif len(local) != len(expected.rows):
        checks["length"] = f"expected {len(expected.rows)} terms, computed {len(local)}"
    logger.info(f"{seq_id}: {checks['status']} over {len(local)} terms")
    return OutputDocument(
        kind="oeis-check", inputs={"id": seq_id}, terms=[str(t) for t in local], checks=checks
    )


oeis_service = OEISService()


def fetch_bfile(seq_id: str, cache_dir: Path = None) -> BFile:
    if cache_dir is None:
        return oeis_service.fetch_bfile(seq_id)
    return OEISService(cache_dir=cache_dir).fetch_bfile(seq_id)
