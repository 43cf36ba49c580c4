import json
import threading

import pytest

from extverts import cache
from extverts.cache import CacheError, JackCache
from extverts.partitions import Partition, enumerate_partitions
from extverts.symfunc import jack


def test_persistent_round_trip(tmp_path):
    c = JackCache(tmp_path)
    computed = jack((2, 1), cache=c)
    assert c.stats()["entries"] == 3
    data = json.loads((tmp_path / "jack.json").read_text())
    assert {d["partition"] for d in data} == {"3", "2,1", "1,1,1"}
    assert data[0]["coeffs"][0].keys() == {"partition", "coeff"}
    fresh = JackCache(tmp_path)
    assert jack((2, 1), cache=fresh) == computed
    assert fresh.stats()["max_degree"] == 3


def test_cache_on_off_identical(tmp_path):
    on = JackCache(tmp_path)
    off = JackCache(None)
    for lam in enumerate_partitions(4):
        a = jack(lam, cache=on).terms
        b = jack(lam, cache=off).terms
        assert a == b
    reloaded = JackCache(tmp_path)
    for lam in enumerate_partitions(4):
        assert jack(lam, cache=reloaded).terms == jack(lam, cache=off).terms


def test_clear(tmp_path):
    c = JackCache(tmp_path)
    jack((2,), cache=c)
    c.clear()
    assert c.stats()["entries"] == 0
    assert not (tmp_path / "jack.json").exists()


def test_insert_if_absent_is_idempotent_under_threads():
    c = JackCache(None)
    seen = []

    def worker(k):
        seen.append(c.put_if_absent(Partition((1,)), {Partition((1,)): k}))

    threads = [threading.Thread(target=worker, args=(k,)) for k in range(1, 9)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len({id(v) for v in seen}) == 1


def test_unwritable_directory(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    c = JackCache(blocker / "sub")
    with pytest.raises(CacheError, match="sub"):
        c.put_if_absent(Partition((1,)), {Partition((1,)): 1})


def test_configure_replaces_default(tmp_path):
    old = cache.default_cache()
    try:
        assert cache.configure(tmp_path).path == tmp_path / "jack.json"
    finally:
        cache._default = old
