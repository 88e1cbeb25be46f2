import json
import warnings

from hline.budget import Budget
from hline.cache import ClassificationCache
from hline.classify import Outcome
from hline.minimality import ClassificationSummary

SUMMARY = ClassificationSummary(Outcome.CONVERGED, 2, None, "00000004cc")
OTHER = ClassificationSummary(Outcome.TERMINATED, 3, None, None)


def cache_at(tmp_path, version="0.1.0", budget=Budget()):
    return ClassificationCache(tmp_path, version, budget)


def test_put_then_get(tmp_path):
    cache = cache_at(tmp_path)
    cache.put("abcd", 5, SUMMARY)
    assert cache.get("abcd", 5) == SUMMARY


def test_get_on_empty_cache_misses(tmp_path):
    cache = cache_at(tmp_path)
    assert cache.get("abcd", 5) is None
    assert cache.stats()["misses"] == 1


def test_round_trip_through_disk(tmp_path):
    cache_at(tmp_path).put("abcd", 5, SUMMARY)
    again = cache_at(tmp_path)
    assert again.get("abcd", 5) == SUMMARY


def test_stale_version_treated_as_miss(tmp_path):
    cache_at(tmp_path, version="0.0.9").put("abcd", 5, SUMMARY)
    assert cache_at(tmp_path, version="0.1.0").get("abcd", 5) is None


def test_different_budget_treated_as_miss(tmp_path):
    cache_at(tmp_path, budget=Budget(max_iter=10)).put("abcd", 5, SUMMARY)
    assert cache_at(tmp_path, budget=Budget(max_iter=30)).get("abcd", 5) is None


def test_newest_record_wins(tmp_path):
    cache = cache_at(tmp_path)
    cache.put("abcd", 5, SUMMARY)
    cache.put("abcd", 5, OTHER)
    assert cache_at(tmp_path).get("abcd", 5) == OTHER


def test_keys_distinguish_n(tmp_path):
    cache = cache_at(tmp_path)
    cache.put("abcd", 5, SUMMARY)
    assert cache.get("abcd", 6) is None


def test_corrupt_records_skipped_with_warning(tmp_path):
    cache = cache_at(tmp_path)
    cache.put("abcd", 5, SUMMARY)
    seg = next(tmp_path.glob("seg-*.jsonl"))
    lines = seg.read_text().splitlines()
    record = json.loads(lines[0])
    record["value"]["outcome"] = "terminated"  # checksum now stale
    seg.write_text(json.dumps(record) + "\nnot json at all\n")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        reopened = cache_at(tmp_path)
    assert reopened.get("abcd", 5) is None
    assert reopened.stats()["corrupt_skipped"] == 2
    assert caught


def test_segments_merge(tmp_path):
    first = cache_at(tmp_path)
    first.put("abcd", 5, SUMMARY)
    seg = next(tmp_path.glob("seg-*.jsonl"))
    other = tmp_path / "seg-99999.jsonl"
    line = json.loads(seg.read_text().splitlines()[0])
    line["key"] = ["beef", 5]
    payload = {k: line[k] for k in ("key", "value", "version", "budget", "ts")}
    from hline.cache import _record_sha

    line["sha"] = _record_sha(payload)
    other.write_text(json.dumps(line) + "\n")
    merged = cache_at(tmp_path)
    assert merged.get("abcd", 5) == SUMMARY
    assert merged.get("beef", 5) == SUMMARY
    assert merged.stats()["segments"] == 2


def test_clear(tmp_path):
    cache = cache_at(tmp_path)
    cache.put("abcd", 5, SUMMARY)
    assert cache.clear() == 1
    assert cache.get("abcd", 5) is None
    assert not list(tmp_path.glob("seg-*.jsonl"))


def test_env_var_controls_default_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("HLINE_CACHE_DIR", str(tmp_path / "xyz"))
    from hline.cache import default_cache_dir

    assert default_cache_dir() == tmp_path / "xyz"
