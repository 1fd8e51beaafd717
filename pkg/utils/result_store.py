"""Result store: one JSON document per (command, n, index, engine version)."""
import json
import logging
import os

from engine import ENGINE_VERSION
from utils.config import get_settings

logger = logging.getLogger(__name__)


def result_key(command, n, index=None, engine_version=ENGINE_VERSION):
    return (command, n, index, engine_version)


class ResultStore:
    def __init__(self, directory=None):
        self.directory = directory or get_settings().store_dir

    def path_for(self, key):
        command, n, index, version = key
        index_part = "all" if index is None else f"i{index}"
        return os.path.join(self.directory, f"{command}-n{n}-{index_part}-v{version}.json")

    def get(self, key):
        """Stored payload, or None when missing or unreadable."""
        path = self.path_for(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path, encoding="utf-8") as fh:
                document = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning("ignoring unreadable stored result %s: %s", path, e)
            return None
        return document.get("result")

    def put(self, key, result):
        command, n, index, version = key
        os.makedirs(self.directory, exist_ok=True)
        path = self.path_for(key)
        document = {
            "command": command,
            "n": n,
            "index": index,
            "engine_version": version,
            "result": result,
        }
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(document, fh, indent=2, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
        logger.info("stored %s", path)
        return path

    def keys(self):
        if not os.path.isdir(self.directory):
            return []
        found = []
        for name in sorted(os.listdir(self.directory)):
            if not name.endswith(".json"):
                continue
            try:
                with open(os.path.join(self.directory, name), encoding="utf-8") as fh:
                    doc = json.load(fh)
                found.append((doc["command"], doc["n"], doc["index"], doc["engine_version"]))
            except (OSError, json.JSONDecodeError, KeyError):
                continue
        return found

    def cached(self, key, compute, force=False):
        """Stored result for key, computing and storing it on a miss or with force."""
        if not force:
            hit = self.get(key)
            if hit is not None:
                logger.info("cache hit %s", self.path_for(key))
                return hit
        result = compute()
        self.put(key, result)
        return result
