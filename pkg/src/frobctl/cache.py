"""On-disk cache of Weyl characters in the Character JSON format."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Sequence

from .charring import Character
from .rootdata import RootDatum

log = logging.getLogger(__name__)


class CharacterCache:
    """One JSON file per ``(type, rank, lam)``; corrupt files are recomputed and overwritten.

    An unwritable directory disables the cache with a warning instead of failing.
    """

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self.enabled = True
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            probe = tempfile.NamedTemporaryFile(dir=self.directory, delete=True)
            probe.close()
        except OSError as exc:
            log.warning("character cache disabled: %s is not writable (%s)", self.directory, exc)
            self.enabled = False

    def path_for(self, datum: RootDatum, lam: Sequence[int]) -> Path:
        name = "_".join(str(x) for x in lam) or "0"
        return self.directory / datum.label / f"{name}.json"

    def contains(self, datum: RootDatum, lam: Sequence[int]) -> bool:
        return self.enabled and self.path_for(datum, lam).is_file()

    def get(self, datum: RootDatum, lam: Sequence[int]) -> Character | None:
        if not self.enabled:
            return None
        path = self.path_for(datum, lam)
        try:
            with open(path, encoding="utf-8") as fh:
                ch = Character.from_json(json.load(fh), datum)
        except FileNotFoundError:
            return None
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring corrupt cache entry %s (%s)", path, exc)
            return None
        if tuple(lam) not in ch or ch[tuple(lam)] != 1:
            log.warning("ignoring inconsistent cache entry %s", path)
            return None
        return ch

    def put(self, datum: RootDatum, lam: Sequence[int], ch: Character) -> None:
        if not self.enabled:
            return
        path = self.path_for(datum, lam)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(ch.to_json(), fh, sort_keys=True)
            os.replace(tmp, path)
        except OSError as exc:
            log.warning("could not write cache entry %s (%s); cache disabled", path, exc)
            self.enabled = False


def cache_get(cache: CharacterCache, datum: RootDatum, lam: Sequence[int]) -> Character | None:
    return cache.get(datum, lam)


def cache_put(cache: CharacterCache, datum: RootDatum, lam: Sequence[int], ch: Character) -> Character:
    cache.put(datum, lam, ch)
    return ch
