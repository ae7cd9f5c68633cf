"""On-disk witness cache, one JSON file per (n, s, search config)."""

import hashlib
import json
import os
from pathlib import Path

from .search import ScanOutcome, SearchConfig
from .witness import Witness, verify_witness


class WitnessCache:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, n: int, s: int, cfg: SearchConfig) -> Path:
        key = "%d:%d:%s" % (n, s, cfg.digest())
        return self.root / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".json")

    def get(self, n, s, cfg):
        """Stored outcome, or None. Entries whose witness no longer verifies
        are treated as missing."""
        path = self._path(n, s, cfg)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("n") != n or data.get("s") != s or data.get("config") != cfg.digest():
            return None
        w = data.get("witness")
        witness = Witness(**w) if w else None
        if witness is not None and not verify_witness(n ** s, witness, cfg.numerator_a):
            return None
        return ScanOutcome(n, witness, data["x_tried"], data["t_tried"], data["status"])

    def put(self, n, s, cfg, outcome: ScanOutcome):
        data = {
            "n": n,
            "s": s,
            "config": cfg.digest(),
            "witness": outcome.witness.as_dict() if outcome.witness else None,
            "x_tried": outcome.x_tried,
            "t_tried": outcome.t_tried,
            "status": outcome.status,
        }
        path = self._path(n, s, cfg)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(data, sort_keys=True))
        os.replace(tmp, path)
