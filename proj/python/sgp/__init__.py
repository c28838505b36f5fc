# Copyright 2026 The SGP Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Seasonal gradual pattern mining.

Patterns come back as plain dictionaries, e.g.::

    {"items": [{"attribute": "age", "direction": "up"}],
     "season": ["d1", "d2", "d3"],
     "support": 1.0,
     "per_item_support": {"age^+": 3}}
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Optional, Sequence

from . import _sgp
from ._sgp import Database, DataError, min_sup_for

__all__ = [
    "Database",
    "DataError",
    "bench",
    "count_report",
    "generate_synthetic",
    "load_csv",
    "mine",
    "mine_baseline",
    "min_sup_for",
    "transform",
    "transform_text",
]


def load_csv(
    path: str,
    cycle_length: Optional[int] = None,
    label_column: Optional[str] = None,
    attributes: Sequence[str] = (),
    drop_missing: bool = True,
) -> tuple[Database, list[str]]:
    """Returns the database and any ingest warnings."""
    return _sgp.load_csv(str(path), cycle_length, label_column, list(attributes), drop_missing)


def transform(db: Database, cross_boundary: bool = True, non_strict: bool = False) -> list[dict]:
    return json.loads(_sgp.transform_json(db, cross_boundary, non_strict))


def transform_text(db: Database, cross_boundary: bool = True, non_strict: bool = False) -> str:
    return _sgp.transform_text(db, cross_boundary, non_strict)


def mine(
    db: Database,
    theta: float,
    *,
    min_sup_abs: Optional[int] = None,
    cross_boundary: bool = True,
    non_strict: bool = False,
    contiguous_only: bool = False,
    all_seasons: bool = False,
    min_items: int = 1,
    prune_subsumed: bool = False,
    threads: int = 1,
) -> list[dict]:
    return json.loads(
        _sgp.mine_json(
            db,
            theta,
            min_sup_abs,
            cross_boundary,
            non_strict,
            contiguous_only,
            all_seasons,
            min_items,
            prune_subsumed,
            threads,
        )
    )


def mine_baseline(db: Database, theta: float, *, cross_boundary: bool = True, non_strict: bool = False) -> list[dict]:
    return json.loads(_sgp.mine_baseline_json(db, theta, cross_boundary, non_strict))


def count_report(patterns: Iterable[dict]) -> tuple[int, int]:
    """(distinct item sets, distinct (item set, season) pairs)."""
    item_sets = set()
    pairs = set()
    for p in patterns:
        items = tuple((i["attribute"], i["direction"]) for i in p["items"])
        item_sets.add(items)
        pairs.add((items, tuple(p["season"])))
    return len(item_sets), len(pairs)


def bench(
    db: Database,
    thetas: Sequence[float],
    algorithms: Sequence[str] = ("msgp", "temporal"),
    repetitions: int = 3,
) -> list[dict]:
    """Rows of the plot-data CSV; failed cells hold None."""
    text = _sgp.bench_csv(db, list(thetas), list(algorithms), repetitions)
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        rows.append(
            {
                "theta": float(row["theta"]),
                "algorithm": row["algorithm"],
                "n_patterns": None if row["n_patterns"] == "NA" else int(row["n_patterns"]),
                "n_seasonality": int(row["n_seasonality"]) if row["n_seasonality"] not in ("", "NA") else None,
                "runtime_ms": None if row["runtime_ms"] == "NA" else float(row["runtime_ms"]),
            }
        )
    return rows


def generate_synthetic(
    m: int,
    cycle_length: int,
    n: int,
    plants: Sequence[tuple[Sequence[tuple[int, str]], int, int, float]] = (),
    seed: int = 0,
) -> tuple[Database, list[int]]:
    """Plants are (items, first label, last label, probability) with items as
    (0-based attribute, "up"/"down"). Also returns each plant's realized cycle count."""
    normalized = [([(int(a), str(d)) for a, d in items], int(lo), int(hi), float(p)) for items, lo, hi, p in plants]
    return _sgp.generate_synthetic(m, cycle_length, n, normalized, seed)
