# scripts/frobenius_law_sweep.py
# Usage: python -m scripts.frobenius_law_sweep --ideals 100 --seed 7
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Callable, Dict, List

import numpy as np
import pandas as pd

from algebra.groebner import Ideal, ideal_contains, ideal_equal
from algebra.ideal_ops import ideal_intersect
from algebra.sampling import SampleConfig, random_ideal, random_ring
from fsing.frobenius import frobenius_power, frobenius_root
from utils.config import SETTINGS
from utils.logger import get_logger

logger = get_logger("frobenius_lab.sweep")


@dataclass
class SweepConfig:
    n_ideals: int = 100
    n_targets: int = 20
    n_pairs: int = 50
    seed: int = 7
    levels: tuple = (1, 2)
    sample: SampleConfig = field(default_factory=SampleConfig)


def round_trip(I: Ideal, e: int) -> bool:
    return ideal_equal(frobenius_root(frobenius_power(I, e), e), I)


def containment(I: Ideal, e: int) -> bool:
    return ideal_contains(frobenius_power(frobenius_root(I, e), e), I)


def tower(I: Ideal, e: int) -> bool:
    return ideal_equal(frobenius_root(frobenius_root(I, 1), 1), frobenius_root(I, 2))


def adjunction(I: Ideal, K: Ideal, e: int) -> bool:
    """I ⊆ K^[q] iff I^[1/q] ⊆ K."""
    return ideal_contains(frobenius_power(K, e), I) == ideal_contains(K, frobenius_root(I, e))


def distributivity(I: Ideal, J: Ideal, e: int) -> bool:
    lhs = frobenius_power(ideal_intersect(I, J), e)
    rhs = ideal_intersect(frobenius_power(I, e), frobenius_power(J, e))
    return ideal_equal(lhs, rhs)


SINGLE_LAWS: Dict[str, Callable[[Ideal, int], bool]] = {
    "round_trip": round_trip,
    "containment": containment,
    "tower": tower,
}


def run_sweep(cfg: SweepConfig) -> pd.DataFrame:
    rng = np.random.default_rng(cfg.seed)
    rows: List[dict] = []
    for idx in range(cfg.n_ideals):
        ring = random_ring(rng, cfg.sample)
        I = random_ideal(ring, rng, cfg.sample)
        e = int(rng.choice(cfg.levels))
        for law, check in SINGLE_LAWS.items():
            rows.append({"case": idx, "law": law, "p": ring.p, "nvars": ring.nvars, "e": e, "ok": check(I, e)})
        adj_ok = all(adjunction(I, random_ideal(ring, rng, cfg.sample), e) for _ in range(cfg.n_targets))
        rows.append({"case": idx, "law": "adjunction", "p": ring.p, "nvars": ring.nvars, "e": e, "ok": adj_ok})
    for idx in range(cfg.n_pairs):
        ring = random_ring(rng, cfg.sample)
        I, J = random_ideal(ring, rng, cfg.sample), random_ideal(ring, rng, cfg.sample)
        e = int(rng.choice(cfg.levels))
        ok = distributivity(I, J, e)
        rows.append({"case": idx, "law": "distributivity", "p": ring.p, "nvars": ring.nvars, "e": e, "ok": ok})
    df = pd.DataFrame(rows)
    failures = df[~df["ok"]]
    if not failures.empty:
        logger.warning("%d law failures:\n%s", len(failures), failures.to_string(index=False))
    return df


def summarize(df: pd.DataFrame) -> pd.DataFrame:
    return (
        df.groupby("law")["ok"]
        .agg(cases="count", passed="sum")
        .assign(failed=lambda t: t["cases"] - t["passed"])
        .reset_index()
    )


def main() -> None:
    ap = argparse.ArgumentParser(description="Randomized Frobenius power / root law sweep")
    ap.add_argument("--ideals", type=int, default=100, help="Random ideals for the single-ideal laws")
    ap.add_argument("--targets", type=int, default=20, help="Random K per ideal for the adjunction law")
    ap.add_argument("--pairs", type=int, default=50, help="Random pairs for distributivity over intersections")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out", type=Path, default=None, help="CSV path (default: reports directory)")
    args = ap.parse_args()

    cfg = SweepConfig(n_ideals=args.ideals, n_targets=args.targets, n_pairs=args.pairs, seed=args.seed)
    df = run_sweep(cfg)
    summary = summarize(df)
    print(summary.to_string(index=False))

    out = args.out
    if out is None:
        SETTINGS.reports_dir.mkdir(parents=True, exist_ok=True)
        out = SETTINGS.reports_dir / f"frobenius_laws_{datetime.now().strftime('%Y%m%d_%H%M')}.csv"
    df.to_csv(out, index=False)
    print(f"Saved {out.as_posix()}")


if __name__ == "__main__":
    main()
