"""Verify every divisor in the corpus and print the summary table.

    python3 scripts/run_corpus.py [--mode degrees] [--jobs 4] [--json out.json]
"""

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from logdiv.verify import corpus_run

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class Config:
    corpus: Path = ROOT / "corpus"
    mode: str = "full"
    seed: int = 0
    jobs: int = 1
    json_out: Path | None = None


def main(cfg: Config):
    paths = sorted(cfg.corpus.glob("*.json"))
    summary = corpus_run(paths, cfg.mode, cfg.seed, jobs=cfg.jobs)
    print(summary.table())
    if cfg.json_out:
        data = {"reports": [r.to_dict() for r in summary.reports], "rejected": summary.errors}
        cfg.json_out.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return summary.exit_code


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--corpus", type=Path, default=Config.corpus)
    p.add_argument("--mode", choices=["full", "degrees"], default="full")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", dest="json_out", type=Path)
    raise SystemExit(main(Config(**vars(p.parse_args()))))
