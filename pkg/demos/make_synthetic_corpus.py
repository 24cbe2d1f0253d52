"""Regenerates corpus/synthetic: twelve 500-statement programs from fixed
seeds, plus baseline.json with the measured LOM/LOC figures.

    python3 demos/make_synthetic_corpus.py
"""
import json
import random
from pathlib import Path

from c2m.stats import file_stats
from c2m.synth import stmt_program

OUT = Path(__file__).resolve().parent.parent / "corpus" / "synthetic"
SEEDS = range(100, 112)
SIZE = 500

# frozen acceptance band for the mean ratio
BAND = (1.5, 4.0)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    ratios = {}
    for seed in SEEDS:
        src = stmt_program(random.Random(seed), SIZE)
        path = OUT / f"synth_{seed}.c"
        path.write_text(src)
        ratios[path.name] = round(file_stats(src, path.name).ratio, 4)
    mean = sum(ratios.values()) / len(ratios)
    base = {"size": SIZE, "seeds": list(SEEDS), "band": list(BAND),
            "mean_ratio": round(mean, 4), "ratios": ratios}
    (OUT / "baseline.json").write_text(json.dumps(base, indent=2) + "\n")
    print(f"{len(ratios)} files, mean LOM/LOC {mean:.3f}, band {BAND}")


if __name__ == "__main__":
    main()
