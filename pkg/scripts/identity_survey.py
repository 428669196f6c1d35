"""Survey candidate polynomial identities across generator counts.

Each candidate is written in the y-expression grammar and checked per n.
Multilinear candidates are decided exhaustively over basis-monomial
tuples; the rest are probed with seeded random substitutions, so "holds
(randomized)" means only that no counterexample turned up.
"""

import argparse
from dataclasses import dataclass

from grasskit.cli import eval_free, parse
from grasskit.identities import is_identity

CANDIDATES = (
    "[y1,y2]",
    "{y1,y2}",
    "[[y1,y2],y3]",
    "[[y1,y2]*[y1,y2], y3]",
    "[[y1,y2],[y3,y4]]",
    "y1*y2*y3 - y3*y2*y1",
)


@dataclass
class SurveyConfig:
    generator_counts: tuple[int, ...] = (2, 3, 4)
    trials: int = 200
    seed: int = 0


def survey(cfg: SurveyConfig) -> None:
    for text in CANDIDATES:
        f = eval_free(parse(text, "indeterminates"))
        verdicts = []
        for n in cfg.generator_counts:
            v = is_identity(f, n, trials=cfg.trials, seed=cfg.seed)
            flag = "holds" if v.holds else "fails"
            verdicts.append(f"n={n}: {flag} ({v.mode})")
        print(f"{text:28s} {'; '.join(verdicts)}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "-n",
        "--generator-counts",
        type=int,
        nargs="+",
        default=[2, 3, 4],
        help="generator counts to check each candidate against",
    )
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    survey(SurveyConfig(tuple(args.generator_counts), args.trials, args.seed))


if __name__ == "__main__":
    main()
