"""Brute-force scan of the center for small generator counts.

For each n, every basis monomial is tested for centrality (commutation
with all generators).  The even monomials are always central; the scan's
interesting output is the single extra central monomial, the full product
x1*..*xn, which appears exactly when n is odd.
"""

import argparse
from dataclasses import dataclass

from grasskit.algebra import Element, basis_monomials
from grasskit.grading import is_central


@dataclass
class ScanConfig:
    max_generators: int = 6
    show_monomials: bool = False


def scan(cfg: ScanConfig) -> None:
    for n in range(1, cfg.max_generators + 1):
        monomials = basis_monomials(n)
        central = [m for m in monomials if is_central(Element({m: 1}), n)]
        even_count = sum(1 for m in monomials if len(m) % 2 == 0)
        extra = [m for m in central if len(m) % 2 == 1]
        line = (
            f"n={n}: {len(central)} of {len(monomials)} basis monomials "
            f"central, {even_count} even"
        )
        if extra:
            line += ", odd extras: " + ", ".join(
                str(Element({m: 1})) for m in extra
            )
        print(line)
        if cfg.show_monomials:
            for m in central:
                print("   ", Element({m: 1}))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--max-generators", type=int, default=6, help="largest n to scan"
    )
    parser.add_argument(
        "--show-monomials", action="store_true", help="list every central monomial"
    )
    args = parser.parse_args()
    scan(ScanConfig(args.max_generators, args.show_monomials))


if __name__ == "__main__":
    main()
