"""Print one pass/fail line per acceptance criterion; exit 1 if any fails."""

import argparse
import sys

from hypersurf import acceptance


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    args = ap.parse_args()
    chosen = [c for i, c in enumerate(acceptance.CRITERIA, 1) if not args.only or i in args.only]
    failed = 0
    for crit in chosen:
        out = acceptance.run(crit)
        print(out.line(), flush=True)
        for note in out.notes:
            print(f"       {note}")
        failed += not out.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
