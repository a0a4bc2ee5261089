"""Compare recursion and chord enumeration for every multiset up to a total sum."""
import argparse
import time

from guemoments.moments import MomentCache, moment_by_enumeration, moment_by_recursion


def partitions(total, largest=None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-sum", type=int, default=14)
    args = parser.parse_args()

    cache = MomentCache()
    print("sum,multisets,mismatches,seconds")
    for s in range(0, args.max_sum + 1, 2):
        start, count, bad = time.perf_counter(), 0, 0
        for ks in partitions(s):
            count += 1
            bad += moment_by_recursion(ks, cache) != moment_by_enumeration(ks)
        print(f"{s},{count},{bad},{time.perf_counter() - start:.2f}")


if __name__ == "__main__":
    main()
