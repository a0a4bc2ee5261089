"""Finite-N correlation of single traces against the large-N limit, as CSV."""
import argparse

from guemoments.asymptotics import TraceVariableSpec, correlation_limit
from guemoments.moments import finite_n_statistics


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-index", type=int, default=2)
    parser.add_argument("--sizes", default="10,100,1000,10000")
    args = parser.parse_args()
    sizes = [int(n) for n in args.sizes.split(",")]

    print("parity,i,j,limit,N,correlation,error")
    for i in range(args.max_index + 1):
        for j in range(i, args.max_index + 1):
            for parity in ("odd", "even"):
                if parity == "even" and 0 in (i, j):
                    continue
                if parity == "odd":
                    f, g = (2 * i + 1,), (2 * j + 1,)
                    spec_f, spec_g = TraceVariableSpec(odds=(i,)), TraceVariableSpec(odds=(j,))
                else:
                    f, g = (2 * i,), (2 * j,)
                    spec_f, spec_g = TraceVariableSpec(evens=(i,)), TraceVariableSpec(evens=(j,))
                limit = correlation_limit(spec_f, spec_g).value
                for n in sizes:
                    corr = finite_n_statistics(f, g, n).correlation
                    err = corr.to_decimal(40) - limit.to_decimal(40)
                    print(f"{parity},{i},{j},{limit},{n},{float(corr):.15f},{float(err):.3e}")


if __name__ == "__main__":
    main()
