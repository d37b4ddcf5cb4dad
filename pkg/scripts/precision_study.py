"""Relative error of the expanded M11 polynomial against T^N, float vs exact evaluation.

    python scripts/precision_study.py [--trials 100] [--seed 0] [--nmax 30]

The expanded form alternates blocks whose magnitudes far exceed their sum
when |alpha| ~ 1, so double-precision summation breaks down around N ~ 15.
"""
import argparse

from deltacomb.multinomial import eval_polynomial, eval_polynomial_float, m11_polynomial
from deltacomb.oracle import params_at, random_points, rel_err
from deltacomb.scatter import alpha_beta, energy_param_c, matrix_power, phase_param_K, transfer_matrix


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--nmax", type=int, default=30)
    args = ap.parse_args()

    pts = random_points(args.trials, args.seed)
    print(f"{'N':>3}  {'float':>10}  {'exact':>10}")
    for N in range(1, args.nmax + 1):
        poly = m11_polynomial(N)
        worst_f = worst_e = 0.0
        for k, L, lam in pts:
            p = params_at(L, lam)
            c, K = energy_param_c(k, p), phase_param_K(k, L)
            a, b = alpha_beta(c, K)
            ref = matrix_power(transfer_matrix(c, K), N).m11
            worst_f = max(worst_f, rel_err(eval_polynomial_float(poly, a, b), ref))
            worst_e = max(worst_e, rel_err(eval_polynomial(poly, a, b), ref))
        print(f"{N:>3}  {worst_f:10.2e}  {worst_e:10.2e}")


if __name__ == "__main__":
    main()
