"""The Poisson limit profile and matched cutoff times.

Both shuffles converge with the same profile shape: at time n(log n + c) for
star (half that for random transpositions) the TV distance tends to
TV(Poisson(1 + e^-c), Poisson(1)).
"""

from shuffle_spectra import profiles as pr


def main():
    print("limit profile Phi(c) = TV(Poisson(1 + e^-c), Poisson(1)):")
    print("   c      Phi(c)")
    for p in pr.profile_curve(-4.0, 6.0, 1.0):
        bar = "#" * round(40 * p.value)
        print(f"  {p.c:>4.1f}  {p.value:.6f}  {bar}")

    print()
    print("matched cutoff times (parity-aligned) at a few deck sizes:")
    print("    n      t(rt)   t*(star)")
    for n in (8, 20, 52, 100, 500):
        t, t_star = pr.cutoff_times(n, 0.0)
        print(f"  {n:>5}  {t:>7}  {t_star:>9}")

    print()
    print("the profile saturates for very negative c and vanishes for large c:")
    print(f"  Phi(-8) = {pr.star_profile(-8.0).value:.8f}")
    print(f"  Phi(12) = {pr.star_profile(12.0).value:.2e}")


if __name__ == "__main__":
    main()
