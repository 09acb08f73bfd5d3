"""Euler characteristics of Gamma_1(m, N) and Gamma_1(2, a) at a few levels.

For m = 4 both the closed form phi(N) and the value of the summation are
shown; they differ by phi2(N)/12 (see the decisions ledger).

Run: python demos/gamma1_levels.py
"""

from brownchi import RepSpec, chi_h_gamma1_ring, chi_h_gamma1_z, phi, phi2, phi_ring
from brownchi.exactnum import QuadRing


def main() -> None:
    print(f"{'N':>4} {'phi':>5} {'phi2':>6} {'m=2':>6} {'m=3':>6} {'m=4':>6} {'phi(N)':>7}")
    for N in (5, 7, 11, 13, 25, 35):
        values = [chi_h_gamma1_z(m, N, RepSpec(m)) for m in (2, 3, 4)]
        print(f"{N:>4} {phi(N):>5} {phi2(N):>6} " + " ".join(f"{str(v):>6}" for v in values) + f" {phi(N):>7}")

    print("\nGamma_1(2, a) over Z[i] and Z[xi3]:")
    for ring, gens in [(QuadRing.GAUSS, [(2, 1), (3, 0), (1, 4)]), (QuadRing.EISENSTEIN, [(2, 0), (3, 1), (7, 0)])]:
        for a, b in gens:
            gen = ring.element(a, b)
            value = chi_h_gamma1_ring(ring, 2, gen, RepSpec(2))
            print(f"  {ring.value:<10} ({gen}): phi = {phi_ring(gen, ring):>3}, chi_h = {value}")


if __name__ == "__main__":
    main()
