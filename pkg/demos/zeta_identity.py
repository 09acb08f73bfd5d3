"""Recover zeta_K(-1) from chi_h(SL_2(O_K)) using the bundled field data, and back.

Run: python demos/zeta_identity.py
"""

from fractions import Fraction

from brownchi.zetam1 import integrality_check, load_field_data, solve_identity, torsion_contribution


def main() -> None:
    for name, chi_h in [("Q", Fraction(1)), ("Q_sqrt5", Fraction(4))]:
        fd = load_field_data(name)
        zeta = solve_identity(fd, chi_h=chi_h)
        print(f"{fd.name}: torsion terms = {torsion_contribution(fd)}, chi_h = {chi_h} -> zeta(-1) = {zeta}")
        print(f"    and back: zeta(-1) = {zeta} -> chi_h = {solve_identity(fd, zeta=zeta)}")
    q = load_field_data("Q")
    print("zeta_Q(-1) = 0 would give chi_h =", solve_identity(q, zeta=Fraction(0)), "integral:", integrality_check(q, Fraction(0)))


if __name__ == "__main__":
    main()
