"""Print chi_h(GL_m(O), S^n V) for small n and check that GL_3(Z), GL_4(Z) repeat GL_2(Z).

Run: python demos/gl2_tables.py
"""

from brownchi import RepSpec, chi_h_glm


def row(ring: str, m: int, det: int = 0, n_max: int = 24) -> list[str]:
    return [str(chi_h_glm(ring, m, RepSpec(m, n, det))) for n in range(n_max + 1)]


def main() -> None:
    print("n:               ", " ".join(f"{n:>3}" for n in range(25)))
    for label, ring, m, det in [
        ("GL2(Z)          ", "Z", 2, 0),
        ("GL2(Z) (x) det  ", "Z", 2, 1),
        ("GL3(Z)          ", "Z", 3, 0),
        ("GL4(Z)          ", "Z", 4, 0),
        ("GL2(Z[i])       ", "gauss", 2, 0),
        ("GL2(Z[xi3])     ", "eisenstein", 2, 0),
    ]:
        print(label, " ".join(f"{v:>3}" for v in row(ring, m, det)))
    same = row("Z", 2) == row("Z", 3) == row("Z", 4)
    print("\nGL2, GL3 and GL4 over Z agree on S^n V for n <= 24:", same)


if __name__ == "__main__":
    main()
