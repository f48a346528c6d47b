"""Run the packaged torus battery and the product bounds on a few factor pairs."""

# Import local modules
from localization.api import acceptance_matrix
from localization.api import check_bounds_battery
from localization.api import graph_from_tag


def main():
    table = acceptance_matrix(workers=4)
    for row in table.rows:
        print(f"C{row.m}□C{row.n}: expected {row.expected}, observed {row.observed} ({row.method}) {row.status.name}")
    print(f"verdict: {table.verdict.name}")

    pairs = [(graph_from_tag(first), graph_from_tag(second)) for first, second in (("P3", "C4"), ("C5", "P2"))]
    print(check_bounds_battery(pairs, workers=2).to_dict())


if __name__ == "__main__":
    main()
