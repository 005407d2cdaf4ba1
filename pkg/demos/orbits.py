"""Walk the mutation orbits of a few TF-ordered pairs and label each step."""

from nakatau.algebra import format_list, named_algebra, parse_list
from nakatau.mutation import mutation_case, orbit

EXAMPLES = [
    ("a4", "p:0:0,p:0:3"),
    ("a4", "m:0:1:2,m:0:0:1"),
    ("d3", "p:0:2,p:0:0"),
]


def show(name: str, text: str) -> None:
    A = named_algebra(name)
    start = parse_list(A, text)
    steps = orbit(A, start, 1)
    print(f"{name}: orbit of ({text}) has length {len(steps)}")
    for T in steps:
        print(f"  {mutation_case(A, T, 1):6}  {format_list(A, T)}")


if __name__ == "__main__":
    for name, text in EXAMPLES:
        show(name, text)
        print()
