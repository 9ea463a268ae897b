"""Replay the three toy examples and print every intermediate value."""

from cpbreak.demos import DEMOS

if __name__ == "__main__":
    for k, fn in DEMOS.items():
        print(f"===== example {k} =====")
        print(fn())
        print()
