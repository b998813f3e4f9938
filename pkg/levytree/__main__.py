"""Allow ``python -m levytree``."""

from levytree.cli import run

if __name__ == "__main__":
    run()
