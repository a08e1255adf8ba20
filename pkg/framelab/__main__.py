#!/usr/bin/env python3
"""
Framelab - frame matroids and templates at desk scale

Entry point for `python -m framelab` and the `framelab` console script.
"""

import sys

from framelab.cli import run


def main():
    """Main application entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
