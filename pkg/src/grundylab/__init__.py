"""
grundylab - Grundy domination, Z-Grundy domination and zero forcing on graphs.

This package computes the three invariants exactly, builds long sequences
the way the regular-graph lower bounds are proved, and checks the bounds and
the extremal cubic characterizations over streams of graphs.
"""

import logging
import sys
from typing import Optional, Union

def setup_logging(level: Union[int, str] = logging.WARNING, log_file: Optional[str] = None):
    """Set up consistent logging across the application."""
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    handlers = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    # Configure root logger
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )

    # Set specific levels for modules
    logging.getLogger("grundylab").setLevel(level)
    logging.getLogger("grundylab.graphs").setLevel(max(level, logging.INFO))
    logging.getLogger("grundylab.families").setLevel(max(level, logging.INFO))

# Define version
__version__ = "0.1.0"


def main():
    """Run the grundylab command line."""
    from grundylab.cli import run

    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
