#!/usr/bin/env python3
"""Command-line wrapper for genalgo.

Forwards command-line arguments to the main entry point of the application.
"""

import sys

from genalgo.__main__ import main

if __name__ == "__main__":
    sys.exit(main())
