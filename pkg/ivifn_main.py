#!/usr/bin/env python3
"""
IVIFN Lattice - complete total orders on interval-valued intuitionistic fuzzy numbers
Command-line entry point
"""

import sys

from src.cli import EXIT_INPUT, EXIT_OK, build_parser, dispatch, setup_logging


def main():
    """Main entry point for the ivifn command"""
    try:
        args = build_parser().parse_args()
    except SystemExit as e:
        # usage errors are input errors; 2 is reserved for verification failures
        sys.exit(EXIT_OK if e.code in (0, None) else EXIT_INPUT)

    logger = setup_logging(args.verbose, args.log_file)
    logger.info(f"Running ivifn {args.command}")

    sys.exit(dispatch(args))


if __name__ == "__main__":
    main()
