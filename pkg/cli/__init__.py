"""
Command-line surface: session files and one subcommand per library operation.

Run with `python -m cli <subcommand> ...`.
"""
