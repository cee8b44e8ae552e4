"""Command-line interface: `ucelab <subcommand>`."""
