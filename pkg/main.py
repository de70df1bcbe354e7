import sys

from cli.commands import execute_command


def main():
    """Run one antenna design subcommand, e.g. `uv run main.py analyze designs/antenna2.toml`."""
    sys.exit(execute_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
