import sys

from termcolor import colored


def info(message):
    print(message)


def success(message):
    print(colored(message, "green"))


def headline(message):
    print(colored(message, "cyan"))


def warn(message):
    """Advisory conditions the caller may choose to ignore (printed to stderr)."""
    print(colored(f"Warning: {message}", "yellow"), file=sys.stderr)


def error(message):
    print(colored(f"Error: {message}", "red"), file=sys.stderr)
