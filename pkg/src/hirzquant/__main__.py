"""Allow `python -m hirzquant`."""

from .cli import run

if __name__ == "__main__":
    run()
