from ._exotic import System, run_cli

__all__ = ["System", "run_cli"]
