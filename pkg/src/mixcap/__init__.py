"""Exact verification of the map U(gl(n+1)) -> D'(n) (x) U(gl(n)) and its Capelli/Gelfand identities."""

__version__ = "0.1.0"
