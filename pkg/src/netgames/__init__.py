"""Open graphs, open games, and the network-game semantics connecting them."""

__version__ = "0.1.0"
