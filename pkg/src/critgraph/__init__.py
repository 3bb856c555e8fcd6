"""Generation and verification of k-critical graphs in hereditary classes."""

from .graph import Graph, from_graph6, to_graph6

__version__ = "0.1.0"
__all__ = ["Graph", "from_graph6", "to_graph6", "__version__"]
