"""hypercage: regular uniform hypergraphs of given Berge girth."""

__version__ = "0.1.0"
