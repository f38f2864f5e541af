"""Word-representability of de Bruijn-type graphs via semi-transitive orientations."""

__version__ = "0.1.0"
