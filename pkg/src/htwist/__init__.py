"""htwist: exact-arithmetic bar/cobar constructions, twisting cochains and
twisting functions, classifying bundles, Nomura-Puppe sequences, and
machine-checked homotopy-(co)normality certificates for chain complexes
and simplicial sets."""

__version__ = "0.1.0"
