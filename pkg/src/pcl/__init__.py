"""Length-16 extended 1-perfect codes built by doubling, and their quotient-graph structure.

The package enumerates the 1-perfect codes and code partitions of length 7,
classifies the partitions and their length-8 parity extensions, doubles pairs
of extended partitions into (16, 2048, 4) codes, computes kernel and rank
invariants, folds each code into a quadruple-system multigraph over its
kernel, classifies the Steiner triple systems of the punctured codes by Pasch
counts, and checks the loop/link structure of the folded graphs.
"""

__version__ = "0.1.0"

from .doubling import Code, double
from .partitions import Atlas, build_atlas
