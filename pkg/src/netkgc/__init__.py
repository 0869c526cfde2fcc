"""Knowledge graph completion with network-embedding pre-training.

Pipeline: parse triple files, pre-train entity embeddings from the
undirected entity graph, fine-tune tensor-decomposition link predictors
from those embeddings, and evaluate with filtered ranking.
"""

__version__ = "0.1.0"
