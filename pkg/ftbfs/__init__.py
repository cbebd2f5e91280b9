"""Fault-tolerant BFS structures: builders, verifier, generators and experiments."""

__version__ = "0.1.0"
