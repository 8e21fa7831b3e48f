"""Statevector VQE benchmark for energy-witness entanglement detection."""

__version__ = "0.1.0"
