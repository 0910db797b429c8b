"""Offline companion tool for the lexintel pipeline: runs a pretrained
multilingual sentence encoder over sampled corpus occurrences and emits
per-occurrence contextual vectors in the pipeline's JSON-lines format."""

__version__ = "0.1.0"
