"""K-theoretic factorial Schur P- and Q-functions and their localizations."""

__version__ = "0.1.0"
