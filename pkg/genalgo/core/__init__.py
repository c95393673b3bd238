"""Core functionality modules for the genalgo application."""
