"""Utility modules for the genalgo application."""
