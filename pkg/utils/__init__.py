"""
Shared utilities: logging setup, error hierarchy, CSV helpers.
"""
