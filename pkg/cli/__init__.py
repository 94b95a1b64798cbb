# cli/__init__.py
"""
Command-line interface for the Wiener index toolkit.
"""
