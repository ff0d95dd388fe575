"""Shared test configuration; helper generators live in helpers.py."""
