"""Matchings package."""
