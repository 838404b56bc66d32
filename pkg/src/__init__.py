"""MatchKit package."""
