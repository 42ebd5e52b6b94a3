"""Bracket router for selecting a Poisson bracket by name."""
from typing import Dict

from gldouble.config import settings
from gldouble.poisson.base import BaseBracket
from gldouble.poisson.brackets import DoubleBracket, DualBracket, StandardBracket
from gldouble.poisson.cache import GradientCache


class BracketRouter:
    """Router for managing and selecting brackets."""

    def __init__(self, cache: GradientCache | None = None):
        """Initialize the router; all brackets share one gradient cache."""
        self.cache = cache if cache is not None else GradientCache()
        self.brackets: Dict[str, BaseBracket] = {
            "double": DoubleBracket(self.cache),
            "std": StandardBracket(self.cache),
            "dual": DualBracket(self.cache),
        }

    def get_bracket(self, bracket_id: str | None = None) -> BaseBracket:
        """
        Get a bracket by ID, or return the configured default.

        Args:
            bracket_id: Bracket ID ("double", "std" or "dual"). If None, returns default.

        Returns:
            BaseBracket instance

        Raises:
            ValueError: If the bracket is not known
        """
        if bracket_id is None:
            bracket_id = settings.default_bracket

        if bracket_id not in self.brackets:
            raise ValueError(f"Bracket '{bracket_id}' not found. Available: {', '.join(self.brackets)}")

        return self.brackets[bracket_id]

    def list_brackets(self) -> Dict[str, Dict]:
        """
        List all brackets with the point kind they are sampled on.

        Returns:
            Dict mapping bracket IDs to their info
        """
        return {
            bracket_id: {"id": bracket_id, "name": bracket.name, "points": bracket.point_kind}
            for bracket_id, bracket in self.brackets.items()
        }
