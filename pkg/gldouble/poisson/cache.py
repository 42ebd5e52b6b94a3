"""In-memory cache of gradients keyed by function and sample point."""
import hashlib
import logging
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)


class GradientCache:
    """Simple in-memory cache for gradients at sample points."""

    def __init__(self, max_entries: int = 100_000):
        """
        Initialize gradient cache.

        Args:
            max_entries: Entry count beyond which the cache is flushed
        """
        self.cache: Dict[str, Any] = {}
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0

    def _get_cache_key(self, bracket: str, label: Optional[str], point_digest: str) -> Optional[str]:
        """Generate cache key from bracket name, function label and point digest."""
        # Unlabelled evaluators (closures) are never cached
        if not label:
            return None
        return hashlib.sha256(f"{bracket}|{label}|{point_digest}".encode()).hexdigest()

    def get(self, bracket: str, label: Optional[str], point_digest: str) -> Optional[Any]:
        """
        Get gradients from cache.

        Args:
            bracket: Bracket name the gradients were computed for
            label: Function label
            point_digest: Digest of the sample point

        Returns:
            Cached gradients or None if not cached
        """
        cache_key = self._get_cache_key(bracket, label, point_digest)
        if not cache_key:
            return None
        entry = self.cache.get(cache_key)
        if entry is None:
            self.misses += 1
        else:
            self.hits += 1
        return entry

    def set(self, bracket: str, label: Optional[str], point_digest: str, grads: Any) -> None:
        """Store gradients in cache."""
        cache_key = self._get_cache_key(bracket, label, point_digest)
        if not cache_key:
            return
        if len(self.cache) >= self.max_entries:
            self.clear()
        self.cache[cache_key] = grads

    def clear(self) -> None:
        """Clear all cache entries."""
        self.cache.clear()
        logger.info("Gradient cache cleared")

    def size(self) -> int:
        """Get number of cached entries."""
        return len(self.cache)
