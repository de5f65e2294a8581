from __future__ import annotations

from typing import Any, Callable, TypeVar

T = TypeVar("T")


class Cacheable:
    """Supports caching return values of derived quantities.

    Subclasses are expected to be immutable once constructed, so a cached
    value never goes stale. `clear_cache()` exists for subclasses that
    replace their payload in place.

    Attributes:
        _cache_: Mapping from method names to cached values.
    """

    def __init__(self) -> None:
        self._cache_: dict[str, Any] = {}

    def clear_cache(self) -> None:
        self._cache_ = {}

    def is_cached(self, name: str) -> bool:
        return name in self._cache_

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}"


def cached(func: Callable[..., T]) -> Callable[..., T]:
    """Decorator to cache the return value of an argument-less method.

    Raises:
        TypeError: If the object of decorated method is not a Cacheable object.
    """
    key = func.__name__

    def wrapper(self: Cacheable) -> T:
        if not isinstance(self, Cacheable):
            raise TypeError(
                f"@cached must be used on a Cacheable object: {type(self)}")
        if key in self._cache_:
            return self._cache_[key]
        return self._cache_.setdefault(key, func(self))

    wrapper.__name__ = key
    wrapper.__doc__ = func.__doc__
    return wrapper
