# -*- coding: utf-8 -*-
from geocomm._typing import Any, Callable, Dict, List
from geocomm.detection import detect
from geocomm.graph import Network
from geocomm.maps import Variant
from geocomm.metrics import random_partition
from geocomm.modularity import Partition

__all__ = ["MethodRegistry", "registry"]



class MethodRegistry:
    """
    Named community detection methods: ```fn(net, **kwargs) -> Partition```.
    The experiment runner looks methods up by name.
    """
    def __init__(self):
        self._methods: Dict[str, Callable[..., Partition]] = {}

    def register(self, name: str):
        """Decorator to register a function as a method."""
        def decorator(func: Callable[..., Partition]):
            self._methods[name] = func
            return func
        return decorator

    def call(self, name: str, net: Network, **kwargs) -> Any:
        """Runs a method by name. Errors propagate to the caller."""
        if name not in self._methods:
            raise ValueError(
                f"Method '{name}' not found (have {', '.join(self.list_methods())})."
            )
        return self._methods[name](net, **kwargs)

    def list_methods(self) -> List[str]:
        return list(self._methods.keys())

    def __contains__(self, name: str) -> bool:
        return name in self._methods


# Global instance
registry = MethodRegistry()


def _detector(variant: Variant):
    def run(net: Network, **kwargs) -> Partition:
        kwargs.pop("community_count", None)
        return detect(net, variant, **kwargs).partition
    run.__name__ = f"detect_{variant.value}"
    return run


for _variant in Variant:
    registry.register(_variant.value)(_detector(_variant))


@registry.register("random")
def _random(net: Network, community_count: int = 10, seed: int = None, **kwargs) -> Partition:
    return random_partition(net, community_count, seed)
