from .combined_map import CombinedMap, Configuration, Pair

__all__ = ["CombinedMap", "Configuration", "Pair"]
