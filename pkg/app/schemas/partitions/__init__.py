from .partition import Block, Partition, format_block

__all__ = ["Block", "Partition", "format_block"]
