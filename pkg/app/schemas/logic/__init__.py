from .partition_logic import LogicElement, LogicMode, PartitionLogic, TwoValuedState

__all__ = ["LogicElement", "LogicMode", "PartitionLogic", "TwoValuedState"]
